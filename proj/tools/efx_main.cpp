// Copyright 2026 The efx-chores Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efx/algorithms.hpp"
#include "efx/errors.hpp"
#include "efx/generator.hpp"
#include "efx/io.hpp"
#include "efx/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;       // checks failed (e.g. allocation not EFX)
constexpr int kExitInput = 2;        // unreadable/invalid input
constexpr int kExitInapplicable = 3; // no algorithm, or enumeration over cap

double ms_since(std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(elapsed).count();
}

efx::RegimeKind parse_regime_or_throw(const std::string& name) {
  auto kind = efx::regime_from_string(name);
  if (!kind || *kind == efx::RegimeKind::kUnsupported)
    throw efx::InputError("unknown regime: " + name +
                          " (expect small_m, identical_ordering, bivalued_three)");
  return *kind;
}

std::string output_path_for(const std::string& base, const std::string& regime,
                            bool unique) {
  std::string stem = base;
  const std::string suffix = ".json";
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  if (unique) return stem + suffix;
  return stem + "." + regime + suffix;
}

int cmd_solve(const std::string& instance_path,
              const std::optional<std::string>& regime_filter,
              const std::optional<std::string>& out_path) {
  const efx::Instance inst = efx::read_instance_file(instance_path);
  std::optional<efx::RegimeKind> filter;
  if (regime_filter) filter = parse_regime_or_throw(*regime_filter);

  const std::vector<efx::Regime> regimes = efx::classify_regimes(inst);
  std::cout << "instance: " << instance_path << " (n=" << inst.n()
            << ", m=" << inst.m() << ")\n";
  std::cout << "regimes:";
  for (const auto& r : regimes) std::cout << " " << efx::to_string(r.kind);
  std::cout << "\n";

  struct Row {
    std::string name;
    efx::Allocation allocation;
    double ms;
  };
  std::vector<Row> rows;
  for (const auto& regime : regimes) {
    if (regime.kind == efx::RegimeKind::kUnsupported) continue;
    if (filter && regime.kind != *filter) continue;
    const auto start = std::chrono::steady_clock::now();
    std::optional<efx::Allocation> alloc;
    switch (regime.kind) {
      case efx::RegimeKind::kSmallM:
        alloc = efx::solve_small_m(inst);
        break;
      case efx::RegimeKind::kIdenticalOrderingAllButOne:
        alloc = efx::solve_identical_ordering(inst, regime.special);
        break;
      case efx::RegimeKind::kBivaluedThreeAgents:
        alloc = efx::solve_bivalued_three(inst);
        break;
      case efx::RegimeKind::kUnsupported:
        break;
    }
    if (alloc)
      rows.push_back(Row{efx::to_string(regime.kind), std::move(*alloc),
                         ms_since(start)});
  }

  if (rows.empty()) {
    if (filter) {
      std::cout << "no applicable algorithm for requested regime\n";
    } else {
      std::cout << "no applicable algorithm for this instance\n";
    }
    return kExitInapplicable;
  }

  bool all_efx = true;
  const std::string base = out_path ? *out_path : instance_path + ".alloc";
  for (const auto& row : rows) {
    const bool efx_ok = efx::is_efx(inst, row.allocation);
    all_efx = all_efx && efx_ok;
    const std::string path =
        output_path_for(base, row.name, out_path && rows.size() == 1);
    efx::write_allocation_file(path, row.allocation);
    std::cout << "[" << row.name << "] EFX: " << (efx_ok ? "true" : "false")
              << "  time: " << row.ms << " ms  out: " << path << "\n";
  }
  return all_efx ? kExitOk : kExitFailed;
}

int cmd_verify(const std::string& instance_path, const std::string& alloc_path) {
  const efx::Instance inst = efx::read_instance_file(instance_path);
  const efx::Allocation alloc = efx::read_allocation_file(alloc_path);
  if (alloc.size() != inst.n())
    throw efx::InputError("allocation has " + std::to_string(alloc.size()) +
                          " bundles for " + std::to_string(inst.n()) + " agents");
  // Point at the offending chore before the envy checker rejects the shape.
  std::vector<int> seen(inst.m(), 0);
  for (int k = 0; k < alloc.size(); ++k) {
    for (efx::ChoreId e : alloc.bundle(k)) {
      if (e < 0 || e >= inst.m())
        throw efx::InputError("allocation names unknown chore " + std::to_string(e));
      seen[e] += 1;
    }
  }
  for (efx::ChoreId e = 0; e < inst.m(); ++e) {
    if (seen[e] == 0)
      throw efx::InputError("allocation omits chore " + std::to_string(e));
    if (seen[e] > 1)
      throw efx::InputError("allocation repeats chore " + std::to_string(e));
  }

  const efx::EnvyReport report = efx::evaluate_envy(inst, alloc);
  std::cout << "EFX: " << (report.efx ? "true" : "false") << "\n";
  std::cout << "EF1: " << (report.ef1 ? "true" : "false") << "\n";
  for (const auto& pair : report.pairs) {
    if (!pair.envies && !pair.strongly_envies) continue;
    std::cout << "agent " << pair.from << " -> agent " << pair.to << ": ";
    if (pair.strongly_envies) {
      std::cout << "strong envy (drop chore " << *pair.witness
                << " and still worse off)";
    } else {
      std::cout << "envy";
    }
    std::cout << "\n";
  }
  return report.efx ? kExitOk : kExitFailed;
}

int cmd_generate(const std::string& regime_name, int n, int m,
                 std::uint64_t seed, int cost_max, int eps_den,
                 const std::optional<std::string>& out_path) {
  efx::GeneratorSpec spec;
  spec.target = parse_regime_or_throw(regime_name);
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.cost_max = cost_max;
  spec.eps_denominator = eps_den;
  const efx::Instance inst = efx::generate_instance(spec);

  const auto regimes = efx::classify_regimes(inst);
  bool satisfied = false;
  for (const auto& r : regimes) satisfied = satisfied || r.kind == spec.target;
  efx::detail::ensure(satisfied, "generated instance misses its target regime");

  const std::string text = efx::instance_to_json(inst);
  if (out_path) {
    efx::write_instance_file(*out_path, inst);
    std::cout << "wrote " << *out_path << "\n";
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& instance_path, std::uint64_t cap,
                  bool list) {
  const efx::Instance inst = efx::read_instance_file(instance_path);
  if (!efx::assignment_count(inst, cap)) {
    std::cout << "assignment space n^m exceeds cap " << cap << "\n";
    return kExitInapplicable;
  }
  const std::vector<efx::Allocation> all = efx::enumerate_efx(inst, cap);
  std::cout << "efx allocations: " << all.size() << "\n";
  if (list) {
    for (const auto& alloc : all) {
      std::string line = efx::allocation_to_json(alloc);
      for (char& c : line) {
        if (c == '\n') c = ' ';
      }
      std::cout << line << "\n";
    }
  }
  return kExitOk;
}

int cmd_bench(const std::string& regime_name, int n, int m, std::uint64_t seed,
              int trials) {
  const efx::RegimeKind target = parse_regime_or_throw(regime_name);
  double total = 0;
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    efx::GeneratorSpec spec;
    spec.target = target;
    spec.n = n;
    spec.m = m;
    spec.seed = seed + static_cast<std::uint64_t>(t);
    const efx::Instance inst = efx::generate_instance(spec);
    const auto start = std::chrono::steady_clock::now();
    switch (target) {
      case efx::RegimeKind::kSmallM:
        efx::solve_small_m(inst);
        break;
      case efx::RegimeKind::kIdenticalOrderingAllButOne:
        efx::solve_identical_ordering(inst, inst.n() - 1);
        break;
      case efx::RegimeKind::kBivaluedThreeAgents:
        efx::solve_bivalued_three(inst);
        break;
      case efx::RegimeKind::kUnsupported:
        break;
    }
    const double ms = ms_since(start);
    total += ms;
    worst = std::max(worst, ms);
    std::cout << "trial " << t << ": " << ms << " ms\n";
  }
  if (trials > 0) {
    std::cout << "mean: " << total / trials << " ms  max: " << worst << " ms\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EFX allocation of indivisible chores: solvers, verification, "
               "enumeration"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string alloc_path;
  std::optional<std::string> regime_filter;
  std::optional<std::string> out_path;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--regime", regime_filter, "only run this regime's solver");
  solve->add_option("--out", out_path, "allocation output path");

  auto* verify = app.add_subcommand("verify", "Check an allocation against an instance");
  verify->add_option("instance", instance_path, "instance JSON file")->required();
  verify->add_option("allocation", alloc_path, "allocation JSON file")->required();

  std::string gen_regime = "small_m";
  int gen_n = 3;
  int gen_m = 6;
  std::uint64_t seed = 0;
  int cost_max = 100;
  int eps_den = 10;
  auto* generate = app.add_subcommand("generate", "Generate a regime-targeted instance");
  generate->add_option("--regime", gen_regime, "target regime")->required();
  generate->add_option("--n", gen_n, "agents");
  generate->add_option("--m", gen_m, "chores");
  generate->add_option("--seed", seed, "64-bit seed");
  generate->add_option("--cost-max", cost_max, "integer cost bound");
  generate->add_option("--eps-den", eps_den, "epsilon denominator (bivalued)");
  generate->add_option("--out", out_path, "write instance here instead of stdout");

  std::uint64_t cap = 10'000'000;
  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count all EFX allocations (small instances)");
  enumerate->add_option("instance", instance_path, "instance JSON file")->required();
  enumerate->add_option("--cap", cap, "max assignments to scan");
  enumerate->add_flag("--list", list, "print each EFX allocation");

  int trials = 5;
  auto* bench = app.add_subcommand("bench", "Time a solver on generated instances");
  bench->add_option("--regime", gen_regime, "target regime")->required();
  bench->add_option("--n", gen_n, "agents");
  bench->add_option("--m", gen_m, "chores");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--trials", trials, "number of instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(instance_path, regime_filter, out_path);
    if (verify->parsed()) return cmd_verify(instance_path, alloc_path);
    if (generate->parsed())
      return cmd_generate(gen_regime, gen_n, gen_m, seed, cost_max, eps_den, out_path);
    if (enumerate->parsed()) return cmd_enumerate(instance_path, cap, list);
    if (bench->parsed()) return cmd_bench(gen_regime, gen_n, gen_m, seed, trials);
  } catch (const efx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInput;
}
