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

#include "efx/io.hpp"

#include <cstdio>
#include <doctest.h>
#include <filesystem>
#include <string>

#include "efx/errors.hpp"
#include "efx/generator.hpp"
#include "helpers.hpp"

using namespace efx;

TEST_CASE("instance JSON parses integers and decimal strings exactly") {
  const Instance inst = parse_instance_json(R"({
    "n": 2, "m": 3,
    "costs": [[1, "0.5", "2.25"], ["7", 0, "1/3"]]
  })");
  CHECK(inst.n() == 2);
  CHECK(inst.m() == 3);
  CHECK(inst.cost(0, 1) == Rational(1, 2));
  CHECK(inst.cost(0, 2) == Rational(9, 4));
  CHECK(inst.cost(1, 0) == Rational(7));
  CHECK(inst.cost(1, 2) == Rational(1, 3));
}

TEST_CASE("instance JSON rejections") {
  CHECK_THROWS_AS(parse_instance_json("not json"), InputError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 1, "m": 1})"), InputError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 1, "m": 1, "costs": [[0.5]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 1, "m": 2, "costs": [[1]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 2, "m": 1, "costs": [[1], [2], [3]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 1, "m": 1, "costs": [[true]]})"),
                  InputError);
}

TEST_CASE("instance serialization round-trips values") {
  SplitMix64 rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + rng.below_int(4);
    const int m = rng.below_int(6);
    std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m));
    for (auto& row : costs) {
      for (auto& c : row) {
        // Mix integers with finite decimals (denominator 2^a 5^b).
        const int den = std::array<int, 4>{1, 2, 10, 40}[rng.below_int(4)];
        c = Rational(rng.below_int(500), den);
      }
    }
    const Instance inst(n, m, costs);
    const Instance back = parse_instance_json(instance_to_json(inst));
    REQUIRE(back.n() == n);
    REQUIRE(back.m() == m);
    for (AgentId i = 0; i < n; ++i) {
      for (ChoreId e = 0; e < m; ++e) CHECK(back.cost(i, e) == inst.cost(i, e));
    }
  }
}

TEST_CASE("non-decimal rationals survive a dump/parse cycle via p/q") {
  const Instance inst(1, 2, {{Rational(1, 3), Rational(22, 7)}});
  const Instance back = parse_instance_json(instance_to_json(inst));
  CHECK(back.cost(0, 0) == Rational(1, 3));
  CHECK(back.cost(0, 1) == Rational(22, 7));
}

TEST_CASE("allocation JSON round-trip and rejections") {
  const Allocation alloc =
      Allocation::from_bundles(OwnerKind::kAgents, {{2, 0}, {}, {1}});
  const Allocation back = parse_allocation_json(allocation_to_json(alloc));
  CHECK(back == alloc);
  CHECK(back.bundle(0) == std::vector<ChoreId>{0, 2});

  CHECK_THROWS_AS(parse_allocation_json("[]"), InputError);
  CHECK_THROWS_AS(parse_allocation_json(R"({"bundles": [[0], [0]]})"), InputError);
  CHECK_THROWS_AS(parse_allocation_json(R"({"bundles": [["x"]]})"), InputError);
}

TEST_CASE("file round-trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "efx_io_test";
  fs::create_directories(dir);
  const std::string inst_path = (dir / "inst.json").string();
  const std::string alloc_path = (dir / "alloc.json").string();

  const Instance inst = testing::golden_instance();
  write_instance_file(inst_path, inst);
  const Instance inst_back = read_instance_file(inst_path);
  CHECK(instance_to_json(inst_back) == instance_to_json(inst));

  const Allocation alloc =
      Allocation::from_bundles(OwnerKind::kAgents, {{0, 1}, {2, 3}, {4, 5}});
  write_allocation_file(alloc_path, alloc);
  CHECK(read_allocation_file(alloc_path) == alloc);

  CHECK_THROWS_AS(read_instance_file((dir / "missing.json").string()), InputError);
  fs::remove_all(dir);
}

TEST_CASE("graph dump lists edges and min-edges in order") {
  const EfxGraph g =
      build_graph(testing::golden_instance(), testing::golden_slot_allocation());
  CHECK(graph_to_json(g) ==
        "{\n"
        "  \"edges\": [\n"
        "    [\n      0,\n      0\n    ],\n"
        "    [\n      1,\n      1\n    ],\n"
        "    [\n      1,\n      2\n    ],\n"
        "    [\n      2,\n      0\n    ],\n"
        "    [\n      2,\n      1\n    ],\n"
        "    [\n      2,\n      2\n    ]\n"
        "  ],\n"
        "  \"min_edges\": [\n"
        "    [\n      0,\n      0\n    ],\n"
        "    [\n      1,\n      2\n    ],\n"
        "    [\n      2,\n      0\n    ],\n"
        "    [\n      2,\n      1\n    ],\n"
        "    [\n      2,\n      2\n    ]\n"
        "  ]\n"
        "}\n");
}
