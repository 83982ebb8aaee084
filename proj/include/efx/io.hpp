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

#ifndef EFX_IO_HPP_
#define EFX_IO_HPP_

#include <string>

#include "efx/allocation.hpp"
#include "efx/efx_graph.hpp"
#include "efx/instance.hpp"

namespace efx {

// Instance files: {"n": int, "m": int, "costs": [[cost, ...], ...]} where a
// cost is a JSON integer or a decimal string like "0.25" (parsed exactly).
// "p/q" strings are accepted as an extension so any instance serializes
// losslessly. Non-integer JSON numbers are rejected; write them as strings.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);
Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

// Allocation files: {"bundles": [[chore ids...], ...]}, 0-based, bundle k
// belongs to agent k.
Allocation parse_allocation_json(const std::string& text);
std::string allocation_to_json(const Allocation& alloc);
Allocation read_allocation_file(const std::string& path);
void write_allocation_file(const std::string& path, const Allocation& alloc);

/// Debug dump: {"edges": [[agent, slot], ...], "min_edges": [...]}, sorted.
std::string graph_to_json(const EfxGraph& g);

}  // namespace efx

#endif  // EFX_IO_HPP_
