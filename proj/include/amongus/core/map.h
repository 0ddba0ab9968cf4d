// Copyright 2026 The amongus-sim Authors
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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amongus {

using Edge = std::pair<std::string, std::string>;

// Room graph for a game. Adjacency and vent edges are undirected; each edge
// is stored once in the order it was declared.
struct MapSpec {
  std::vector<std::string> rooms;
  std::vector<Edge> adjacency;
  std::vector<Edge> vents;
  std::string cafeteria;

  bool has_room(std::string_view room) const;
  // Rooms reachable in one step, in declaration order of `rooms`.
  std::vector<std::string> neighbors(std::string_view room) const;
  std::vector<std::string> vent_exits(std::string_view room) const;
  bool adjacent(std::string_view a, std::string_view b) const;
  bool vent_connected(std::string_view a, std::string_view b) const;

  // Hop distance over adjacency (and vents when `use_vents`). -1 when
  // unreachable.
  int distance(std::string_view from, std::string_view to,
               bool use_vents = false) const;

  // Human-readable problems; empty when the map is usable.
  std::vector<std::string> problems() const;

  bool operator==(const MapSpec&) const = default;
};

// Eight-room layout shipped in data/maps/default_map.json.
MapSpec default_map();

}  // namespace amongus
