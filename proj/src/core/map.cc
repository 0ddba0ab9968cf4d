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

#include "amongus/core/map.h"

#include <algorithm>
#include <deque>
#include <set>

namespace amongus {
namespace {

bool edge_joins(const Edge& e, std::string_view a, std::string_view b) {
  return (e.first == a && e.second == b) || (e.first == b && e.second == a);
}

std::vector<std::string> exits(const std::vector<std::string>& rooms,
                               const std::vector<Edge>& edges,
                               std::string_view room) {
  std::vector<std::string> out;
  for (const auto& r : rooms) {
    if (r == room) continue;
    for (const auto& e : edges) {
      if (edge_joins(e, room, r)) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool MapSpec::has_room(std::string_view room) const {
  return std::find(rooms.begin(), rooms.end(), room) != rooms.end();
}

std::vector<std::string> MapSpec::neighbors(std::string_view room) const {
  return exits(rooms, adjacency, room);
}

std::vector<std::string> MapSpec::vent_exits(std::string_view room) const {
  return exits(rooms, vents, room);
}

bool MapSpec::adjacent(std::string_view a, std::string_view b) const {
  return std::any_of(adjacency.begin(), adjacency.end(),
                     [&](const Edge& e) { return edge_joins(e, a, b); });
}

bool MapSpec::vent_connected(std::string_view a, std::string_view b) const {
  return std::any_of(vents.begin(), vents.end(),
                     [&](const Edge& e) { return edge_joins(e, a, b); });
}

int MapSpec::distance(std::string_view from, std::string_view to,
                      bool use_vents) const {
  if (!has_room(from) || !has_room(to)) return -1;
  if (from == to) return 0;
  std::set<std::string, std::less<>> seen{std::string(from)};
  std::deque<std::pair<std::string, int>> frontier{{std::string(from), 0}};
  while (!frontier.empty()) {
    auto [room, d] = frontier.front();
    frontier.pop_front();
    auto next = neighbors(room);
    if (use_vents) {
      auto v = vent_exits(room);
      next.insert(next.end(), v.begin(), v.end());
    }
    for (auto& n : next) {
      if (n == to) return d + 1;
      if (seen.insert(n).second) frontier.emplace_back(n, d + 1);
    }
  }
  return -1;
}

std::vector<std::string> MapSpec::problems() const {
  std::vector<std::string> out;
  if (rooms.empty()) {
    out.push_back("map has no rooms");
    return out;
  }
  std::set<std::string> unique(rooms.begin(), rooms.end());
  if (unique.size() != rooms.size()) out.push_back("duplicate room names");
  if (!has_room(cafeteria)) {
    out.push_back("cafeteria '" + cafeteria + "' is not a room");
  }
  auto check_edges = [&](const std::vector<Edge>& edges, const char* what) {
    for (const auto& [a, b] : edges) {
      if (a == b) out.push_back(std::string(what) + " self-edge at " + a);
      if (!has_room(a) || !has_room(b)) {
        out.push_back(std::string(what) + " edge " + a + "-" + b +
                      " references an unknown room");
      }
    }
  };
  check_edges(adjacency, "adjacency");
  check_edges(vents, "vent");
  for (const auto& r : rooms) {
    if (distance(rooms.front(), r) < 0) {
      out.push_back("adjacency graph is not connected (" + r +
                    " unreachable from " + rooms.front() + ")");
      break;
    }
  }
  return out;
}

MapSpec default_map() {
  MapSpec m;
  m.rooms = {"Cafeteria", "Weapons", "Navigation", "Admin",
             "Storage",   "Electrical", "Medbay",  "O2"};
  m.adjacency = {{"Cafeteria", "Weapons"},  {"Cafeteria", "Admin"},
                 {"Cafeteria", "Medbay"},   {"Weapons", "O2"},
                 {"O2", "Navigation"},      {"Navigation", "Storage"},
                 {"Admin", "Storage"},      {"Storage", "Electrical"},
                 {"Electrical", "Medbay"}};
  m.vents = {{"Weapons", "Navigation"}, {"Medbay", "Storage"}};
  m.cafeteria = "Cafeteria";
  return m;
}

}  // namespace amongus
