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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "amongus/core/event.h"

namespace amongus {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const MapSpec& m);
void from_json(const Json& j, MapSpec& m);
void to_json(Json& j, const GameConfig& c);
void from_json(const Json& j, GameConfig& c);
// Action is a std::variant, so argument-dependent lookup cannot find these.
Json action_to_json(const Action& a);
Action action_from_json(const Json& j);
void to_json(Json& j, const UtteranceRecord& u);
void from_json(const Json& j, UtteranceRecord& u);
void to_json(Json& j, const Outcome& o);
void from_json(const Json& j, Outcome& o);
void to_json(Json& j, const Event& e);
void from_json(const Json& j, Event& e);
void to_json(Json& j, const GameRecord& r);
void from_json(const Json& j, GameRecord& r);

// One JSONL line (no trailing newline). Field order is fixed.
std::string encode_record(const GameRecord& record);
GameRecord decode_record(std::string_view line);

MapSpec load_map_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace amongus
