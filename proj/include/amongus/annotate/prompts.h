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

namespace amongus {

// Classifier prompt templates, compiled in from data/prompts. Placeholders are
// [TEXT] and, for deception, [DISCUSSION].
std::string_view speech_act_template();
std::string_view deception_template();

std::string fill_speech_act_prompt(std::string_view text);
std::string fill_deception_prompt(std::string_view discussion,
                                  std::string_view text);

}  // namespace amongus
