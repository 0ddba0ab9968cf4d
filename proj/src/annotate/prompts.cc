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

#include "amongus/annotate/prompts.h"

#include "amongus/annotate/prompt_data.h"

namespace amongus {
namespace {

void replace_once(std::string& s, std::string_view key, std::string_view value) {
  if (auto p = s.find(key); p != std::string::npos) s.replace(p, key.size(), value);
}

}  // namespace

std::string_view speech_act_template() {
  return {reinterpret_cast<const char*>(prompt_data::kSpeechActPromptBytes),
          prompt_data::kSpeechActPromptBytes_size};
}

std::string_view deception_template() {
  return {reinterpret_cast<const char*>(prompt_data::kDeceptionPromptBytes),
          prompt_data::kDeceptionPromptBytes_size};
}

std::string fill_speech_act_prompt(std::string_view text) {
  std::string out(speech_act_template());
  replace_once(out, "[TEXT]", text);
  return out;
}

// The text slot is filled first. [DISCUSSION] sits earlier in the template, so
// placeholder-looking strings inside either value are left alone.
std::string fill_deception_prompt(std::string_view discussion,
                                  std::string_view text) {
  std::string out(deception_template());
  const auto text_at = out.find("[TEXT]");
  out.replace(text_at, 6, text);
  replace_once(out, "[DISCUSSION]", discussion);
  return out;
}

}  // namespace amongus
