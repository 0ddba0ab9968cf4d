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

#include "amongus/annotate/labels.h"

#include <algorithm>
#include <cctype>

namespace amongus {
namespace {

bool strip_char(unsigned char c) {
  return std::isspace(c) || c == '"' || c == '\'' || c == '*' || c == '`' ||
         c == '.' || c == ',' || c == '!' || c == ':' || c == ';' || c == '_';
}

std::string fold(std::string_view reply) {
  std::string s(reply);
  // "Falsification (lying)" echoes the option list; keep the word only.
  if (auto p = s.find('('); p != std::string::npos) s.erase(p);
  auto b = std::find_if_not(s.begin(), s.end(),
                            [](char c) { return strip_char(c); });
  auto e = std::find_if_not(s.rbegin(), s.rend(),
                            [](char c) { return strip_char(c); }).base();
  std::string out = b < e ? std::string(b, e) : std::string();
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (out.size() > 1 && out.back() == 's') out.pop_back();
  return out;
}

}  // namespace

const char* label_name(SpeechActLabel label) {
  switch (label) {
    case SpeechActLabel::kRepresentatives:
      return "Representatives";
    case SpeechActLabel::kDirectives:
      return "Directives";
    case SpeechActLabel::kCommissives:
      return "Commissives";
    case SpeechActLabel::kExpressives:
      return "Expressives";
    case SpeechActLabel::kDeclarations:
      return "Declarations";
  }
  return "?";
}

const char* label_name(DeceptionLabel label) {
  switch (label) {
    case DeceptionLabel::kFalsification:
      return "Falsification";
    case DeceptionLabel::kConcealment:
      return "Concealment";
    case DeceptionLabel::kEquivocation:
      return "Equivocation";
    case DeceptionLabel::kMissing:
      return "Missing";
  }
  return "?";
}

std::optional<SpeechActLabel> parse_speech_act(std::string_view reply) {
  const std::string f = fold(reply);
  for (auto label : kAllSpeechActs) {
    if (f == fold(label_name(label))) return label;
  }
  return std::nullopt;
}

DeceptionLabel parse_deception(std::string_view reply) {
  const std::string f = fold(reply);
  for (auto label : {DeceptionLabel::kFalsification, DeceptionLabel::kConcealment,
                     DeceptionLabel::kEquivocation}) {
    if (f == fold(label_name(label))) return label;
  }
  return DeceptionLabel::kMissing;
}

std::string normalize_label(std::string_view reply) {
  if (auto s = parse_speech_act(reply)) return label_name(*s);
  auto d = parse_deception(reply);
  if (d != DeceptionLabel::kMissing) return label_name(d);
  if (fold(reply) == "missing") return label_name(DeceptionLabel::kMissing);
  return {};
}

}  // namespace amongus
