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

#include <optional>
#include <string>
#include <string_view>

namespace amongus {

enum class SpeechActLabel {
  kRepresentatives,
  kDirectives,
  kCommissives,
  kExpressives,
  kDeclarations,
};

inline constexpr SpeechActLabel kAllSpeechActs[] = {
    SpeechActLabel::kRepresentatives, SpeechActLabel::kDirectives,
    SpeechActLabel::kCommissives, SpeechActLabel::kExpressives,
    SpeechActLabel::kDeclarations};

// kMissing marks an absent or uninterpretable classifier reply.
enum class DeceptionLabel { kFalsification, kConcealment, kEquivocation, kMissing };

inline constexpr DeceptionLabel kAllDeceptionLabels[] = {
    DeceptionLabel::kFalsification, DeceptionLabel::kConcealment,
    DeceptionLabel::kEquivocation, DeceptionLabel::kMissing};

// Stored label text for a speech-act reply that matched nothing.
inline constexpr std::string_view kUnclassifiable = "Unclassifiable";

const char* label_name(SpeechActLabel label);
const char* label_name(DeceptionLabel label);

// Reply normalization: trims whitespace, surrounding quotes and markup,
// trailing punctuation; case-folds; accepts singular or plural. Multi-word
// replies other than a label followed by its parenthetical gloss do not match.
std::optional<SpeechActLabel> parse_speech_act(std::string_view reply);
// Anything that is not one of the three strategies is kMissing.
DeceptionLabel parse_deception(std::string_view reply);

// Canonical label text for `reply`: a speech-act or deception label name, or
// "" when it matches neither. Idempotent.
std::string normalize_label(std::string_view reply);

}  // namespace amongus
