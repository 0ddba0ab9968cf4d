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

#include "amongus/agents/response_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace amongus {
namespace {

constexpr std::array<std::string_view, 3> kHeaders = {
    "[condensed memory]", "[thinking process]", "[action]"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Collapses whitespace, lowercases and drops decoration an LLM tends to add
// around a menu tag (quotes, asterisks, trailing punctuation).
std::string normalize_tag(std::string_view s) {
  std::string t = trim(s);
  auto strip = [&](auto pred) {
    while (!t.empty() && pred(t.front())) t.erase(t.begin());
    while (!t.empty() && pred(t.back())) t.pop_back();
  };
  strip([](char c) {
    return c == '"' || c == '\'' || c == '*' || c == '`' || c == '.' ||
           c == '!' || c == ' ' || c == '-';
  });
  std::string out;
  bool space = false;
  for (char c : t) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

struct Sections {
  std::array<std::optional<std::string>, 3> body;
};

Sections split_sections(std::string_view raw) {
  const std::string low = lower(raw);
  struct Hit {
    std::size_t pos;
    std::size_t which;
  };
  std::vector<Hit> hits;
  for (std::size_t h = 0; h < kHeaders.size(); ++h) {
    auto pos = low.find(kHeaders[h]);
    if (pos != std::string::npos) hits.push_back({pos, h});
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.pos < b.pos; });
  Sections out;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto start = hits[i].pos + kHeaders[hits[i].which].size();
    const auto end = i + 1 < hits.size() ? hits[i + 1].pos : raw.size();
    std::string body = trim(raw.substr(start, end - start));
    if (!body.empty() && body.front() == ':') body = trim(body.substr(1));
    out.body[hits[i].which] = std::move(body);
  }
  return out;
}

std::string strip_quotes(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
      s.back() == s.front()) {
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

bool is_speak(const Action& a) { return std::holds_alternative<action::Speak>(a); }

}  // namespace

ParsedResponse parse_response(std::string_view raw,
                              std::span<const Action> menu,
                              std::span<const std::string> names) {
  auto abstain = [&](std::string why) {
    return ParsedResponse{Abstention{std::string(raw), std::move(why)}};
  };
  if (trim(raw).empty()) return abstain("empty response");
  Sections s = split_sections(raw);
  if (!s.body[2]) return abstain("missing [Action] section");
  if (!s.body[0]) return abstain("missing [Condensed Memory] section");
  if (!s.body[1]) return abstain("missing [Thinking Process] section");

  const std::string& action_text = *s.body[2];
  const auto newline = action_text.find('\n');
  const std::string line = trim(action_text.substr(0, newline));
  const std::string norm = normalize_tag(line);
  if (norm.empty()) return abstain("empty action");

  AgentResponse response{*s.body[0], *s.body[1], action::Speak{}};

  const bool speak_offered = std::any_of(menu.begin(), menu.end(), is_speak);
  if (speak_offered && norm.rfind("speak", 0) == 0) {
    // The utterance may span several lines of the action section.
    auto low = lower(action_text);
    auto pos = low.find("speak") + 5;
    std::string text = trim(action_text.substr(pos));
    if (!text.empty() && text.front() == ':') text = trim(text.substr(1));
    text = strip_quotes(text);
    if (text.empty()) return abstain("empty utterance");
    response.action = action::Speak{std::move(text)};
    return response;
  }

  std::vector<const Action*> exact;
  std::vector<const Action*> prefix;
  for (const auto& a : menu) {
    if (is_speak(a)) continue;
    const std::string tag = normalize_tag(action_tag(a, names));
    if (tag == norm) {
      exact.push_back(&a);
    } else if (tag.rfind(norm, 0) == 0 ||
               (norm.rfind(tag, 0) == 0 && norm[tag.size()] == ' ')) {
      prefix.push_back(&a);
    }
  }
  if (exact.size() == 1) {
    response.action = *exact.front();
    return response;
  }
  if (exact.empty() && prefix.size() == 1) {
    response.action = *prefix.front();
    return response;
  }
  if (exact.size() > 1 || prefix.size() > 1) {
    return abstain("ambiguous action: " + line);
  }
  return abstain("action not on menu: " + line);
}

std::string render_response(const AgentResponse& r,
                            std::span<const std::string> names) {
  return "[Condensed Memory] " + r.condensed_memory + "\n[Thinking Process] " +
         r.thinking + "\n[Action] " + action_tag(r.action, names);
}

}  // namespace amongus
