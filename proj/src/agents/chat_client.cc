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

#include "amongus/agents/chat_client.h"

#include <chrono>
#include <cstdlib>
#include <regex>
#include <stdexcept>
#include <thread>

#include "httplib.h"

namespace amongus {

void to_json(Json& j, const ChatEndpointConfig& c) {
  j = Json{{"base_url", c.base_url},
           {"model_name", c.model_name},
           {"timeout_seconds", c.timeout_seconds},
           {"max_retries", c.max_retries},
           {"temperature", c.temperature},
           {"api_key_env", c.api_key_env},
           {"retry_backoff_ms", c.retry_backoff_ms}};
}

void from_json(const Json& j, ChatEndpointConfig& c) {
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("base_url", c.base_url);
  get("model_name", c.model_name);
  get("timeout_seconds", c.timeout_seconds);
  get("max_retries", c.max_retries);
  get("temperature", c.temperature);
  get("api_key_env", c.api_key_env);
  get("retry_backoff_ms", c.retry_backoff_ms);
}

ChatClient::ChatClient(ChatEndpointConfig config) : config_(std::move(config)) {
  static const std::regex kUrl(R"(^(https?)://([^/:]+)(:[0-9]+)?(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(config_.base_url, m, kUrl)) {
    throw std::invalid_argument("chat endpoint: malformed base_url '" +
                                config_.base_url + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (m[1] == "https") {
    throw std::invalid_argument("chat endpoint: https is not supported by this build");
  }
#endif
  scheme_host_port_ = m[1].str() + "://" + m[2].str() + m[3].str();
  path_ = m[4].matched ? m[4].str() : "/";
  if (config_.timeout_seconds <= 0) {
    throw std::invalid_argument("chat endpoint: timeout must be > 0");
  }
  if (config_.max_retries < 0) {
    throw std::invalid_argument("chat endpoint: max_retries must be >= 0");
  }
  if (config_.retry_backoff_ms < 0) {
    throw std::invalid_argument("chat endpoint: retry_backoff_ms must be >= 0");
  }
  if (!config_.api_key_env.empty()) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw std::invalid_argument("chat endpoint: environment variable " +
                                  config_.api_key_env + " is not set");
    }
    api_key_ = key;
  }
}

ChatResult ChatClient::complete(std::string_view user,
                                std::string_view system) const {
  Json messages = Json::array();
  if (!system.empty()) {
    messages.push_back(Json{{"role", "system"}, {"content", system}});
  }
  messages.push_back(Json{{"role", "user"}, {"content", user}});
  const std::string body = Json{{"model", config_.model_name},
                                {"messages", messages},
                                {"temperature", config_.temperature}}
                               .dump();
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(config_.timeout_seconds));
  ChatResult result;
  int backoff = config_.retry_backoff_ms;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0 && backoff > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
      backoff *= 2;
    }
    ++result.attempts;
    httplib::Client cli(scheme_host_port_);
    cli.set_connection_timeout(timeout);
    cli.set_read_timeout(timeout);
    cli.set_write_timeout(timeout);
    auto res = cli.Post(path_, headers, body, "application/json");
    if (!res) {
      result.last_status = 0;
      result.error = "transport: " + httplib::to_string(res.error());
      continue;
    }
    result.last_status = res->status;
    if (res->status == 429 || res->status >= 500) {
      result.error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      result.error = "HTTP " + std::to_string(res->status);
      return result;
    }
    try {
      const auto reply = Json::parse(res->body);
      const auto& content = reply.at("choices").at(0).at("message").at("content");
      result.text = content.is_string() ? content.get<std::string>() : "";
      result.error.clear();
    } catch (const std::exception& e) {
      result.error = std::string("malformed reply: ") + e.what();
    }
    return result;
  }
  return result;
}

std::string chat_complete(const ChatEndpointConfig& endpoint,
                          std::string_view prompt) {
  return ChatClient(endpoint).complete(prompt).text;
}

}  // namespace amongus
