// Copyright 2026 The ctxlem Authors
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

#include "ctxlem/config.hpp"

#include <cerrno>
#include <cstdlib>

#include "ctxlem/error.hpp"
#include "ctxlem/text_util.hpp"

namespace ctxlem {

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig cfg;
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(text)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value, got '" + raw + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  return parse(read_file(path));
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

namespace {
template <typename T, typename Fn>
T convert(const std::map<std::string, std::string>& values,
          const std::string& key, T fallback, Fn fn, const char* kind) {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  errno = 0;
  char* end = nullptr;
  T value = fn(it->second.c_str(), &end);
  if (errno != 0 || end == it->second.c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': expected " + kind + ", got '" +
                      it->second + "'");
  return value;
}
}  // namespace

std::int64_t KeyValueConfig::get_int(const std::string& key,
                                     std::int64_t fallback) const {
  return convert<std::int64_t>(
      values_, key, fallback,
      [](const char* s, char** e) { return std::strtoll(s, e, 10); },
      "an integer");
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key,
                                       std::uint64_t fallback) const {
  std::int64_t v = get_int(key, static_cast<std::int64_t>(fallback));
  if (v < 0) throw ConfigError("key '" + key + "': expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

double KeyValueConfig::get_double(const std::string& key,
                                  double fallback) const {
  return convert<double>(
      values_, key, fallback,
      [](const char* s, char** e) { return std::strtod(s, e); }, "a number");
}

}  // namespace ctxlem
