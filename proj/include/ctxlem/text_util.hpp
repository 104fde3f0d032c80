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

#ifndef CTXLEM_TEXT_UTIL_HPP
#define CTXLEM_TEXT_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ctxlem {

std::vector<std::string> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> split_ws(std::string_view s);

std::string trim(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Splits into lines on '\n'; a trailing newline does not produce an empty
// final line. '\r' before '\n' is dropped.
std::vector<std::string> split_lines(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ctxlem

#endif  // CTXLEM_TEXT_UTIL_HPP
