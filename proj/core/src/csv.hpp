// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef GROUNDML_SRC_CSV_HPP_
#define GROUNDML_SRC_CSV_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace groundml::csv {

// Splits on ',' without quoting support; trims a trailing '\r'.
std::vector<std::string_view> split(std::string_view line);

// Whole-field parse; leading/trailing spaces tolerated.
std::optional<double> parse_double(std::string_view field);

std::string_view trim(std::string_view s);

// Reads the next line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no);

}  // namespace groundml::csv

#endif  // GROUNDML_SRC_CSV_HPP_
