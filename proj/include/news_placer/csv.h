// Copyright 2026 The News Placer Authors.
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

// Minimal RFC 4180 style helpers and number formatting shared by every
// writer, so that reports are byte-stable.

#ifndef NEWS_PLACER_CSV_H_
#define NEWS_PLACER_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace news_placer {

// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

// Joins escaped fields with commas.
std::string csv_row(const std::vector<std::string>& fields);

// Splits one CSV line, honoring quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

// Reads a whole file; throws Error on failure.
std::string read_file(const std::string& path);

// Writes a whole file, creating parent directories; throws Error on failure.
void write_file(const std::string& path, std::string_view contents);

}  // namespace news_placer

#endif  // NEWS_PLACER_CSV_H_
