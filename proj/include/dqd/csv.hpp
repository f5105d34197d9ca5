// Copyright 2026 The DQD Decoherence Authors
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

#ifndef DQD_CSV_HPP_
#define DQD_CSV_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dqd {

using CsvField = std::variant<double, long long, bool, std::string>;

/// Shortest round-trip representation of a double.
std::string format_double(double value);

/// Comma separated, LF line endings, header always written. String fields
/// containing separators or quotes are quoted.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<CsvField> row);

    const std::vector<std::string> &header() const { return header_; }
    std::size_t row_count() const { return rows_.size(); }
    std::string render() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvField>> rows_;
};

}  // namespace dqd

#endif  // DQD_CSV_HPP_
