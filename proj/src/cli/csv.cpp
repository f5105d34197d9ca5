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

#include "dqd/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "dqd/errors.hpp"

namespace dqd {
namespace {

std::string escape(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_field(const CsvField &field) {
    struct Visitor {
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string &v) const { return escape(v); }
    };
    return std::visit(Visitor{}, field);
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0;  // no "-0"
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc()) throw Error("format_double: to_chars failed");
    return std::string(buffer.data(), ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw InvalidArgument("CsvTable: empty header");
}

void CsvTable::add_row(std::vector<CsvField> row) {
    if (row.size() != header_.size()) {
        throw DimensionError("CsvTable: row has " + std::to_string(row.size()) + " fields, header has " +
                             std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

std::string CsvTable::render() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += escape(header_[i]);
    }
    out += '\n';
    for (const auto &row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += render_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace dqd
