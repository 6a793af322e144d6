// Copyright 2026 The xxzswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xxzswap/table.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "xxzswap/errors.h"

namespace xxzswap {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw ValidationError("row has " + std::to_string(row.size()) + " cells but the table has " +
                              std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

OutputFormat parse_output_format(const std::string &name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ValidationError("unknown output format '" + name + "'; expected csv or json");
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(double v) const {
            return format_number(v);
        }
        std::string operator()(int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(bool v) const {
            return v ? "true" : "false";
        }
        std::string operator()(const std::string &v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) {
                return nullptr;
            }
            // Round through the 12-digit text so JSON and CSV carry the same value.
            return std::stod(format_number(v));
        }
        nlohmann::ordered_json operator()(int64_t v) const {
            return v;
        }
        nlohmann::ordered_json operator()(bool v) const {
            return v;
        }
        nlohmann::ordered_json operator()(const std::string &v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(const Table &table, std::ostream &out) {
    for (size_t c = 0; c < table.columns.size(); c++) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << cell_text(row[c]);
        }
        out << '\n';
    }
}

void write_json(const Table &table, std::ostream &out) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t c = 0; c < row.size(); c++) {
            obj[table.columns[c]] = cell_json(row[c]);
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void write_table(const Table &table, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::Csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

}  // namespace xxzswap
