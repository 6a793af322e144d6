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

#ifndef XXZSWAP_TABLE_H
#define XXZSWAP_TABLE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace xxzswap {

using Cell = std::variant<double, int64_t, bool, std::string>;

/// Rectangular result table written as CSV (header row, comma separator) or as a JSON
/// array of row objects. Doubles are rendered with 12 significant digits in both formats,
/// so reading either one back yields identical values.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(const std::string &name);

/// "%.12g"; non-finite values become "nan" / "inf" / "-inf".
std::string format_number(double v);

void write_csv(const Table &table, std::ostream &out);
void write_json(const Table &table, std::ostream &out);
void write_table(const Table &table, OutputFormat format, std::ostream &out);

}  // namespace xxzswap

#endif
