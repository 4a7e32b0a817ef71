// Copyright 2026 The ghzw Authors
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


#ifndef GHZW_TOOLS_CSV_HPP_
#define GHZW_TOOLS_CSV_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ghzw::cli {

// Numeric table with a header row. Cells are written with 12 significant
// digits via std::to_chars, so output is independent of the C++ locale.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& row(std::size_t i) const { return rows_.at(i); }

  void add_row(const std::vector<double>& values);
  // For rows that mix labels with numbers.
  void add_text_row(std::vector<std::string> cells);

  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_number(double value);

}  // namespace ghzw::cli

#endif  // GHZW_TOOLS_CSV_HPP_
