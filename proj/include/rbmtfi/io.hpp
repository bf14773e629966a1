// Copyright 2026 The rbmtfi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rbmtfi {

/// Shortest-safe text form of a double: 17 significant digits, so that
/// parsing it back yields the identical bit pattern.
std::string format_real(double x);

/// Parses a full string as a double; throws ConfigurationError otherwise.
double parse_real(std::string_view text);
long long parse_integer(std::string_view text);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// Comma-separated table with a single header row, built in memory.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws ConfigurationError if the cell count differs from the header.
  void add_row(std::vector<std::string> cells);

  std::size_t n_rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string cell(double x) { return format_real(x); }
inline std::string cell(int x) { return std::to_string(x); }
inline std::string cell(long long x) { return std::to_string(x); }
inline std::string cell(std::uint64_t x) { return std::to_string(x); }

/// Deterministic per-stream seed from a master seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace rbmtfi
