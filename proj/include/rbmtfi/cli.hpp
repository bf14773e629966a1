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
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rbmtfi::cli {

/// Flat key-value settings: one `key = value` per line, `#` starts a comment.
class Settings {
 public:
  static Settings parse(std::string_view text, const std::string& origin = "config");
  static Settings load(const std::filesystem::path& path);

  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  /// Typed getters; missing or malformed keys raise ConfigurationError naming
  /// the key.
  std::string get_string(const std::string& key) const;
  double get_real(const std::string& key) const;
  long long get_integer(const std::string& key) const;
  std::uint64_t get_seed(const std::string& key) const;

  double get_real(const std::string& key, double fallback) const;
  long long get_integer(const std::string& key, long long fallback) const;

  /// Rejects keys outside `allowed`, naming the first offender.
  void check_keys(const std::vector<std::string>& allowed) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Parses "a:b:step" (inclusive, rounded to the step) or "x,y,z".
std::vector<double> parse_real_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

/// Entry point of the `rbmtfi` executable. Returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rbmtfi::cli
