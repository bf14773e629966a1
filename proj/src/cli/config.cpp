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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rbmtfi/cli.hpp"
#include "rbmtfi/errors.hpp"
#include "rbmtfi/io.hpp"

namespace rbmtfi::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Settings Settings::parse(std::string_view text, const std::string& origin) {
  Settings s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigurationError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const auto key = trim(std::string_view(body).substr(0, eq));
    const auto value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigurationError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (s.has(key)) {
      throw ConfigurationError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    s.set(key, value);
  }
  return s;
}

Settings Settings::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::string Settings::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigurationError("missing required key '" + key + "'");
  return it->second;
}

double Settings::get_real(const std::string& key) const {
  try {
    const double v = parse_real(get_string(key));
    if (!std::isfinite(v)) throw ConfigurationError("not finite");
    return v;
  } catch (const ConfigurationError& e) {
    if (!has(key)) throw;
    throw ConfigurationError("key '" + key + "': " + e.what());
  }
}

long long Settings::get_integer(const std::string& key) const {
  try {
    return parse_integer(get_string(key));
  } catch (const ConfigurationError& e) {
    if (!has(key)) throw;
    throw ConfigurationError("key '" + key + "': " + e.what());
  }
}

std::uint64_t Settings::get_seed(const std::string& key) const {
  const auto v = get_integer(key);
  if (v < 0) throw ConfigurationError("key '" + key + "': seed must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

double Settings::get_real(const std::string& key, double fallback) const {
  return has(key) ? get_real(key) : fallback;
}

long long Settings::get_integer(const std::string& key, long long fallback) const {
  return has(key) ? get_integer(key) : fallback;
}

void Settings::check_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [k, v] : values_) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ConfigurationError("unknown key '" + k + "'");
    }
  }
}

std::vector<double> parse_real_list(std::string_view text) {
  const std::string s(text);
  std::vector<double> out;
  if (std::count(s.begin(), s.end(), ':') == 2) {
    const auto a = s.find(':');
    const auto b = s.find(':', a + 1);
    const double lo = parse_real(s.substr(0, a));
    const double hi = parse_real(s.substr(a + 1, b - a - 1));
    const double step = parse_real(s.substr(b + 1));
    if (!(step > 0.0) || hi < lo) throw ConfigurationError("bad range '" + s + "'");
    const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long k = 0; k <= n; ++k) {
      // snap to the step's decimal grid so that e.g. 1.0 is exactly 1
      const double x = lo + static_cast<double>(k) * step;
      out.push_back(std::round(x * 1e9) / 1e9);
    }
    return out;
  }
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_real(trim(item)));
  if (out.empty()) throw ConfigurationError("empty list");
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<int>(parse_integer(trim(item))));
  if (out.empty()) throw ConfigurationError("empty list");
  return out;
}

}  // namespace rbmtfi::cli
