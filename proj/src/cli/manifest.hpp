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
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rbmtfi::cli {

std::string sha256_hex(std::string_view data);

/// One output directory of a CLI run. The manifest is written with status
/// "running" when the run starts and rewritten with file digests and status
/// "complete" by finish(). Every artifact goes through write().
class RunDirectory {
 public:
  static constexpr const char* kManifestName = "manifest.json";

  /// Creates `dir` if needed. Refuses a directory that already holds a
  /// manifest unless `force` is set.
  RunDirectory(std::filesystem::path dir, bool force, std::string command,
               std::map<std::string, std::string> config, std::uint64_t seed);

  const std::filesystem::path& path() const { return dir_; }

  /// Atomically writes `relative` under the run directory and records its digest.
  void write(const std::string& relative, std::string_view contents);

  void add_note(const std::string& key, const std::string& value) { notes_[key] = value; }

  void finish(bool ok);

 private:
  void write_manifest(const std::string& status) const;

  std::filesystem::path dir_;
  std::string command_;
  std::map<std::string, std::string> config_;
  std::uint64_t seed_;
  std::string started_;
  std::string finished_;
  std::map<std::string, std::string> notes_;
  std::vector<std::pair<std::string, std::string>> digests_;
};

}  // namespace rbmtfi::cli
