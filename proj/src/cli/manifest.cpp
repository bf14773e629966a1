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

#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <memory>

#include <json.hpp>

#include "rbmtfi/errors.hpp"
#include "rbmtfi/io.hpp"

#ifndef RBMTFI_VERSION
#define RBMTFI_VERSION "unknown"
#endif

namespace rbmtfi::cli {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error("sha256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

RunDirectory::RunDirectory(std::filesystem::path dir, bool force, std::string command,
                           std::map<std::string, std::string> config, std::uint64_t seed)
    : dir_(std::move(dir)),
      command_(std::move(command)),
      config_(std::move(config)),
      seed_(seed),
      started_(utc_now()) {
  if (std::filesystem::exists(dir_ / kManifestName) && !force) {
    throw ConfigurationError("output directory " + dir_.string() +
                             " already holds a run; pass --force to overwrite");
  }
  std::filesystem::create_directories(dir_);
  write_manifest("running");
}

void RunDirectory::write(const std::string& relative, std::string_view contents) {
  const auto target = dir_ / relative;
  std::filesystem::create_directories(target.parent_path());
  write_file_atomic(target, contents);
  digests_.emplace_back(relative, sha256_hex(contents));
}

void RunDirectory::finish(bool ok) {
  finished_ = utc_now();
  write_manifest(ok ? "complete" : "incomplete");
}

void RunDirectory::write_manifest(const std::string& status) const {
  nlohmann::ordered_json j;
  j["tool"] = "rbmtfi";
  j["version"] = RBMTFI_VERSION;
  j["command"] = command_;
  j["status"] = status;
  j["master_seed"] = seed_;
  j["config"] = config_;
  j["started"] = started_;
  if (!finished_.empty()) j["finished"] = finished_;
  if (!notes_.empty()) j["notes"] = notes_;
  auto files = nlohmann::ordered_json::array();
  for (const auto& [name, digest] : digests_) files.push_back({{"file", name}, {"sha256", digest}});
  j["outputs"] = files;
  write_file_atomic(dir_ / kManifestName, j.dump(2) + "\n");
}

}  // namespace rbmtfi::cli
