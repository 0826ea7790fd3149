// Copyright 2026 The parenteval Authors.
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

// Run manifest attached to every command's JSON output: enough to re-run the
// command and check that the outputs match byte for byte.

#ifndef PARENTEVAL_TOOLS_MANIFEST_H_
#define PARENTEVAL_TOOLS_MANIFEST_H_

#include <cstdint>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace parenteval::tools {

inline constexpr char kToolName[] = "parenteval";
inline constexpr char kToolVersion[] = "1.0.0";

// Hex SHA-256 of a file's contents.
absl::StatusOr<std::string> FileSha256(const std::string& path);

class RunManifest {
 public:
  explicit RunManifest(std::string command) : command_(std::move(command)) {}

  template <typename T>
  void SetFlag(const std::string& name, const T& value) {
    flags_[name] = value;
  }
  // Records the digest of an input file.
  absl::Status AddInput(const std::string& flag, const std::string& path);
  void SetSeed(uint64_t seed) { seed_ = seed; }

  nlohmann::json ToJson() const;

 private:
  std::string command_;
  nlohmann::json flags_ = nlohmann::json::object();
  nlohmann::json inputs_ = nlohmann::json::object();
  std::optional<uint64_t> seed_;
};

}  // namespace parenteval::tools

#endif  // PARENTEVAL_TOOLS_MANIFEST_H_
