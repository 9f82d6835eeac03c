// Copyright 2026 The Toric Atlas Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace toric_atlas {

/**
 * Error raised by every library operation on contract violation.
 *
 * `code()` is a short machine-readable tag ("shape", "norm", "simplex",
 * "octant", "unitary", ...) that the CLI and the HTTP service forward
 * verbatim; `what()` carries the human-readable message.
 */
class AtlasError : public std::runtime_error {
 public:
  AtlasError(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace toric_atlas
