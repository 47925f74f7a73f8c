// Copyright 2023 The Authors.
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

#ifndef FAIRDIV_SRC_ERROR_HPP_
#define FAIRDIV_SRC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fairdiv {

// Error taxonomy. kInvalidArgument covers malformed or contract-violating
// inputs, kParse covers unreadable files, kCapability covers well-formed
// requests the library declines (impossible settings, exceeded search
// guards), kInternal covers broken internal invariants.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kCapability = 3,
  kIo = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

[[noreturn]] inline void throw_capability(const std::string& message) {
  throw Error(ErrorCode::kCapability, message);
}

[[noreturn]] inline void throw_internal(const std::string& message) {
  throw Error(ErrorCode::kInternal, message);
}

}  // namespace fairdiv

#endif  // FAIRDIV_SRC_ERROR_HPP_
