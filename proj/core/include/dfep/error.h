// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DFEP_ERROR_H_
#define DFEP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfep {

enum class ErrorCode {
  kInvalidInput,        // malformed file, bad parameters
  kInvalidInstance,     // instance fails validation
  kInstanceTooLarge,    // oracle / generator size limits
  kEmptySequence,
  kSeparabilityUnreachable,
  kInfeasibleCover,
  kTreeMismatch,        // tree does not fit the instance
  kInternal,            // an invariant that should be unreachable
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
// kInternal means a broken invariant; everything else is caller-facing.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  bool is_internal() const { return code_ == ErrorCode::kInternal; }

 private:
  ErrorCode code_;
};

[[noreturn]] void ThrowInternal(const std::string& what);

#define DFEP_CHECK(cond, msg)                                        \
  do {                                                               \
    if (!(cond)) ::dfep::ThrowInternal(std::string(#cond ": ") + (msg)); \
  } while (0)

}  // namespace dfep

#endif  // DFEP_ERROR_H_
