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

// Canonical instance file format:
//
//   {
//     "num_classes": 3,
//     "objects": [{"id": 0, "class": 0, "prob": "1/10"}, ...],
//     "tests":   [{"id": 0, "cost": 2, "outcomes": [0, 1, 0, 0, 1]}, ...]
//   }
//
// Probabilities are strings holding an exact rational ("a/b" or "a").
// Outcome labels are zero-based. Unknown keys are rejected.

#ifndef DFEP_INSTANCE_IO_H_
#define DFEP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "dfep/instance.h"

namespace dfep {

// Throws Error(kInvalidInput) on malformed JSON or schema violations. The
// result is not validated; pass it to Validate().
RawInstance ParseInstanceJson(std::string_view text);

// Deterministic rendering: same instance, same bytes.
std::string InstanceToJson(const RawInstance& raw);
std::string InstanceToJson(const Instance& inst);

// Parse + ValidateOrThrow.
Instance LoadInstance(const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace dfep

#endif  // DFEP_INSTANCE_IO_H_
