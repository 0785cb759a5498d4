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

// Strict-schema helpers over nlohmann::json. Private to the library.

#ifndef DFEP_SRC_JSON_UTIL_H_
#define DFEP_SRC_JSON_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dfep/error.h"

namespace dfep::json_util {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// Every listed key must be present and no other key may appear.
inline void RequireKeys(const Json& j, const std::string& where,
                        std::initializer_list<std::string_view> keys,
                        std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidInput, where + " must be a JSON object");
  }
  for (auto key : keys) {
    if (!j.contains(std::string(key))) {
      throw Error(ErrorCode::kInvalidInput,
                  where + " is missing key \"" + std::string(key) + "\"");
    }
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) {
      throw Error(ErrorCode::kInvalidInput,
                  where + " has unknown key \"" + key + "\"");
    }
  }
}

inline std::int64_t AsInt64(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kInvalidInput, where + " must be an integer");
  }
  return v.get<std::int64_t>();
}

inline std::int64_t GetInt64(const Json& j, const char* key,
                             const std::string& where) {
  return AsInt64(j.at(key), where + "." + key);
}

inline int GetInt(const Json& j, const char* key, const std::string& where) {
  const std::int64_t v = GetInt64(j, key, where);
  if (v < INT32_MIN || v > INT32_MAX) {
    throw Error(ErrorCode::kInvalidInput, where + "." + key + " out of range");
  }
  return static_cast<int>(v);
}

inline const Json& GetArray(const Json& j, const char* key,
                            const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) {
    throw Error(ErrorCode::kInvalidInput,
                where + "." + key + " must be an array");
  }
  return v;
}

inline std::vector<int> GetIntArray(const Json& j, const char* key,
                                    const std::string& where) {
  std::vector<int> out;
  const Json& arr = GetArray(j, key, where);
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string item = where + "." + key + "[" + std::to_string(i) + "]";
    const std::int64_t v = AsInt64(arr[i], item);
    if (v < INT32_MIN || v > INT32_MAX) {
      throw Error(ErrorCode::kInvalidInput, item + " out of range");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace dfep::json_util

#endif  // DFEP_SRC_JSON_UTIL_H_
