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

#include "dfep/instance_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "dfep/error.h"
#include "json_util.h"

namespace dfep {

using json_util::Json;

namespace {

ObjectRecord ParseObject(const Json& j, std::size_t pos) {
  const std::string where = "objects[" + std::to_string(pos) + "]";
  json_util::RequireKeys(j, where, {"id", "class", "prob"});
  ObjectRecord obj;
  obj.id = json_util::GetInt(j, "id", where);
  obj.class_id = json_util::GetInt(j, "class", where);
  const Json& prob = j.at("prob");
  if (!prob.is_string()) {
    throw Error(ErrorCode::kInvalidInput,
                where + ".prob must be a string \"a/b\" or \"a\"");
  }
  auto value = ParseRational(prob.get<std::string>());
  if (!value) {
    throw Error(ErrorCode::kInvalidInput,
                where + ".prob is not a rational: " + prob.get<std::string>());
  }
  obj.prob = *value;
  return obj;
}

TestRecord ParseTest(const Json& j, std::size_t pos) {
  const std::string where = "tests[" + std::to_string(pos) + "]";
  json_util::RequireKeys(j, where, {"id", "cost", "outcomes"});
  TestRecord test;
  test.id = json_util::GetInt(j, "id", where);
  test.cost = json_util::GetInt64(j, "cost", where);
  test.outcomes = json_util::GetIntArray(j, "outcomes", where);
  return test;
}

}  // namespace

RawInstance ParseInstanceJson(std::string_view text) {
  const Json root = json_util::Parse(text);
  json_util::RequireKeys(root, "instance", {"num_classes", "objects", "tests"});
  RawInstance raw;
  raw.num_classes = json_util::GetInt(root, "num_classes", "instance");
  const Json& objects = json_util::GetArray(root, "objects", "instance");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    raw.objects.push_back(ParseObject(objects[i], i));
  }
  const Json& tests = json_util::GetArray(root, "tests", "instance");
  for (std::size_t i = 0; i < tests.size(); ++i) {
    raw.tests.push_back(ParseTest(tests[i], i));
  }
  return raw;
}

std::string InstanceToJson(const RawInstance& raw) {
  std::ostringstream out;
  out << "{\n  \"num_classes\": " << raw.num_classes << ",\n  \"objects\": [";
  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    const auto& obj = raw.objects[i];
    json_util::OrderedJson j;
    j["id"] = obj.id;
    j["class"] = obj.class_id;
    j["prob"] = FormatRational(obj.prob);
    out << (i ? ",\n    " : "\n    ") << j.dump();
  }
  out << (raw.objects.empty() ? "],\n" : "\n  ],\n") << "  \"tests\": [";
  for (std::size_t i = 0; i < raw.tests.size(); ++i) {
    const auto& test = raw.tests[i];
    json_util::OrderedJson j;
    j["id"] = test.id;
    j["cost"] = test.cost;
    j["outcomes"] = test.outcomes;
    out << (i ? ",\n    " : "\n    ") << j.dump();
  }
  out << (raw.tests.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

std::string InstanceToJson(const Instance& inst) {
  return InstanceToJson(inst.ToRaw());
}

Instance LoadInstance(const std::string& path) {
  return ValidateOrThrow(ParseInstanceJson(ReadTextFile(path)));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kInvalidInput, "write failed: " + path);
}

}  // namespace dfep
