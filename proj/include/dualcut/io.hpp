// Copyright 2026 The dualcut Authors
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

#ifndef DUALCUT_IO_HPP_
#define DUALCUT_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "dualcut/advisor.hpp"
#include "dualcut/instance.hpp"
#include "dualcut/report.hpp"

namespace dualcut {

// Line-oriented instance text with 1-based ids and '#' comments:
//   p ssc <n> <stars>    then  s <source> <fan> <sink>...
//   p mscs <n> <arcs>    then  a <tail> <head>
//   p dpa <n> <edges>    then  e <u> <v> <cost 0|1>
//   p 2ecs <n> <edges>   then  e <u> <v>
// Throws ParseError with the offending line. Connectivity is not checked.
AnyInstance parse_instance(std::string_view text);
std::string write_instance(const AnyInstance& instance);

// Whitespace-separated nonnegative integers; '#' starts a comment.
AdviceScript parse_advice(std::string_view text);
std::string write_advice(const AdviceScript& script);

// Throw std::runtime_error when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// "sha256:<hex>" of the canonical instance text.
std::string instance_digest(const AnyInstance& instance);

// Report document with 1-based ids. The instance supplies the digest and
// the vertex count of the input.
nlohmann::json report_to_json(const RunReport& report, const AnyInstance& instance);
// Inverse of report_to_json; throws ParseError (line 0) on a malformed
// document.
RunReport report_from_json(const nlohmann::json& doc);

}  // namespace dualcut

#endif  // DUALCUT_IO_HPP_
