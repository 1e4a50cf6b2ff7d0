// Copyright 2026 The apolarkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apolarkit/io/json.hpp"

namespace apolarkit::repro {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct CaseResult {
  std::string name;
  std::vector<Check> checks;
  io::Json data = io::Json::object();  // computed values worth printing

  bool passed() const;
};

/// betti-generic, points9, points10, lefiniteveronese, ir-example,
/// veronese-rank-drop, thom-porteous, drk3-scan.
const std::vector<std::string>& case_names();

bool is_case(const std::string& name);

/// Runs one case; throws PreconditionError for an unknown name.
CaseResult run_case(const std::string& name, std::uint64_t seed);

io::Json to_json(const CaseResult& result);

/// "PASS name: detail" lines, then the case verdict.
std::string render_text(const CaseResult& result);

}  // namespace apolarkit::repro
