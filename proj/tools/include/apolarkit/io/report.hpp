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
#include <string_view>
#include <variant>

#include "apolarkit/field.hpp"
#include "apolarkit/io/json.hpp"
#include "apolarkit/version.hpp"

namespace apolarkit::io {

using AnyField = std::variant<RationalField, PrimeField, PrimeSquareField>;

/// "q", "fp:<p>" or "fp2:<p>". Syntax errors throw ParseError; a
/// composite modulus throws PreconditionError.
AnyField parse_field(std::string_view descriptor);

std::string descriptor(const AnyField& field);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// "fnv1a64:<16 hex digits>".
std::string input_hash(std::string_view canonical_input);

/// Leading fields of every report.
Json report_header(const std::string& command, const std::string& canonical_input,
                   const std::string& field, std::uint64_t seed);

/// Text rendering: one "key: value" line per scalar, nested keys joined
/// with '.', arrays of scalars inline.
std::string render_text(const Json& report);

}  // namespace apolarkit::io
