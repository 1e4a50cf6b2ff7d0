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

#include "apolarkit/io/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace apolarkit::io {

namespace {

std::uint32_t parse_modulus(std::string_view digits, std::size_t offset) {
  std::uint32_t p = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("expected a prime modulus in field descriptor", offset);
  }
  return p;
}

void render(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && !e.is_object();
    if (!flat) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        render(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
      return;
    }
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

AnyField parse_field(std::string_view d) {
  if (d == "q") return RationalField{};
  if (d.starts_with("fp2:")) return PrimeSquareField(parse_modulus(d.substr(4), 4));
  if (d.starts_with("fp:")) return PrimeField(parse_modulus(d.substr(3), 3));
  throw ParseError("unknown field descriptor '" + std::string(d) + "' (want q, fp:<p>, fp2:<p>)",
                   0);
}

std::string descriptor(const AnyField& field) {
  return std::visit([](const auto& f) { return f.descriptor(); }, field);
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string input_hash(std::string_view canonical_input) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_input)));
  return std::string("fnv1a64:") + buf;
}

Json report_header(const std::string& command, const std::string& canonical_input,
                   const std::string& field, std::uint64_t seed) {
  Json h = Json::object();
  h["command"] = command;
  h["version"] = version_string;
  h["input_hash"] = input_hash(canonical_input);
  h["field"] = field;
  h["seed"] = seed;
  return h;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace apolarkit::io
