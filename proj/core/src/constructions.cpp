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

#include "apolarkit/constructions.hpp"

namespace apolarkit::catalog {

const std::vector<std::string>& veronese_minors() {
  static const std::vector<std::string> v = {
      "y0*y3-y1^2", "y0*y5-y2^2", "y3*y5-y4^2", "y0*y4-y1*y2", "y1*y4-y2*y3", "y1*y5-y2*y4",
  };
  return v;
}

const std::string& discriminant_cubic() {
  static const std::string s = "y0*y3*y5-y0*y4^2-y1^2*y5+2*y1*y2*y4-y2^2*y3";
  return s;
}

const std::vector<std::string>& plane_substitution() {
  static const std::vector<std::string> v = {"z0+z1+z2", "z0+z1", "z1", "z0", "z0+z2", "z2"};
  return v;
}

const std::vector<std::string>& family_components() {
  static const std::vector<std::string> v = {
      "x1*x5^2+2*x2*x4*x5",
      "2*x1*x3*x4+x2*x3^2",
      "2*x0*x3*x4+x1^2*x4+2*x1*x2*x3",
      "6*x0*x2*x5+x2^3",
      "2*x0*x1*x5+2*x0*x2*x4+x1*x2^2",
  };
  return v;
}

const std::string& ir_cubic() {
  static const std::string s =
      "-x0*x1*x5-2*x0*x2^2+3*x0*x5^2+2*x1^2*x2-2*x1^2*x3+2*x1*x2*x5+3*x1*x4*x5"
      "+x2^2*x5+x2*x3*x5-2*x3^2*x4+x3*x5^2+x4^2*x5";
  return s;
}

const std::vector<std::string>& scroll_matrix() {
  static const std::vector<std::string> v = {"y0", "y1", "y3", "y4",
                                             "y1", "y2", "y4", "y5"};
  return v;
}

const std::vector<std::string>& points_matrix() {
  static const std::vector<std::string> v = {
      "y0", "y1", "y3", "y4", "y0+y3+y5", "y1+y2+y4",
      "y1", "y2", "y4", "y5", "y1+y3+y4", "y0+y2+y5",
  };
  return v;
}

const std::vector<std::string>& conic_generators() {
  static const std::vector<std::string> v = {"y0*y2-y1^2", "y3", "y4", "y5"};
  return v;
}

const std::string& drop_curve_mod5() {
  static const std::string s =
      "z0^9-2*z0^8*z1+2*z0^7*z1^2+2*z0^7*z1*z2+2*z0^7*z2^2-z0^6*z1^3"
      "-2*z0^6*z1^2*z2-z0^6*z1*z2^2-z0^5*z1^4+z0^5*z1^3*z2+2*z0^5*z1^2*z2^2"
      "-2*z0^5*z1*z2^3+z0^5*z2^4-z0^4*z1^3*z2^2+z0^4*z1^2*z2^3+z0^4*z1*z2^4"
      "+z0^4*z2^5-z0^3*z1^6+z0^3*z1^5*z2-z0^3*z1^4*z2^2+z0^3*z1^3*z2^3"
      "+z0^3*z1^2*z2^4-z0^3*z1*z2^5-2*z0^3*z2^6-2*z0^2*z1^7+2*z0^2*z1^5*z2^2"
      "+2*z0^2*z1^4*z2^3+2*z0^2*z1^3*z2^4+2*z0^2*z1^2*z2^5-2*z0^2*z1*z2^6"
      "+z0^2*z2^7-z0*z1^7*z2-z0*z1^6*z2^2-z0*z1^5*z2^3-z0*z1^4*z2^4"
      "-z0*z1^3*z2^5-z0*z1^2*z2^6+z0*z1*z2^7+2*z0*z2^8+z1^7*z2^2-2*z1^6*z2^3"
      "+2*z1^5*z2^4-2*z1^4*z2^5-z1^3*z2^6+2*z1^2*z2^7-z2^9";
  return s;
}

BettiTable generic_cubic_table() { return generic_cubic_fourfold_betti(); }

BettiTable points9_table() {
  return BettiTable::from_rows({{1}, {0, 12, 25, 15}, {0, 0, 0, 6, 10, 3}});
}

BettiTable points10_table() {
  return BettiTable::from_rows({{1}, {0, 11, 20, 5}, {0, 0, 0, 16, 15, 4}});
}

BettiTable elliptic_sextic_table() {
  return BettiTable::from_rows({{1}, {0, 9, 16, 9}, {0, 0, 0, 0, 1}});
}

std::vector<Entry> entries() {
  RationalField q;
  auto texts = [](const std::vector<HomogeneousForm<RationalField>>& forms) {
    std::vector<std::string> out;
    for (const auto& f : forms) out.push_back(format_form(f));
    return out;
  };
  return {
      {"veronese_minors", "forms", veronese_minors(), {}},
      {"discriminant_cubic", "form", {discriminant_cubic()}, {}},
      {"plane_substitution", "forms", plane_substitution(), {}},
      {"family_components", "forms", family_components(), {}},
      {"reference_cubic", "form", {format_form(reference_cubic(q))}, {}},
      {"ir_cubic", "form", {ir_cubic()}, {}},
      {"scroll_minors", "forms", texts(scroll_minors(q)), {}},
      {"points_minors", "forms", texts(conic_points_config(q).point_minors), {}},
      {"conic_generators", "forms", conic_generators(), {}},
      {"drop_curve_mod5", "form", {drop_curve_mod5()}, {}},
      {"betti_generic_cubic", "betti", {}, generic_cubic_table()},
      {"betti_points9", "betti", {}, points9_table()},
      {"betti_points10", "betti", {}, points10_table()},
      {"betti_elliptic_sextic", "betti", {}, elliptic_sextic_table()},
  };
}

}  // namespace apolarkit::catalog
