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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "apolarkit/io/cli.hpp"
#include "apolarkit/io/json.hpp"
#include "apolarkit/io/report.hpp"
#include "apolarkit/version.hpp"

using namespace apolarkit;
using io::Json;
using Q = RationalField;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "apolarkit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

void check_header(const Json& j, const std::string& command, const std::string& field,
                  std::uint64_t seed) {
  CHECK(j["command"] == command);
  CHECK(j["version"] == version_string);
  CHECK(j["field"] == field);
  CHECK(j["seed"] == seed);
  CHECK(j["input_hash"].get<std::string>().starts_with("fnv1a64:"));
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(io::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(io::input_hash("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("field descriptors") {
  CHECK(io::descriptor(io::parse_field("q")) == "q");
  CHECK(io::descriptor(io::parse_field("fp:101")) == "fp:101");
  CHECK(io::descriptor(io::parse_field("fp2:5")) == "fp2:5");
  CHECK_THROWS_AS(io::parse_field("fp:"), ParseError);
  CHECK_THROWS_AS(io::parse_field("gf:5"), ParseError);
  CHECK_THROWS_AS(io::parse_field("fp:10"), PreconditionError);
}

TEST_CASE("JSON round trips") {
  Q q;
  const PointSet<Q> z(q, 3, {{1, Rational(1, 2), -3}, {0, 1, 0}});
  const Json j = io::to_json(z);
  CHECK(j.dump() == R"([["1","1/2","-3"],["0","1","0"]])");
  CHECK(io::point_set_from_json(q, j).points() == z.points());
  PrimeField f7(7);
  const auto zp = io::point_set_from_json(f7, Json::parse("[[1,2,3],[-1,0,5]]"));
  CHECK(io::to_json(zp).dump() == "[[1,2,3],[6,0,5]]");
  CHECK_THROWS_AS(io::point_set_from_json(q, Json::parse("[[1,2],[1]]")), ParseError);
  CHECK_THROWS_AS(io::point_set_from_json(q, Json::parse(R"([["1/0"]])")), ParseError);

  const auto t = BettiTable::from_rows({{1}, {0, 11, 20, 5}, {0, 0, 0, 16, 15, 4}});
  const Json bj = io::to_json(t);
  CHECK(bj.dump() == R"({"entries":[[0,0,1],[1,2,11],[2,3,20],[3,4,5],[3,5,16],[4,6,15],[5,7,4]]})");
  CHECK(io::betti_from_json(bj) == t);

  std::vector<HomogeneousForm<Q>> entries;
  for (const char* s : {"y0", "2*y1-y5", "0", "y3"}) entries.push_back(parse_form(s, q, 6, 1, 'y'));
  const auto m = LinearFormMatrix<Q>::from_entries(q, 2, 2, entries);
  const Json mj = io::to_json(m);
  CHECK(mj["entries"].dump() == R"([["y0","2*y1-y5"],["0","y3"]])");
  CHECK(io::linear_matrix_from_json(q, mj) == m);
}

TEST_CASE("apolar: Fermat and the reference cubic") {
  const Json fermat = run_json({"apolar", "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3"});
  check_header(fermat, "apolar", "q", 0);
  CHECK(fermat["hilbert_function"] == Json::parse("[1,6,6,1]"));
  const Json ref = run_json({"apolar", "x1*x5^2+2*x2*x4*x5-2*x1*x3*x4-x2*x3^2+2*x0*x3*x4+x1^2*x4+2*x1*x2*x3"
                                       "-6*x0*x2*x5-x2^3+2*x0*x1*x5+2*x0*x2*x4+x1*x2^2"});
  CHECK(ref["apolar_ideal_dims"][2] == 15);
  CHECK(ref["q_f"].size() == 15);
}

TEST_CASE("exit codes") {
  CHECK(run({"apolar", "x0^3+x1*"}).code == cli::parse_error);
  CHECK(run({"apolar", "x0^3+x1*"}).err.find("position 8") != std::string::npos);
  CHECK(run({"apolar", "x0^3", "--field", "fp:3"}).code == cli::precondition);
  CHECK(run({"apolar", "x0^3", "--field", "nonsense"}).code == cli::parse_error);
  CHECK(run({"nosuchcommand"}).code == cli::parse_error);
  CHECK(run({"repro", "no-such-case"}).code == cli::parse_error);
  CHECK(run({"betti", "--cubic", "x0^3", "--max-j", "3"}).code == cli::precondition);
  CHECK(run({"betti"}).code == cli::precondition);
  CHECK(run({"ranklocus", "--field", "q"}).code == cli::precondition);
  CHECK(run({"apolar", "x0^3", "--format", "xml"}).code == cli::parse_error);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("betti: one point and explicit point sets") {
  const Json one = run_json({"betti", "--points", "[[1,0,0,0,0,0]]"});
  check_header(one, "betti", "q", 0);
  CHECK(one["betti"]["entries"].dump() == "[[0,0,1],[1,1,5],[2,2,10],[3,3,10],[4,4,5],[5,5,1]]");
  const auto text = run({"betti", "--random-points", "9", "--seed", "4", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find(" - 12 25 15  -  -\n -  -  -  6 10  3\n") != std::string::npos);
}

TEST_CASE("reports are deterministic and seed-sensitive") {
  const auto a = run({"powersum", "--k", "7", "--seed", "3"});
  const auto b = run({"powersum", "--k", "7", "--seed", "3"});
  const auto c = run({"powersum", "--k", "7", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const Json j = Json::parse(a.out);
  CHECK(j["is_apolar_pointset"] == true);
  CHECK(j["in_span_of_powers"] == true);
  // Same inputs give the same hash regardless of seed.
  CHECK(j["input_hash"] == Json::parse(c.out)["input_hash"]);
}

TEST_CASE("thread count does not change output") {
  setenv("APOLARKIT_THREADS", "1", 1);
  const auto serial = run({"betti", "--random-points", "10", "--seed", "8"});
  setenv("APOLARKIT_THREADS", "3", 1);
  const auto threaded = run({"betti", "--random-points", "10", "--seed", "8"});
  unsetenv("APOLARKIT_THREADS");
  CHECK(serial.code == 0);
  CHECK(serial.out == threaded.out);
}

TEST_CASE("powersum certification of a given decomposition") {
  const Json yes = run_json({"powersum", "--cubic", "x0^3+x1^3", "--points", "[[1,0,0,0,0,0],[0,1,0,0,0,0]]"});
  CHECK(yes["is_apolar_pointset"] == true);
  CHECK(yes["in_span_of_powers"] == true);
  const Json no = run_json({"powersum", "--cubic", "x0^2*x1", "--points", "[[1,0,0,0,0,0],[0,1,0,0,0,0]]"});
  CHECK(no["is_apolar_pointset"] == false);
  CHECK(no["in_span_of_powers"] == false);
}

TEST_CASE("catalog lists every constant") {
  const Json j = run_json({"catalog"});
  CHECK(j["entries"].size() == 14);
  const Json one = run_json({"catalog", "betti_points10"});
  CHECK(one["entries"][0]["betti"]["entries"][1].dump() == "[1,2,11]");
  CHECK(run({"catalog", "missing"}).code == cli::precondition);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  const auto r = run({"catalog", "ir_cubic", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(Json::parse(s.str())["entries"][0]["name"] == "ir_cubic");
  std::remove(path.c_str());
}

TEST_CASE("m2 over a prime field") {
  const Json j = run_json({"m2", "x1*x5^2+2*x2*x4*x5-2*x1*x3*x4-x2*x3^2+2*x0*x3*x4+x1^2*x4+2*x1*x2*x3"
                                 "-6*x0*x2*x5-x2^3+2*x0*x1*x5+2*x0*x2*x4+x1*x2^2",
                           "--field", "fp:101", "--points", "2", "--seed", "1"});
  check_header(j, "m2", "fp:101", 1);
  CHECK(j["shape"].dump() == "[35,21]");
  CHECK(j["matrix"]["entries"].size() == 35);
  for (const auto& r : j["ranks"]) CHECK(r["rank"] == 21);
}

TEST_CASE("repro betti-generic passes") {
  const auto r = run({"repro", "betti-generic", "--format", "text"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("PASS betti-generic") != std::string::npos);
}

TEST_CASE("repro lefiniteveronese passes") {
  const auto r = run({"repro", "lefiniteveronese", "--format", "text"});
  INFO(r.out);
  CHECK(r.code == cli::ok);
}

TEST_CASE("ranklocus report layout") {
  const Json j = run_json({"ranklocus", "--lines", "2", "--seed", "2"});
  check_header(j, "ranklocus", "fp:5", 2);
  for (const char* key : {"matrix", "threshold", "line_degrees", "curve", "singular_points", "classification"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["matrix"]["rows"] == 35);
  CHECK(j["threshold"] == 20);
  for (const auto& l : j["line_degrees"]) CHECK(l["degree"] == 9);
  CHECK(j["curve"]["degree"] == 9);
  CHECK(j["classification"].size() == j["singular_points"].size());
}
