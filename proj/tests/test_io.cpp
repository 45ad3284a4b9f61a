#include <doctest.h>

#include <fstream>
#include <string>

#include "iam/fixtures.hpp"
#include "iam/json_io.hpp"
#include "iam/oracle.hpp"

using namespace iam;

TEST_CASE("matrix JSON") {
  const auto mat = BinaryMatrix::from_string("0111/1101/1111");
  const Json j = to_json(mat);
  CHECK(j.dump() == R"({"m":3,"n":4,"rows":[[0,1,1,1],[1,1,0,1],[1,1,1,1]]})");
  CHECK(matrix_from_json(Json::parse(j.dump())) == mat);
  CHECK_THROWS(matrix_from_json(Json::parse(R"({"rows":[[0,2]]})")));
  CHECK_THROWS(matrix_from_json(Json::parse(R"({"m":2,"rows":[[0,1]]})")));
  CHECK_THROWS(matrix_from_json(Json::parse(R"([1,2])")));
}

TEST_CASE("plane partition JSON") {
  const PlanePartition pp(1, 2, 2, {{2, 1}});
  CHECK(to_json(pp).dump() == R"({"a":1,"b":2,"c":2,"pi":[[2,1]]})");
  CHECK(pp_from_json(to_json(pp)) == pp);
  CHECK(pp_from_json(Json::parse(R"({"pi":[[3,1],[1,0]]})")) == PlanePartition(2, 2, 3, {{3, 1}, {1, 0}}));
  CHECK_THROWS(pp_from_json(Json::parse(R"({"pi":[[1,2]]})")));
}

TEST_CASE("round trips over every emitted object") {
  for (const auto& mat : enumerate_maximal_iams(4, 5, 3)) {
    CHECK(matrix_from_json(Json::parse(to_json(mat).dump())) == mat);
    const auto pp = matrix_to_pp(mat, 3);
    CHECK(pp_from_json(Json::parse(to_json(pp).dump())) == pp);
    const auto paths = matrix_to_paths(mat, 3);
    CHECK(paths_from_json(Json::parse(to_json(paths).dump())) == paths);
  }
  const SkewShape s(Partition({5, 5, 3}), Partition({2, 0, 0}));
  CHECK(shape_from_json(Json::parse(to_json(s).dump())) == s);
  for (const auto& f : enumerate_maximal_fillings(s, 2)) {
    const Json j = to_json(f);
    CHECK(shape_from_json(j.at("shape")) == s);
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("rows")[0].size() == 3);
  }
}

TEST_CASE("polynomial and scalar JSON") {
  const QPoly p(std::vector<BigInt>{1, -2, BigInt("123456789012345678901234567890")});
  CHECK(qpoly_from_json(Json::parse(to_json(p).dump())) == p);
  CHECK(qpoly_from_json(Json::parse("[1,2,3]")).to_csv() == "1,2,3");
  const Rational r(-22, 7);
  CHECK(to_json(r).get<std::string>() == "-22/7");
  CHECK(rational_from_json(to_json(r)) == r);
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS(rational_from_json(Json(1.5)));
  CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("catalog file matches the built-in catalog") {
  std::ifstream in(IAM_DATA_DIR "/skew_catalog.jsonl");
  REQUIRE(in.good());
  const auto builtin = fixtures::skew_catalog();
  std::size_t i = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    REQUIRE(i < builtin.size());
    const Json j = Json::parse(line);
    CHECK(shape_from_json(j) == builtin[i].first);
    CHECK(j.at("k").get<int>() == builtin[i].second);
    ++i;
  }
  CHECK(i == builtin.size());
}
