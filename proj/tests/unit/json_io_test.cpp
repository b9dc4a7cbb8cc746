#include <doctest.h>

#include <json.hpp>

#include "steinberg/errors.hpp"
#include "steinberg/json_io.hpp"

namespace steinberg {
namespace {

using nlohmann::json;

TEST_CASE("partition serialization") {
  const json j = Partition({3, 1});
  CHECK(j.dump() == "[3,1]");
  CHECK(j.get<Partition>() == Partition({3, 1}));
  CHECK(json::parse("[]").get<Partition>() == Partition{});
  CHECK_THROWS_AS(json::parse("[1,3]").get<Partition>(), DomainError);
  CHECK_THROWS_AS(json::parse("[0]").get<Partition>(), DomainError);
  CHECK_THROWS_AS(json::parse("{}").get<Partition>(), DomainError);
}

TEST_CASE("tableau serialization") {
  const Tableau t({{1, 2}, {3}});
  const json j = t;
  CHECK(j.dump() == "[[1,2],[3]]");
  CHECK(j.get<Tableau>() == t);
  CHECK(json::parse("[]").get<Tableau>() == Tableau{});
  CHECK_THROWS_AS(json::parse("[[1,1]]").get<Tableau>(), DomainError);
  CHECK_THROWS_AS(json::parse("[[2],[1,3]]").get<Tableau>(), DomainError);
}

TEST_CASE("skew tableau serialization uses null placeholders") {
  const SkewTableau s(Partition({3, 1}), Partition({1}), {{2, 3}, {1}});
  const json j = s;
  CHECK(j["outer"].dump() == "[3,1]");
  CHECK(j["inner"].dump() == "[1]");
  CHECK(j["rows"].dump() == "[[null,2,3],[1]]");
  CHECK(j.get<SkewTableau>() == s);
  CHECK_THROWS_AS(json::parse(R"({"outer":[3,1],"inner":[1],"rows":[[2,3],[1]]})")
                      .get<SkewTableau>(),
                  DomainError);
  CHECK_THROWS_AS(json::parse(R"({"outer":[3,1],"inner":[1],"rows":[[null,null,3],[1]]})")
                      .get<SkewTableau>(),
                  DomainError);
  CHECK_THROWS_AS(json::parse(R"({"outer":[3,1],"inner":[1]})").get<SkewTableau>(),
                  DomainError);
}

TEST_CASE("signed diagram serialization") {
  const SignedYoungDiagram d = SignedYoungDiagram::from_strings({"+-+", "-+-"});
  const json j = d;
  CHECK(j.dump() == R"(["+-+","-+-"])");
  CHECK(j.get<SignedYoungDiagram>() == d);
  CHECK(json::parse("[]").get<SignedYoungDiagram>() == SignedYoungDiagram{});
  CHECK_THROWS_AS(json::parse(R"(["+*"])").get<SignedYoungDiagram>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"(["+","+"])").get<SignedYoungDiagram>(), DomainError);
}

TEST_CASE("partial permutation serialization") {
  const PartialPermutation tau(3, {0, 3, 1});
  const json j = tau;
  CHECK(j.dump() == R"({"n":3,"word":[0,3,1]})");
  CHECK(j.get<PartialPermutation>() == tau);
  CHECK_THROWS_AS(json::parse(R"({"n":3})").get<PartialPermutation>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"n":2,"word":[0,3,1]})").get<PartialPermutation>(),
                  DomainError);
}

TEST_CASE("triple serialization") {
  const Triple t(Tableau({{1, 2}, {3}}), Tableau({{1, 3}, {2}}), Partition({1, 1}));
  const json j = t;
  CHECK(j.dump() == R"({"T1":[[1,2],[3]],"T2":[[1,3],[2]],"nu":[1,1]})");
  CHECK(j.get<Triple>() == t);
  CHECK_THROWS_AS(json::parse(R"({"T1":[[1,2]],"T2":[[1,2]]})").get<Triple>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"T1":[[1,2]],"T2":[[1,2]],"nu":[3]})").get<Triple>(),
                  DomainError);
}

TEST_CASE("orbit representative serialization") {
  const OrbitRep omega(PartialPermutation(2, {0, 1}), PartialPermutation(2, {1, 0}));
  const json j = omega;
  CHECK(j.dump() ==
        R"({"tau1":{"n":2,"word":[1,0]},"tau2":{"n":2,"word":[0,1]}})");
  CHECK(j.get<OrbitRep>() == omega);
  CHECK_THROWS_AS(json::parse(R"({"tau1":{"n":1,"word":[0]},"tau2":{"n":1,"word":[0]}})")
                      .get<OrbitRep>(),
                  DomainError);
}

TEST_CASE("matrix serialization") {
  const PrimeFieldMatrix m = PrimeFieldMatrix::from_rows({{1, 2}, {0, 6}}, 7);
  CHECK(matrix_to_json(m).dump() == "[[1,2],[0,6]]");
  CHECK(matrix_from_json(json::parse("[[1,2],[0,6]]"), 7) == m);
  CHECK(matrix_from_json(json::parse("[[1,-5],[0,-1]]"), 7) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]"), 7), DomainError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1],[1,2]]"), 7), DomainError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("7"), 7), DomainError);
}

TEST_CASE("image report serialization shape") {
  ImageReport report;
  report.n = 1;
  report.classes.push_back(ImageClassEntry{
      OrbitRep(PartialPermutation::identity(1), PartialPermutation::zero(1)),
      std::make_pair(Partition({1}), Partition({1})),
      SignedYoungDiagram::from_strings({"+-"}), "oracle", false});
  report.maximal.push_back(SignedYoungDiagram::from_strings({"+-"}));
  report.checks.sign_prefix_square_zero = true;
  const json j = report;
  CHECK(j["n"] == 1);
  CHECK(j["classes"].size() == 1);
  CHECK(j["classes"][0]["method"] == "oracle");
  CHECK(j["classes"][0]["xi_k"].dump() == "[[1],[1]]");
  CHECK(j["classes"][0]["xi_s"].dump() == R"(["+-"])");
  CHECK(j["maximal"].dump() == R"([["+-"]])");
  CHECK(j["checks"]["sign_prefix_square_zero"] == true);
  CHECK(j["checks"]["column_bound"] == false);
}

}  // namespace
}  // namespace steinberg
