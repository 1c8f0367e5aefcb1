#include <doctest.h>

#include "braidlab/error.hpp"
#include "braidlab/serialize.hpp"

using namespace braidlab;
using namespace braidlab::move;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_certificate(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(as_json(Rational(-9, 2)) == "-9/2");
  CHECK(as_json(Rational(4)) == "4/1");
  const auto a = as_json(alexander_torus(2, 3));
  CHECK(a.dump() == R"({"-1":1,"0":-1,"1":1})");
  CHECK(as_json(BraidWord(3, {1, -2})).dump() == R"({"strands":3,"letters":[1,-2]})");
}

TEST_CASE("moves round trip") {
  const std::vector<BraidMove> moves{FreeReduce{2, -3, true},
                                     FreeReduce{0, 1, false},
                                     Relation{4, Relation::Form::Long},
                                     Relation{1, Relation::Form::Commuting},
                                     CyclicShift{CyclicShift::Direction::FrontToBack},
                                     CyclicShift{CyclicShift::Direction::BackToFront},
                                     InsertGenerator{3, 2},
                                     DeleteGenerator{7}};
  for (const auto& mv : moves) CHECK(move_from_json(as_json(mv)) == mv);
  CHECK(as_json(moves[2]).dump() == R"({"type":"relation","pos":4,"form":"long"})");
  CHECK(as_json(moves[4]).dump() == R"({"type":"cyclic_shift","dir":"front_to_back"})");
  CHECK(as_json(moves[7]).dump() == R"({"type":"delete","pos":7})");
  CHECK_THROWS_AS(move_from_json(Json{{"type", "teleport"}}), Error);
  CHECK_THROWS_AS(move_from_json(Json{{"type", "relation"}, {"pos", 1}, {"form", "short"}}), Error);
  CHECK_THROWS_AS(move_from_json(Json{{"type", "delete"}}), Error);
}

TEST_CASE("certificate round trip") {
  for (const auto& cert : {adj_index3(7), adj_index4(6), adj_grid(2, 3, 4, 5), adj_square(5), adj_staircase(4)}) {
    const auto text = as_json(cert).dump(2);
    const auto back = parse_certificate(text);
    CHECK(as_json(back).dump(2) == text);
    CHECK(back.steps.size() == cert.steps.size());
    CHECK(back.source == cert.source);
    CHECK(back.target == cert.target);
    CHECK(back.params == cert.params);
    CHECK(verify(back).valid());
  }
  const auto j = as_json(adj_grid(2, 3, 4, 5));
  CHECK(j["hash_alg"] == "fnv1a64");
  CHECK(j["source"]["unknots"] == 2);
  CHECK_FALSE(j["target"].contains("unknots"));
  CHECK(j["metadata"]["construction"] == "grid");
}

TEST_CASE("malformed certificates") {
  CHECK(parse_code("{") == ErrorCode::ParseError);
  CHECK(parse_code("[]") == ErrorCode::ParseError);
  CHECK(parse_code("{}") == ErrorCode::ParseError);
  auto j = as_json(adj_index3(4));
  auto mutate = [&](auto f) {
    auto copy = j;
    f(copy);
    return parse_code(copy.dump());
  };
  CHECK(mutate([](Json& c) { c["hash_alg"] = "md5"; }) == ErrorCode::ParseError);
  CHECK(mutate([](Json& c) { c["steps"][0]["hash"] = "zz"; }) == ErrorCode::ParseError);
  CHECK(mutate([](Json& c) { c["steps"] = 3; }) == ErrorCode::ParseError);
  CHECK(mutate([](Json& c) { c["initial_word"]["letters"][0] = 9; }) == ErrorCode::ParseError);
  CHECK(mutate([](Json& c) { c["strands"] = "three"; }) == ErrorCode::ParseError);
  CHECK(mutate([](Json& c) { c["source"].erase("q"); }) == ErrorCode::ParseError);
}

TEST_CASE("verdict and result encodings") {
  CHECK(as_json(Verdict{}).dump() == R"({"status":"Valid"})");
  Verdict v;
  v.status = Verdict::Status::EndpointMismatch;
  v.which = "final";
  v.expected = "T(2,4)";
  v.found = "x";
  CHECK(as_json(v).dump() == R"j({"status":"EndpointMismatch","which":"final","expected":"T(2,4)","found":"x"})j");

  const auto d = as_json(distance(TorusKnotId::make(2, 7), TorusKnotId::make(3, 4)));
  CHECK(d["distance"] == 1);
  CHECK(d["achieved_by"] == "lower-bound-matched");
  CHECK(d["witness"].is_array());

  const auto fp = as_json(fingerprint(BraidWord(3, {1})));
  CHECK(fp["alexander"].is_null());
  CHECK(fp["components"] == 2);

  const auto f = as_json(upsilon_function(3, 4));
  CHECK(f["domain"] == Json::array({"0/1", "2/1"}));
}
