#include <doctest.h>

#include "itmon/json_io.hpp"

using namespace itmon;

namespace {

template <class T>
void round_trip(const Collection<T>& c) {
  const Json j = collection_to_json(c);
  auto back = collection_from_json(Json::parse(j.dump()));
  REQUIRE(std::holds_alternative<Collection<T>>(back));
  const auto& d = std::get<Collection<T>>(back);
  CHECK(d.terms == c.terms);
  CHECK(d.category.name == c.category.name);
  CHECK(collection_to_json(d) == j);
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("object forms") {
    CHECK(format_object(Bottomed<Nat>::bottom()) == "∅");
    CHECK(format_object(Bottomed<Nat>(3)) == "3");
    CHECK(format_object(FinSeq{2, 1, 3}) == "[2,1,3]");
    CHECK(format_object(Young({3, 1})) == "[3,1]");
    CHECK(format_object(Young3(Matrix{{2, 1}, {1}})) == "[[2,1],[1]]");
    CHECK(format_object(YoungN({2, 2}, {2, 1, 1, 0})) == "[[2,1],[1,0]]");
    CHECK(format_object(YoungN(2)) == "[]");
    CHECK(encode(Bottomed<Young>::bottom()).is_null());
    CHECK(ObjectCodec<YoungN>::decode(Json::parse("[[2,1],[1]]"), 2) == YoungN({2, 2}, {2, 1, 1, 0}));
    CHECK(ObjectCodec<YoungN>::decode(Json::parse("[[[1]]]"), 3) == YoungN({1, 1, 1}, {1}));
    CHECK_THROWS_AS(ObjectCodec<Young>::decode(Json::parse("[1,2]"), 0), UsageError);
    CHECK_THROWS_AS(ObjectCodec<Nat>::decode(Json::parse("-1"), 0), UsageError);
    CHECK_THROWS_AS(ObjectCodec<FinSeq>::decode(Json::parse("{}"), 0), UsageError);
  }

  TEST_CASE("collections round-trip") {
    round_trip(minimal_nat({0, 1, 2, 4, 8}, 12));
    round_trip(seq_operad_b(6));
    round_trip(minimal_young(Young({1}), 8));
    round_trip(height_operad_b(5));
    Collection<Young3> c3{young3_category(), {Bottomed<Young3>::bottom(), Young3{}, Young3(Matrix{{1}}), Young3(Matrix{{2, 1}, {1}})}};
    round_trip(c3);
    Collection<YoungN> cn{youngn_category(3), {Bottomed<YoungN>::bottom(), YoungN(3), YoungN({1, 1, 2}, {1, 1})}};
    round_trip(cn);
    Collection<FinSeq> plain{seq_category(), {Bottomed<FinSeq>::bottom(), FinSeq{}, FinSeq{1}}};
    round_trip(plain);
  }

  TEST_CASE("collection layout") {
    const Json j = collection_to_json(minimal_nat({0, 1}, 3));
    CHECK(j["category"] == "nat");
    CHECK(j["bound"] == 3);
    CHECK(j["terms"]["0"].is_null());
    CHECK(j["terms"]["3"] == 1);
    CHECK_FALSE(j.contains("dim"));
  }

  TEST_CASE("malformed collections") {
    CHECK_THROWS_AS(collection_from_json(Json::parse("[]")), UsageError);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"({"category":"nat"})")), UsageError);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"({"category":"foo","bound":0,"terms":{"0":null}})")),
                    UsageError);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"({"category":"nat","bound":1,"terms":{"0":null}})")),
                    UsageError);
    CHECK_THROWS_AS(
        collection_from_json(Json::parse(R"({"category":"nat","bound":1,"terms":{"0":null,"1":"x"}})")),
        UsageError);
    CHECK_THROWS_AS(collection_from_json(Json::parse(R"({"category":"youngN","bound":0,"terms":{"0":null}})")),
                    UsageError);
  }

  TEST_CASE("verdicts") {
    auto v = verify_operad(seq_operad_b(6), 2, 3, 6);
    const Json j = verdict_to_json(v);
    CHECK(j["status"] == "counterexample");
    CHECK(j["witness"]["k"] == 2);
    CHECK(j["witness"]["composition"] == Json::parse("[2,2]"));
    CHECK(j["witness"]["lhs"] == Json::parse("[1,2]"));
    CHECK(verdict_to_json(verify_operad(seq_operad_c(6), 2, 3, 6))["status"] == "success");
    CHECK(format_composition({1, 3, 2}) == "(k=3, j=(1,3,2))");
  }
}
