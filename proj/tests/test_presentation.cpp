#include <doctest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace kanrew;
using fixtures::path;
using fixtures::term;

namespace {

const char* kEmpty = R"({"ObA": [], "ArrA": [], "ObB": [], "ArrB": [], "RelB": [],
  "FObA": {}, "FArrA": {}, "XObA": {}, "XArrA": {}})";

std::string with_relation(const std::string& rel) {
  return R"({"ObA": [], "ArrA": [], "ObB": ["B1", "B2", "B3"],
    "ArrB": [["b1", "B1", "B2"], ["b2", "B2", "B3"]], "RelB": [)" + rel + R"(],
    "FObA": {}, "FArrA": {}, "XObA": {}, "XArrA": {}})";
}

}  // namespace

TEST_CASE("parsing the worked example") {
  auto p = fixtures::load("example4.kan");
  CHECK(p.domain().object_count() == 2);
  CHECK(p.domain().arrow_count() == 2);
  CHECK(p.codomain().object_count() == 3);
  CHECK(p.codomain().arrow_count() == 5);
  CHECK(p.relations().size() == 1);
  CHECK(p.element_count() == 5);
  CHECK(p == fixtures::example4());

  auto a2 = *p.domain().find_arrow("a2");
  CHECK(format_path(p.codomain(), p.arrow_image(a2)) == "b2.b3");
  CHECK(p.object_image(*p.domain().find_object("A2")) == *p.codomain().find_object("B2"));
}

TEST_CASE("map and list forms describe the same presentation") {
  auto text = R"({
    "ObA": ["A1", "A2"], "ArrA": [["a1", "A1", "A2"], ["a2", "A2", "A1"]],
    "ObB": ["B1", "B2", "B3"],
    "ArrB": [["b1", "B1", "B2"], ["b2", "B2", "B3"], ["b3", "B3", "B1"],
             ["b4", "B1", "B1"], ["b5", "B1", "B3"]],
    "RelB": [[["b1", "b2", "b3"], ["b4"]]],
    "FObA": {"A2": "B2", "A1": "B1"},
    "FArrA": {"a1": ["b1"], "a2": "b2.b3"},
    "XObA": {"A1": ["x1", "x2", "x3"], "A2": ["y1", "y2"]},
    "XArrA": {"a1": {"x1": "y1", "x2": "y2", "x3": "y1"}, "a2": {"y1": "x1", "y2": "x2"}}
  })";
  CHECK(parse_presentation(text) == fixtures::example4());
}

TEST_CASE("relation through non-composable arrows is rejected") {
  try {
    parse_presentation(with_relation(R"(["b2.b1", "b1"])"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("non-composable path") != std::string::npos);
    CHECK(e.location() == "/RelB/0/0");
  }
}

TEST_CASE("relation sides must be parallel") {
  CHECK_THROWS_AS(parse_presentation(with_relation(R"(["b1", "b1.b2"])")), ValidationError);
}

TEST_CASE("empty presentation is valid") {
  auto p = parse_presentation(kEmpty);
  CHECK(p.domain().object_count() == 0);
  CHECK(p.codomain().object_count() == 0);
  CHECK(p.relations().empty());
  CHECK(p.element_count() == 0);
}

TEST_CASE("malformed text reports its position") {
  try {
    parse_presentation("{\n  \"ObA\": [\n  ,]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("semantic errors name the offending identifier") {
  SUBCASE("unknown field") {
    std::string text = kEmpty;
    text.insert(1, "\"Extra\": 1, ");
    CHECK_THROWS_WITH_AS(parse_presentation(text), doctest::Contains("Extra"), ValidationError);
  }
  SUBCASE("missing field") {
    CHECK_THROWS_WITH_AS(parse_presentation(R"({"ObA": []})"), doctest::Contains("ArrA"),
                         ValidationError);
  }
  SUBCASE("duplicate element") {
    PresentationBuilder b;
    b.domain_object("A").domain_object("C").object("B");
    b.map_object("A", "B").map_object("C", "B");
    b.elements("A", {"x"});
    CHECK_THROWS_WITH_AS(b.elements("C", {"x"}), doctest::Contains("'x'"), ValidationError);
  }
  SUBCASE("partial action") {
    PresentationBuilder b;
    b.domain_object("A").domain_arrow("a", "A", "A").object("B").arrow("b", "B", "B");
    b.map_object("A", "B").map_arrow("a", "b").elements("A", {"x", "y"});
    b.element_action("a", "x", "y");
    CHECK_THROWS_WITH_AS(b.build(), doctest::Contains("'y'"), ValidationError);
  }
  SUBCASE("functor image with wrong endpoints") {
    PresentationBuilder b;
    b.domain_object("A").domain_arrow("a", "A", "A");
    b.object("B1").object("B2").arrow("b", "B1", "B2");
    b.map_object("A", "B1").map_arrow("a", "b").elements("A", {});
    CHECK_THROWS_WITH_AS(b.build(), doctest::Contains("'a'"), ValidationError);
  }
  SUBCASE("missing element set") {
    PresentationBuilder b;
    b.domain_object("A").object("B").map_object("A", "B");
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
  SUBCASE("arrow named like an identity") {
    PresentationBuilder b;
    b.object("B");
    CHECK_THROWS_AS(b.arrow("id_B", "B", "B"), ValidationError);
  }
  SUBCASE("reserved characters") {
    PresentationBuilder b;
    CHECK_THROWS_AS(b.object("B.1"), ValidationError);
    CHECK_THROWS_AS(b.object("id"), ValidationError);
    CHECK_THROWS_AS(b.object(""), ValidationError);
  }
}

TEST_CASE("identifiers") {
  CHECK(is_valid_identifier("x1"));
  CHECK(is_valid_identifier("Ω"));
  CHECK(is_valid_identifier("id_B"));
  CHECK_FALSE(is_valid_identifier("id"));
  CHECK_FALSE(is_valid_identifier("a b"));
  for (char c : std::string(".|+*(),")) CHECK_FALSE(is_valid_identifier(std::string("a") + c));
}

TEST_CASE("compose_path") {
  auto p = fixtures::example4();
  auto composed = compose_path(path(p, "id_B1"), path(p, "b1"));
  CHECK(composed == path(p, "b1"));
  CHECK(composed.source() == *p.codomain().find_object("B1"));

  auto loop = compose_path(path(p, "b1"), path(p, "b2.b3"));
  CHECK(format_path(p.codomain(), loop) == "b1.b2.b3");
  CHECK(loop.source() == *p.codomain().find_object("B1"));
  CHECK(loop.target() == *p.codomain().find_object("B1"));

  CHECK_THROWS_AS(compose_path(path(p, "b1"), path(p, "b1")), CompositionError);
}

TEST_CASE("identities at different objects differ") {
  auto p = fixtures::example4();
  CHECK(path(p, "id_B1") != path(p, "id_B2"));
  CHECK(path(p, "id_B1").empty());
  CHECK_THROWS_AS(path(p, "id_B9"), ValidationError);
}

TEST_CASE("act") {
  auto p = fixtures::example4();
  auto t = act(term(p, "x1|b5.b3.b4.b4.b5"), path(p, "b3"));
  CHECK(t == term(p, "x1|b5.b3.b4.b4.b5.b3"));
  CHECK(t.target() == *p.codomain().find_object("B1"));

  CHECK(act(term(p, "x1|id"), path(p, "id_B1")) == term(p, "x1|id_B1"));
  CHECK_THROWS_AS(act(term(p, "y1|id_B2"), path(p, "b1")), CompositionError);
}

TEST_CASE("term literals") {
  auto p = fixtures::example4();
  CHECK(term(p, "x1|id") == p.identity_term(*p.find_element("x1")));
  CHECK(format_term(p, term(p, "y2|b2.b3")) == "y2|b2.b3");
  CHECK(format_term(p, term(p, "y2|id")) == "y2|id_B2");
  CHECK_THROWS_AS(term(p, "x1|b2"), ValidationError);
  CHECK_THROWS_AS(term(p, "x1|id_B2"), ValidationError);
  CHECK_THROWS_AS(term(p, "z|id"), ValidationError);
  CHECK_THROWS_AS(term(p, "x1"), ValidationError);
}

TEST_CASE("apply_generator_action") {
  auto p = fixtures::example4();
  auto a1 = *p.domain().find_arrow("a1");
  auto a2 = *p.domain().find_arrow("a2");
  CHECK(p.name(p.apply_generator_action(*p.find_element("x3"), a1)) == "y1");
  CHECK(p.name(p.apply_generator_action(*p.find_element("y2"), a2)) == "x2");
  CHECK_THROWS_AS(p.apply_generator_action(*p.find_element("y1"), a1), ValidationError);
}

TEST_CASE("serialization round-trips") {
  for (const char* name : fixtures::kSamples) {
    CAPTURE(name);
    auto p = fixtures::load(name);
    CHECK(parse_presentation(serialize_presentation(p)) == p);
  }
  CHECK(parse_presentation(serialize_presentation(parse_presentation(kEmpty))) ==
        parse_presentation(kEmpty));

  randomized::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto p = randomized::random_presentation(rng);
    REQUIRE(parse_presentation(serialize_presentation(p)) == p);
  }
}

TEST_CASE("composition is associative and unital on random walks") {
  randomized::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    auto p = randomized::random_presentation(rng);
    const auto& g = p.codomain();
    ObjectId start{randomized::uniform(rng, 0, g.object_count() - 1)};
    auto u = randomized::random_walk(g, start, 3, rng);
    auto v = randomized::random_walk(g, u.target(), 3, rng);
    auto w = randomized::random_walk(g, v.target(), 3, rng);
    REQUIRE(compose_path(compose_path(u, v), w) == compose_path(u, compose_path(v, w)));
    REQUIRE(compose_path(Path::identity(u.source()), u) == u);
    REQUIRE(compose_path(u, Path::identity(u.target())) == u);
  }
}

TEST_CASE("the action is compatible with composition") {
  randomized::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    auto p = randomized::random_presentation(rng);
    if (p.element_count() == 0) continue;
    auto t = randomized::random_term(p, 4, rng);
    auto u = randomized::random_walk(p.codomain(), t.target(), 3, rng);
    auto v = randomized::random_walk(p.codomain(), u.target(), 3, rng);
    REQUIRE(act(act(t, u), v) == act(t, compose_path(u, v)));
    REQUIRE(act(t, u).target() == u.target());
  }
}

TEST_CASE("hashes separate powers of a single arrow") {
  auto p = fixtures::load("swap.kan");
  auto b = *p.codomain().find_arrow("b");
  auto B = *p.codomain().find_object("B");
  std::set<std::size_t> hashes;
  std::vector<ArrowId> word;
  for (int k = 0; k < 1000; ++k) {
    hashes.insert(std::hash<Term>{}(Term{*p.find_element("x"), Path(B, B, word)}));
    word.push_back(b);
  }
  CHECK(hashes.size() == 1000);
}
