#include <doctest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace kanrew;
using fixtures::path;
using fixtures::term;

namespace {

Ordering flip(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return Ordering::equal;
}

}  // namespace

TEST_CASE("compare_paths") {
  auto p = fixtures::example4();
  auto cfg = OrderConfig::declaration_order(p);
  CHECK(compare_paths(path(p, "b1.b2.b3"), path(p, "b4"), cfg) == Ordering::greater);
  CHECK(compare_paths(path(p, "b1"), path(p, "b1"), cfg) == Ordering::equal);
  CHECK(compare_paths(path(p, "b2"), path(p, "b5"), cfg) == Ordering::less);
  CHECK(compare_paths(path(p, "id_B1"), path(p, "id_B2"), cfg) == Ordering::less);
}

TEST_CASE("compare_terms") {
  auto p = fixtures::example4();
  auto cfg = OrderConfig::declaration_order(p);
  CHECK(compare_terms(term(p, "x1|b1"), term(p, "y1|id_B2"), cfg) == Ordering::greater);
  CHECK(compare_terms(term(p, "x1|id"), term(p, "x1|id"), cfg) == Ordering::equal);
  CHECK(compare_terms(term(p, "x1|b4"), term(p, "x1|id"), cfg) == Ordering::greater);
  CHECK(compare_terms(term(p, "x2|b4"), term(p, "x1|b4"), cfg) == Ordering::greater);
}

TEST_CASE("x1|b4 exceeds x1|id under every arrow and element order") {
  auto p = fixtures::example4();
  std::vector<std::string> arrows{"b1", "b2", "b3", "b4", "b5"};
  std::vector<std::string> elements{"x1", "x2", "x3", "y1", "y2"};
  do {
    auto cfg = OrderConfig::declaration_order(p).with_arrow_order(p, arrows).with_element_order(
        p, elements);
    REQUIRE(compare_terms(term(p, "x1|b4"), term(p, "x1|id"), cfg) == Ordering::greater);
    std::rotate(elements.begin(), elements.begin() + 1, elements.end());
  } while (std::next_permutation(arrows.begin(), arrows.end()));
}

TEST_CASE("orient") {
  auto p = fixtures::example4();
  auto cfg = OrderConfig::declaration_order(p);

  auto r = orient(term(p, "x1|id"), term(p, "x3|b4"), cfg);
  REQUIRE(r);
  CHECK(r->lhs == term(p, "x3|b4"));
  CHECK(r->rhs == term(p, "x1|id"));

  auto k = orient(path(p, "b4"), path(p, "b1.b2.b3"), cfg);
  REQUIRE(k);
  CHECK(k->lhs == path(p, "b1.b2.b3"));
  CHECK(k->rhs == path(p, "b4"));

  CHECK_FALSE(orient(term(p, "x1|id"), term(p, "x1|id"), cfg));
  CHECK_THROWS_AS(orient(term(p, "x1|id"), term(p, "y1|id"), cfg), std::invalid_argument);
  CHECK_THROWS_AS(orient(path(p, "b1"), path(p, "b4"), cfg), std::invalid_argument);
}

TEST_CASE("order overrides") {
  auto p = fixtures::example4();
  auto base = OrderConfig::declaration_order(p);
  std::vector<std::string> reversed{"b5", "b4", "b3", "b2", "b1"};
  auto cfg = base.with_arrow_order(p, reversed);
  CHECK(compare_paths(path(p, "b2"), path(p, "b5"), cfg) == Ordering::greater);
  CHECK(cfg.rank(*p.codomain().find_arrow("b5")) == 0);

  std::vector<std::string> missing{"b1", "b2", "b3", "b4"};
  std::vector<std::string> unknown{"b1", "b2", "b3", "b4", "b9"};
  std::vector<std::string> repeated{"b1", "b2", "b3", "b4", "b4"};
  CHECK_THROWS_AS(base.with_arrow_order(p, missing), ValidationError);
  CHECK_THROWS_WITH_AS(base.with_arrow_order(p, unknown), doctest::Contains("b9"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(base.with_arrow_order(p, repeated), doctest::Contains("b4"),
                       ValidationError);

  std::vector<std::string> elements{"y2", "y1", "x3", "x2", "x1"};
  auto ecfg = base.with_element_order(p, elements);
  CHECK(compare_terms(term(p, "x1|id"), term(p, "x2|id"), ecfg) == Ordering::greater);
}

TEST_CASE("degenerate generator rules with identity images") {
  PresentationBuilder b;
  b.domain_object("A").domain_arrow("f", "A", "A").domain_arrow("g", "A", "A");
  b.object("B").map_object("A", "B").map_arrow("f", "id_B").map_arrow("g", "id_B");
  b.elements("A", {"u", "v"});
  b.element_action("f", "u", "u").element_action("f", "v", "u");
  b.element_action("g", "u", "u").element_action("g", "v", "v");
  auto p = b.build();
  auto cfg = OrderConfig::declaration_order(p);
  auto rules = initial_rules(p, cfg);
  // u.f = u, u.g = u and v.g = v are trivial; only v.f = u survives.
  REQUIRE(rules.term_rules.size() == 1);
  CHECK(rules.term_rules[0].lhs == term(p, "v|id"));
  CHECK(rules.term_rules[0].rhs == term(p, "u|id"));

  std::vector<std::string> swapped{"v", "u"};
  auto flipped = initial_rules(p, cfg.with_element_order(p, swapped));
  REQUIRE(flipped.term_rules.size() == 1);
  CHECK(flipped.term_rules[0].lhs == term(p, "u|id"));
}

TEST_CASE("orderings are antisymmetric and transitive") {
  randomized::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto p = randomized::random_presentation(rng);
    auto cfg = OrderConfig::declaration_order(p);
    for (int j = 0; j < 20; ++j) {
      auto a = randomized::random_term(p, 4, rng);
      auto b = randomized::random_term(p, 4, rng);
      auto c = randomized::random_term(p, 4, rng);
      auto ab = compare_terms(a, b, cfg);
      REQUIRE(compare_terms(b, a, cfg) == flip(ab));
      REQUIRE((ab == Ordering::equal) == (a == b));
      if (ab == Ordering::less && compare_terms(b, c, cfg) == Ordering::less) {
        REQUIRE(compare_terms(a, c, cfg) == Ordering::less);
      }
      auto pa = a.path, pb = b.path, pc = c.path;
      auto pab = compare_paths(pa, pb, cfg);
      REQUIRE(compare_paths(pb, pa, cfg) == flip(pab));
      REQUIRE((pab == Ordering::equal) == (pa == pb));
      if (pab == Ordering::less && compare_paths(pb, pc, cfg) == Ordering::less) {
        REQUIRE(compare_paths(pa, pc, cfg) == Ordering::less);
      }
    }
  }
}

TEST_CASE("term order is right-compatible") {
  randomized::Rng rng(22);
  std::size_t checked = 0;
  while (checked < 2000) {
    auto p = randomized::random_presentation(rng);
    auto cfg = OrderConfig::declaration_order(p);
    auto t1 = randomized::random_term(p, 4, rng);
    auto t2 = randomized::random_term(p, 4, rng);
    if (t1.target() != t2.target()) continue;
    if (compare_terms(t1, t2, cfg) == Ordering::less) std::swap(t1, t2);
    if (t1 == t2) continue;
    auto q = randomized::random_walk(p.codomain(), t1.target(), 3, rng);
    REQUIRE(compare_terms(act(t1, q), act(t2, q), cfg) == Ordering::greater);
    ++checked;
  }
}

TEST_CASE("path order is compatible with two-sided contexts") {
  randomized::Rng rng(23);
  std::size_t checked = 0;
  while (checked < 2000) {
    auto p = randomized::random_presentation(rng);
    auto cfg = OrderConfig::declaration_order(p);
    const auto& g = p.codomain();
    ObjectId from{randomized::uniform(rng, 0, g.object_count() - 1)};
    auto u = randomized::random_walk(g, from, 4, rng);
    auto v = randomized::random_walk_between(g, from, u.target(), 4, rng);
    if (!v || *v == u) continue;
    if (compare_paths(u, *v, cfg) == Ordering::less) std::swap(u, *v);
    ObjectId left{randomized::uniform(rng, 0, g.object_count() - 1)};
    auto prefix = randomized::random_walk_between(g, left, from, 3, rng);
    if (!prefix) continue;
    auto suffix = randomized::random_walk(g, u.target(), 3, rng);
    auto big = compose_path(compose_path(*prefix, u), suffix);
    auto small = compose_path(compose_path(*prefix, *v), suffix);
    REQUIRE(compare_paths(big, small, cfg) == Ordering::greater);
    ++checked;
  }
}
