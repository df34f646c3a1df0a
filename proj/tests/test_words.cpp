#include <doctest.h>

#include "hocat/fincat.hpp"
#include "hocat/words.hpp"

using namespace hocat;

namespace {

PresCat one_loop(bool idempotent) {
  PresCat p;
  p.generators.vertices = {"x"};
  p.generators.edges = {{"e", 0, 0}};
  if (idempotent) p.relations.push_back({Path{0, {0, 0}}, Path{0, {0}}});
  return p;
}

PresCat triangle(bool commutes) {
  PresCat p;
  p.generators.vertices = {"0", "1", "2"};
  p.generators.edges = {{"f", 0, 1}, {"g", 1, 2}, {"h", 0, 2}};
  if (commutes) p.relations.push_back({Path{0, {0, 1}}, Path{0, {2}}});
  return p;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("materialize certifies finite presentations") {
    MaterializeResult m = materialize(one_loop(true));
    REQUIRE(m.finite());
    CHECK(m.category->num_morphisms() == 2);
    CHECK(is_isomorphic(*m.category, idempotent_monoid()));
    MaterializeResult t = materialize(triangle(true));
    REQUIRE(t.finite());
    CHECK(is_isomorphic(*t.category, ordinal(2)));
  }

  TEST_CASE("free monoid is not certified") {
    MaterializeResult m = materialize(one_loop(false), 6);
    CHECK_FALSE(m.finite());
    CHECK_THROWS_AS(m.require_finite(), PossiblyInfinite);
  }

  TEST_CASE("free category on the triangle has seven morphisms") {
    MaterializeResult m = materialize(triangle(false));
    REQUIRE(m.finite());
    CHECK(m.category->num_morphisms() == 7);
  }

  TEST_CASE("verdicts carry witnesses and certificates") {
    Path gf{0, {0, 1}}, h{0, {2}};
    WordVerdict free = word_equal(triangle(false), gf, h);
    CHECK(free.kind == WordVerdict::Kind::NotEqual);
    CHECK_FALSE(free.certificate.empty());
    PresCat p = triangle(true);
    WordVerdict eq = word_equal(p, gf, h);
    REQUIRE(eq.kind == WordVerdict::Kind::Equal);
    CHECK(replay(p, gf, eq.witness) == h);
  }

  TEST_CASE("long rewrites replay step by step") {
    PresCat p = one_loop(true);
    Path five{0, {0, 0, 0, 0, 0}}, one{0, {0}};
    WordVerdict v = word_equal(p, five, one);
    REQUIRE(v.kind == WordVerdict::Kind::Equal);
    CHECK(v.witness.size() == 4);
    Path w = five;
    for (const auto& step : v.witness) w = apply_rewrite(p, w, step);
    CHECK(w == one);
  }

  TEST_CASE("no NotEqual without a certificate") {
    // Commutation relation ab = ba on two loops: infinite, so distinct words are Unknown.
    PresCat p;
    p.generators.vertices = {"x"};
    p.generators.edges = {{"a", 0, 0}, {"b", 0, 0}};
    p.relations.push_back({Path{0, {0, 1}}, Path{0, {1, 0}}});
    WordVerdict v = word_equal(p, Path{0, {0}}, Path{0, {1}}, 2000);
    CHECK(v.kind == WordVerdict::Kind::Unknown);
    WordVerdict e = word_equal(p, Path{0, {0, 1, 0}}, Path{0, {1, 0, 0}}, 2000);
    REQUIRE(e.kind == WordVerdict::Kind::Equal);
    CHECK(replay(p, Path{0, {0, 1, 0}}, e.witness) == Path{0, {1, 0, 0}});
  }

  TEST_CASE("generator names containing dots stay distinct") {
    PresCat p;
    p.generators.vertices = {"0", "1", "2"};
    p.generators.edges = {{"f", 0, 1}, {"g", 1, 2}, {"g.f", 0, 2}};
    MaterializeResult m = materialize(p);
    REQUIRE(m.finite());
    CHECK(m.category->num_morphisms() == 7);
  }
}
