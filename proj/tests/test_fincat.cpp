#include <doctest.h>

#include "hocat/fincat.hpp"
#include "support.hpp"

using namespace hocat;
using namespace testing_support;

TEST_SUITE("fincat") {
  TEST_CASE("ordinal sizes match monotone-pair counts") {
    for (int n = 0; n <= 5; ++n) {
      FinCat c = ordinal(n);
      CHECK(c.num_objects() == n + 1);
      CHECK(static_cast<std::size_t>(c.num_morphisms()) == binomial(n + 2, 2));
    }
  }

  TEST_CASE("functor counts agree with exhaustive assignment") {
    FinCat pts[] = {ordinal(0), ordinal(1)};
    std::vector<FinCat> pool{ordinal(0),      ordinal(1),      ordinal(2),     walking_iso(),
                             parallel_pair(), idempotent_monoid(), cyclic_group(3), coproduct_cat(pts)};
    for (const auto& c : pool)
      for (const auto& d : pool) CHECK(count_functors(c, d) == brute_force_functor_count(c, d));
    // Monotone maps [m] -> [n].
    CHECK(count_functors(ordinal(2), ordinal(1)) == binomial(4, 3));
    CHECK(count_functors(ordinal(1), ordinal(3)) == binomial(5, 2));
  }

  TEST_CASE("products and coproducts") {
    FinCat p = product_cat(ordinal(1), ordinal(1));
    CHECK(p.num_objects() == 4);
    CHECK(p.num_morphisms() == 9);
    auto [pi1, pi2] = product_projections(ordinal(1), ordinal(2));
    FinCat q = product_cat(ordinal(1), ordinal(2));
    CHECK(is_functor(q, ordinal(1), pi1));
    CHECK(is_functor(q, ordinal(2), pi2));
    FinCat parts[] = {ordinal(1), walking_iso()};
    FinCat s = coproduct_cat(parts);
    CHECK(s.num_objects() == 4);
    CHECK(s.num_morphisms() == 3 + 4);
    CHECK(is_functor(parts[1], s, coproduct_injection(parts, 1)));
  }

  TEST_CASE("validation rejects broken tables") {
    FinCatData d;
    d.objects = {"x"};
    d.morphisms = {{"id", 0, 0}, {"e", 0, 0}};
    d.identity = {0};
    d.composition = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK_NOTHROW(make_fincat(d));  // Z/2
    d.composition[1].result = 0;   // id . e = id
    CHECK_THROWS_AS(make_fincat(d), UnitViolation);

    // Three non-identity endomorphisms with a non-associative product.
    FinCatData m;
    m.objects = {"x"};
    m.morphisms = {{"id", 0, 0}, {"a", 0, 0}, {"b", 0, 0}};
    m.identity = {0};
    auto prod = [](int g, int f) {
      if (g == 0) return f;
      if (f == 0) return g;
      return g == 1 && f == 1 ? 2 : 1;  // aa = b, everything else a
    };
    for (int g = 0; g < 3; ++g)
      for (int f = 0; f < 3; ++f) m.composition.push_back({g, f, prod(g, f)});
    // (a.a).b = b.b = a ; a.(a.b) = a.a = b
    CHECK_THROWS_AS(make_fincat(m), AssociativityViolation);
  }

  TEST_CASE("isomorphism detection") {
    CHECK(is_isomorphic(walking_iso(), walking_iso()));
    CHECK_FALSE(is_isomorphic(walking_iso(), ordinal(1)));
    CHECK_FALSE(is_isomorphic(cyclic_group(2), idempotent_monoid()));
    auto iso = is_isomorphic(product_cat(ordinal(1), ordinal(2)), product_cat(ordinal(2), ordinal(1)));
    REQUIRE(iso);
    FinCat a = product_cat(ordinal(1), ordinal(2)), b = product_cat(ordinal(2), ordinal(1));
    CHECK(compose(iso->backward, iso->forward) == identity_functor(a));
    CHECK(compose(iso->forward, iso->backward) == identity_functor(b));
  }

  TEST_CASE("functor enumeration respects the budget") {
    CHECK_THROWS_AS(enumerate_functors(ordinal(3), product_cat(ordinal(2), ordinal(2)), 5), BudgetExceeded);
  }

  TEST_CASE("presentation of a finite category is valid") {
    PresCat p = presentation_of(product_cat(ordinal(1), ordinal(1)));
    CHECK_NOTHROW(validate_prescat(p));
  }
}
