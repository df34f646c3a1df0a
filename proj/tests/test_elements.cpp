#include <doctest.h>

#include "hocat/elements.hpp"
#include "support.hpp"

using namespace hocat;
using namespace testing_support;

TEST_SUITE("elements") {
  TEST_CASE("elements of a simplex count its simplices") {
    SetValuedFunctor w = as_presheaf(standard_simplex(2, 3));
    ElementsCat el = elements(w);
    std::size_t expected = 0;
    for (int k = 0; k <= 3; ++k) expected += binomial(2 + k + 1, k + 1);
    CHECK(static_cast<std::size_t>(el.cat.num_objects()) == expected);
    CHECK(is_functor(el.cat, w.base, el.projection));
  }

  TEST_CASE("elements of a representable has a terminal object") {
    FinCat c = ordinal(2);
    for (ObjId x = 0; x < 3; ++x) {
      ElementsCat el = elements(representable_contra(c, x));
      CHECK(is_isomorphic(el.cat, ordinal(x)));  // the slice over x
    }
  }

  TEST_CASE("Yoneda: transformations out of a representable") {
    auto cats = corpus_categories();
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const FinCat& c = cats[seed % cats.size()].cat;
      SetValuedFunctor w = random_set_functor(c, Variance::Contravariant, seed);
      CHECK_NOTHROW(validate_set_functor(w));
      for (ObjId x = 0; x < c.num_objects(); ++x)
        CHECK(static_cast<int>(enumerate_natural(representable_contra(c, x), w).size()) == w.size(x));
    }
  }

  TEST_CASE("broken functors and transformations are rejected") {
    SetValuedFunctor w = representable_co(ordinal(1), 0);
    w.map[2][0] = 7;
    CHECK_THROWS_AS(validate_set_functor(w), NotAFunctor);
    SetValuedFunctor a = representable_co(ordinal(1), 0), b = constant_singleton(ordinal(1), Variance::Covariant);
    NatTrans bad{{{0}, {1}}};
    CHECK_THROWS(validate_natural(b, a, bad));
  }

  TEST_CASE("natural transformations induce functors of elements") {
    FinCat c = ordinal(2);
    SetValuedFunctor a = representable_contra(c, 1), b = representable_contra(c, 2);
    ElementsCat ea = elements(a), eb = elements(b);
    for (const auto& t : enumerate_natural(a, b)) CHECK(is_functor(ea.cat, eb.cat, elements_map(a, b, t, ea, eb)));
  }

  TEST_CASE("sums are objectwise disjoint unions") {
    FinCat c = walking_iso();
    SetValuedFunctor s = sum({representable_co(c, 0), constant_singleton(c, Variance::Covariant)});
    for (ObjId x = 0; x < 2; ++x) CHECK(s.size(x) == 2);
    CHECK_NOTHROW(validate_set_functor(s));
  }

  TEST_CASE("weighted colimit of the simplex inclusion") {
    SetValuedFunctor w = as_presheaf(standard_simplex(2, 3));
    ColimResult r = weighted_colim_cat(w, simplex_inclusion_diagram(3));
    REQUIRE(r.table.finite());
    CHECK(is_isomorphic(*r.table.category, ordinal(2)));
    SetValuedFunctor b = as_presheaf(boundary(2, 3).sset);
    ColimResult rb = weighted_colim_cat(b, simplex_inclusion_diagram(3));
    REQUIRE(rb.table.finite());
    CHECK(rb.table.category->num_morphisms() == 7);
  }
}
