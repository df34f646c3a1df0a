#include <doctest.h>

#include "hocat/adjoints.hpp"

using namespace hocat;

TEST_SUITE("adjoints") {
  TEST_CASE("set-level constructions") {
    FinCat d = discrete({"a", "b"});
    CHECK(d.num_morphisms() == 2);
    FinCat i = indiscrete({"a", "b", "c"});
    CHECK(i.num_morphisms() == 9);
    CHECK(obj(i) == FinSet{"a", "b", "c"});
    CatComponents c = pi0_cat(coproduct_cat(std::vector<FinCat>{ordinal(1), walking_iso(), ordinal(0)}));
    CHECK(c.names.size() == 3);
  }

  TEST_CASE("free category on a reflexive quiver") {
    Quiver q = adjoin_degeneracies(Quiver{{"a", "b"}, {{"f", 0, 1}}, std::nullopt});
    CHECK(q.reflexive.has_value());
    PresCat p = free_on_reflexive_quiver(q);
    MaterializeResult m = materialize(p);
    REQUIRE(m.finite());
    CHECK(is_isomorphic(*m.category, ordinal(1)));
    Quiver u = underlying_reflexive_quiver(ordinal(2));
    CHECK(u.num_edges() == 6);
    CHECK(forget_degeneracy(u).reflexive == std::nullopt);
  }

  TEST_CASE("all four suites hold") {
    for (const auto& r : verify_set_cat_adjunctions()) {
      INFO(r.name);
      CHECK(r.holds);
      CHECK(r.pairs > 0);
    }
  }

  TEST_CASE("a wrong unit is detected") {
    AdjunctionSpec<CatOps, SetOps> spec = pi0_discrete_adjunction();
    // Replace pi0 by obj: the unit stays a functor but the hom bijection fails.
    spec.left = [](const FinCat& c) { return obj(c); };
    spec.left_map = [](const FinCat&, const FinCat&, const Functor& f) { return SetMap(f.obj); };
    spec.unit = [](const FinCat& c) {
      FinCat dc = discrete(obj(c));
      Functor u;
      for (ObjId x = 0; x < c.num_objects(); ++x) u.obj.push_back(x);
      for (MorId m = 0; m < c.num_morphisms(); ++m) u.mor.push_back(dc.identity(c.src(m)));
      return u;
    };
    AdjunctionReport r = verify_adjunction(spec, cat_probes(), set_probes());
    CHECK_FALSE(r.holds);
  }
}
