#include <doctest.h>

#include "hocat/nerve.hpp"
#include "hocat/realize.hpp"
#include "hocat/words.hpp"
#include "support.hpp"

using namespace hocat;
using namespace testing_support;

TEST_SUITE("realize") {
  TEST_CASE("homotopy category presentation of simplices") {
    PresCat p = hcat(standard_simplex(2, 3));
    CHECK(p.generators.num_edges() == 3);
    CHECK(p.relations.size() == 1);
    for (int n = 0; n <= 4; ++n) CHECK(is_isomorphic(hcat_fincat(standard_simplex(n, 3)), ordinal(n)));
  }

  TEST_CASE("boundary of the 2-simplex gives the free category") {
    TruncSSet b = boundary(2, 3).sset;
    CHECK(free_cat_FX(b).generators.num_edges() == 3);
    FinCat h = hcat_fincat(b);
    CHECK(h.num_morphisms() == 7);
    CHECK_FALSE(is_isomorphic(h, ordinal(2)));
  }

  TEST_CASE("filtration records edges and triangles") {
    Filtration f = filtration(standard_simplex(2, 3));
    CHECK(f.edges.size() == 3);
    CHECK(f.triangles.size() == 1);
    CHECK(f.sk0.sset.size(1) == 3);  // only degenerate edges
  }

  TEST_CASE("degenerate long edges become identities") {
    NondegPresentation p{3, {{"x", 0, {}}, {"y", 0, {}}, {"u", 1, {{{}, "y"}, {{}, "x"}}},
                              {"v", 1, {{{}, "x"}, {{}, "y"}}},
                              {"w", 2, {{{}, "v"}, {{0}, "x"}, {{}, "u"}}}}};
    FinCat h = hcat_fincat(from_nondeg(p));
    CHECK(h.num_morphisms() == 5);  // v after u is the identity, u after v is not
  }

  TEST_CASE("functoriality on simplicial maps") {
    TruncSSet a = standard_simplex(2, 3), b = standard_simplex(1, 3);
    MaterializeResult ha = materialize(hcat(a)), hb = materialize(hcat(b));
    for (const auto& f : hom_sset(a, b)) {
      Functor F = hcat_functor(a, b, f, ha, hb);
      CHECK(is_functor(*ha.category, *hb.category, F));
    }
  }

  TEST_CASE("skeletal invariance") {
    CHECK(sk2_invariance(standard_simplex(3, 3)).holds);
    CHECK(sk2_invariance(nerve(walking_iso(), 3).sset).holds);
  }

  TEST_CASE("colimits of categories") {
    FinCat two = coproduct_cat(std::vector<FinCat>{ordinal(0), ordinal(0)});
    CatDiagram d{two, {ordinal(1), walking_iso()}, {}};
    for (MorId m = 0; m < two.num_morphisms(); ++m) d.arrows.push_back(identity_functor(d.objects[two.src(m)]));
    ColimResult r = colim_cat(d);
    REQUIRE(r.table.finite());
    CHECK(r.table.category->num_objects() == 4);
    CHECK(r.table.category->num_morphisms() == 7);
    REQUIRE(r.legs);
    for (int j = 0; j < 2; ++j) CHECK(is_functor(d.objects[j], *r.table.category, (*r.legs)[j]));
    LimResult l = lim_cat(d);
    CHECK(is_isomorphic(l.category, product_cat(ordinal(1), walking_iso())));
  }

  TEST_CASE("coequalizer of the endpoints is not certified finite") {
    FinCat pt = ordinal(0), arrow = ordinal(1);
    Functor s = constant_functor(pt, arrow, 0), t = constant_functor(pt, arrow, 1);
    CoequalizerResult direct = coeq_cat_direct(pt, arrow, s, t);
    CHECK(direct.presentation.generators.num_vertices() == 1);
    CHECK(direct.presentation.generators.num_edges() == 1);
    CHECK_FALSE(materialize(direct.presentation, 6).finite());
    ColimResult pipeline = colim_cat(parallel_pair_diagram(pt, arrow, s, t), 6);
    CHECK_FALSE(pipeline.table.finite());
    CHECK(compare_quotients(direct.presentation, direct.leg_paths, pipeline.presentation, pipeline.leg_paths[1],
                            arrow)
              .holds);
  }

  TEST_CASE("coequalizer of the identity and the swap") {
    FinCat d2 = coproduct_cat(std::vector<FinCat>{ordinal(0), ordinal(0)});
    Functor id = identity_functor(d2), swap{{1, 0}, {1, 0}};
    REQUIRE(is_functor(d2, d2, swap));
    CoequalizerResult direct = coeq_cat_direct(d2, d2, id, swap);
    MaterializeResult m = materialize(direct.presentation);
    REQUIRE(m.finite());
    CHECK(is_isomorphic(*m.category, ordinal(0)));
    ColimResult pipeline = colim_cat(parallel_pair_diagram(d2, d2, id, swap));
    REQUIRE(pipeline.table.finite());
    CHECK(is_isomorphic(*pipeline.table.category, ordinal(0)));
  }

  TEST_CASE("ends of an isomorphism glued give a free loop with inverse") {
    FinCat pt = ordinal(0), iso = walking_iso();
    CoequalizerResult direct =
        coeq_cat_direct(pt, iso, constant_functor(pt, iso, 0), constant_functor(pt, iso, 1));
    CHECK(direct.presentation.generators.num_vertices() == 1);
    CHECK_FALSE(materialize(direct.presentation, 6).finite());
  }

  TEST_CASE("diagram validation") {
    FinCat pt = ordinal(0);
    CatDiagram bad = parallel_pair_diagram(pt, ordinal(1), constant_functor(pt, ordinal(1), 0),
                                           constant_functor(pt, ordinal(1), 1));
    bad.arrows[2].obj[0] = 5;
    CHECK_THROWS(validate_cat_diagram(bad));
  }
}
