#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/words.hpp"

namespace hocat {

using FinSet = std::vector<std::string>;
using SetMap = std::vector<int>;

FinCat discrete(const FinSet& s);
FinCat indiscrete(const FinSet& s);
FinSet obj(const FinCat& c);

struct CatComponents {
  FinSet names;            // least object of each component
  std::vector<int> of;     // component of every object
};
CatComponents pi0_cat(const FinCat& c);

/// Distinguished loops become identities, the remaining edges are free.
PresCat free_on_reflexive_quiver(const Quiver& q);
/// All morphisms as edges, identities distinguished.
Quiver underlying_reflexive_quiver(const FinCat& c);
/// Adds a fresh distinguished loop "1_v" at every vertex.
Quiver adjoin_degeneracies(const Quiver& q);
/// Drops the distinguished structure, keeping every edge.
Quiver forget_degeneracy(const Quiver& q);

struct QuiverMap {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
  friend bool operator==(const QuiverMap&, const QuiverMap&) = default;
};

// Category structures used by the harness.  Each provides Obj, Mor, hom,
// compose (g after f), identity and a name for diagnostics.
struct SetOps {
  using Obj = FinSet;
  using Mor = SetMap;
  static std::vector<Mor> hom(const Obj& x, const Obj& y, std::size_t budget);
  static Mor compose(const Mor& g, const Mor& f);
  static Mor identity(const Obj& x);
};

struct CatOps {
  using Obj = FinCat;
  using Mor = Functor;
  static std::vector<Mor> hom(const Obj& x, const Obj& y, std::size_t budget);
  static Mor compose(const Mor& g, const Mor& f);
  static Mor identity(const Obj& x);
};

/// Reflexive quivers and maps preserving distinguished loops.
struct ReflQuiverOps {
  using Obj = Quiver;
  using Mor = QuiverMap;
  static std::vector<Mor> hom(const Obj& x, const Obj& y, std::size_t budget);
  static Mor compose(const Mor& g, const Mor& f);
  static Mor identity(const Obj& x);
};

/// L : A -> B left adjoint to R : B -> A with unit eta : 1 -> RL.  The
/// counit is derived: eps_Y is the unique g : LRY -> Y with R(g) eta_RY = 1.
template <class A, class B>
struct AdjunctionSpec {
  std::string name;
  std::function<typename B::Obj(const typename A::Obj&)> left;
  std::function<typename A::Obj(const typename B::Obj&)> right;
  std::function<typename B::Mor(const typename A::Obj&, const typename A::Obj&, const typename A::Mor&)> left_map;
  std::function<typename A::Mor(const typename B::Obj&, const typename B::Obj&, const typename B::Mor&)> right_map;
  std::function<typename A::Mor(const typename A::Obj&)> unit;
  /// Probes of B on which the counit can be computed (LRY enumerable).
  std::function<bool(const typename B::Obj&)> counit_defined = [](const typename B::Obj&) { return true; };
};

struct AdjunctionReport {
  std::string name;
  bool holds = true;
  std::size_t pairs = 0;
  std::vector<std::string> failures;
};

template <class A, class B>
AdjunctionReport verify_adjunction(const AdjunctionSpec<A, B>& spec, const std::vector<typename A::Obj>& xs,
                                   const std::vector<typename B::Obj>& ys, std::size_t budget = 100'000) {
  AdjunctionReport rep{spec.name, true, 0, {}};
  auto fail = [&](const std::string& s) {
    rep.holds = false;
    rep.failures.push_back(s);
  };
  // Naturality of the unit along every map between probes.
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < xs.size(); ++k)
      for (const auto& f : A::hom(xs[i], xs[k], budget)) {
        auto lhs = A::compose(spec.right_map(spec.left(xs[i]), spec.left(xs[k]), spec.left_map(xs[i], xs[k], f)),
                              spec.unit(xs[i]));
        auto rhs = A::compose(spec.unit(xs[k]), f);
        if (!(lhs == rhs)) fail("unit not natural between probes " + std::to_string(i) + " and " + std::to_string(k));
      }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto lx = spec.left(xs[i]);
    const auto eta = spec.unit(xs[i]);
    for (std::size_t k = 0; k < ys.size(); ++k) {
      ++rep.pairs;
      const auto ry = spec.right(ys[k]);
      auto left_side = B::hom(lx, ys[k], budget);
      auto right_side = A::hom(xs[i], ry, budget);
      const std::string where = " at probe pair (" + std::to_string(i) + ", " + std::to_string(k) + ")";
      if (left_side.size() != right_side.size()) {
        fail("hom-set sizes differ" + where + ": " + std::to_string(left_side.size()) + " vs " +
             std::to_string(right_side.size()));
        continue;
      }
      // g |-> R(g) eta must be injective, hence bijective.
      std::vector<typename A::Mor> images;
      for (const auto& g : left_side) images.push_back(A::compose(spec.right_map(lx, ys[k], g), eta));
      bool injective = true;
      for (std::size_t a = 0; a < images.size() && injective; ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
          if (images[a] == images[b]) {
            injective = false;
            break;
          }
      if (!injective) fail("unit-induced map is not injective" + where);
    }
  }
  // Counit and triangle identities.
  auto counit = [&](const typename B::Obj& y, bool& ok) {
    const auto ry = spec.right(y);
    const auto eta = spec.unit(ry);
    const auto idr = A::identity(ry);
    std::vector<typename B::Mor> found;
    for (const auto& g : B::hom(spec.left(ry), y, budget))
      if (A::compose(spec.right_map(spec.left(ry), y, g), eta) == idr) found.push_back(g);
    ok = found.size() == 1;
    return ok ? found.front() : typename B::Mor{};
  };
  for (std::size_t k = 0; k < ys.size(); ++k) {
    if (!spec.counit_defined(ys[k])) continue;
    bool ok = false;
    counit(ys[k], ok);
    if (!ok) fail("counit at B-probe " + std::to_string(k) + " is not uniquely determined");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto lx = spec.left(xs[i]);
    if (!spec.counit_defined(lx)) continue;
    bool ok = false;
    auto eps = counit(lx, ok);
    if (!ok) {
      fail("counit at L of A-probe " + std::to_string(i) + " is not uniquely determined");
      continue;
    }
    const auto rlx = spec.right(lx);
    auto composite = B::compose(eps, spec.left_map(xs[i], rlx, spec.unit(xs[i])));
    if (!(composite == B::identity(lx))) fail("triangle eps_L . L(eta) = 1 fails at A-probe " + std::to_string(i));
  }
  return rep;
}

// The concrete suites.
AdjunctionSpec<CatOps, SetOps> pi0_discrete_adjunction();
AdjunctionSpec<SetOps, CatOps> discrete_obj_adjunction();
AdjunctionSpec<CatOps, SetOps> obj_indiscrete_adjunction();
AdjunctionSpec<ReflQuiverOps, CatOps> free_underlying_adjunction();

/// Standard probes with at most three objects or elements.
std::vector<FinSet> set_probes();
std::vector<FinCat> cat_probes();
/// Categories whose underlying reflexive quiver generates a finite free category.
std::vector<FinCat> acyclic_cat_probes();
std::vector<Quiver> reflexive_quiver_probes();

/// Runs all four suites; one report each.
std::vector<AdjunctionReport> verify_set_cat_adjunctions(std::size_t budget = 100'000);

}  // namespace hocat
