#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/realize.hpp"
#include "hocat/sset.hpp"

namespace hocat {

enum class Variance { Covariant, Contravariant };

/// A functor base -> Set (covariant) or base^op -> Set (contravariant).
/// map[f] sends values of the source of f to values of its target when
/// covariant, and values of the target to values of the source otherwise.
struct SetValuedFunctor {
  FinCat base;
  Variance variance = Variance::Covariant;
  std::vector<std::vector<std::string>> values;
  std::vector<std::vector<int>> map;

  int size(ObjId c) const { return static_cast<int>(values[c].size()); }
};

/// Throws NotAFunctor on a violated law.
void validate_set_functor(const SetValuedFunctor& w);

SetValuedFunctor constant_singleton(const FinCat& base, Variance v);
/// base(-, c), contravariant.
SetValuedFunctor representable_contra(const FinCat& base, ObjId c);
/// base(c, -), covariant.
SetValuedFunctor representable_co(const FinCat& base, ObjId c);
/// Objectwise disjoint union of functors with the same base and variance.
SetValuedFunctor sum(const std::vector<SetValuedFunctor>& parts);
/// A seeded sum of one to three representables and singletons.
SetValuedFunctor random_set_functor(const FinCat& base, Variance v, std::uint64_t seed);
/// A truncated simplicial set as a presheaf on simplex_category(dim).
SetValuedFunctor as_presheaf(const TruncSSet& x);

struct ElementsCat {
  FinCat cat;
  Functor projection;
  /// (object, value index) for every object of cat.
  std::vector<std::pair<ObjId, int>> elements;
  /// Base morphism and the value index that labels each morphism.
  std::vector<std::pair<MorId, int>> labels;

  int object_of(ObjId c, int x) const;
};

ElementsCat elements(const SetValuedFunctor& w);

/// Components alpha_c : W1(c) -> W2(c).
struct NatTrans {
  std::vector<std::vector<int>> component;
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};
/// Throws NotNatural naming the failing square.
void validate_natural(const SetValuedFunctor& w1, const SetValuedFunctor& w2, const NatTrans& a);
/// Every natural transformation w1 => w2 (budgeted).
std::vector<NatTrans> enumerate_natural(const SetValuedFunctor& w1, const SetValuedFunctor& w2,
                                        std::size_t budget = kDefaultBudget);

Functor elements_map(const SetValuedFunctor& w1, const SetValuedFunctor& w2, const NatTrans& a,
                     const ElementsCat& e1, const ElementsCat& e2);

/// Colimit of F pi over el W with its universal cocone.
struct SetColimit {
  ElementsCat shape;
  std::vector<std::string> elements;
  /// For every object (c, x) of el W, the map F(c) -> colimit.
  std::vector<std::vector<int>> cocone;
};
/// W contravariant, F covariant on the same base.
SetColimit weighted_colim_set(const SetValuedFunctor& w, const SetValuedFunctor& f);

struct SetLimit {
  ElementsCat shape;
  /// Each element is a compatible family: one value of F(c) per (c, x).
  std::vector<std::vector<int>> families;
};
/// W and F covariant on the same base.
SetLimit weighted_lim_set(const SetValuedFunctor& w, const SetValuedFunctor& f,
                          std::size_t budget = kDefaultBudget);

/// The diagram el W -> Cat obtained from F pi.
CatDiagram pullback_diagram(const ElementsCat& el, const CatDiagram& f);
/// W contravariant on f.index; colim_cat over el W.
ColimResult weighted_colim_cat(const SetValuedFunctor& w, const CatDiagram& f,
                               std::size_t max_len = 0, std::size_t budget = kDefaultBudget);

/// The diagram [n] -> ordinal(n) on simplex_category(dim).
CatDiagram simplex_inclusion_diagram(int dim);

}  // namespace hocat
