#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/realize.hpp"
#include "hocat/words.hpp"

namespace hocat {

struct MarkedCat {
  FinCat cat;
  std::vector<MorId> marking;  // sorted, no duplicates

  bool is_marked(MorId m) const;
};

/// Sorts and deduplicates the marking; throws InvariantViolation on ids
/// outside the category.
MarkedCat make_marked(FinCat c, std::vector<MorId> marking);

/// Marks exactly the invertible morphisms.
MarkedCat mark_isos(const FinCat& c);
bool is_groupoid(const FinCat& c);
/// Inverse of m, if any.
std::optional<MorId> inverse_of(const FinCat& c, MorId m);

struct Localization {
  PresCat presentation;
  /// Generator of the formal inverse of each marked morphism, in marking order.
  std::vector<EdgeId> inverse;
  MaterializeResult table;
  /// The localization functor when the table is certified finite.
  std::optional<Functor> gamma;

  /// Generator of morphism m (generators 0..|mor|-1 are the morphisms).
  static EdgeId generator(MorId m) { return m; }
};

/// Freely inverts the marked morphisms by presentation.
Localization localize_rel(const MarkedCat& m, std::size_t max_len = 0, std::size_t budget = kDefaultBudget);
Localization localize_total(const FinCat& c, std::size_t max_len = 0, std::size_t budget = kDefaultBudget);

struct ZigzagLeg {
  bool backward = false;  // backward legs are marked morphisms traversed in reverse
  MorId morphism = 0;
  friend bool operator==(const ZigzagLeg&, const ZigzagLeg&) = default;
};

/// Legs in traversal order, alternating between forward and backward.
struct Zigzag {
  ObjId source = 0;
  ObjId target = 0;
  std::vector<ZigzagLeg> legs;
};

/// Zigzag of a word in the localization generators: cancels adjacent
/// w, w^-1 pairs, composes forward runs in the category and separates
/// consecutive backward legs by identities.
Zigzag zigzag_of(const MarkedCat& m, const Localization& loc, const Path& word);
/// The word read off a zigzag.
Path word_of(const MarkedCat& m, const Localization& loc, const Zigzag& z);

/// True iff f sends every marked morphism of m to a marked morphism of n.
bool check_marking_functor(const Functor& f, const MarkedCat& m, const MarkedCat& n);

/// The localization as hcat of the nerve-level pushout of
/// coproduct([1]) -> C and coproduct([1]) -> coproduct(I).
ColimResult localize_pushout(const MarkedCat& m, std::size_t max_len = 0, std::size_t budget = kDefaultBudget);

struct UniversalReport {
  bool holds = false;
  std::size_t out_of_localization = 0;
  std::size_t inverting_functors = 0;
};

/// Functors L(C, U) -> target against functors C -> target inverting U,
/// compared through precomposition with gamma.
UniversalReport localization_universal_check(const MarkedCat& m, const Localization& loc, const FinCat& target,
                                             std::size_t budget = 100'000);

}  // namespace hocat
