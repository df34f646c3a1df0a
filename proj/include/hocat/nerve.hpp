#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/sset.hpp"

namespace hocat {

/// A composable chain: the start object plus arrows in traversal order.
struct Chain {
  ObjId start = 0;
  std::vector<MorId> arrows;
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

/// The nerve of a finite category truncated at some dimension, together
/// with the chain carried by every simplex.  Level 1 follows morphism ids.
struct NerveResult {
  TruncSSet sset;
  std::vector<std::vector<Chain>> chains;

  /// Simplex id of a chain; throws InvariantViolation if it is not composable.
  int index_of(const Chain& c) const;

  std::vector<std::map<Chain, int>> lookup;
};

NerveResult nerve(const FinCat& c, int dim);

/// The simplicial map induced by a functor c -> d between nerved categories.
SMap nerve_map(const NerveResult& nc, const NerveResult& nd, const Functor& f);

struct Categorified {
  FinCat category;
  /// Levelwise bijection x -> nerve(category, x.dim()).
  SMap witness;
};

/// Reads a category off a simplicial set with the spine extension property.
/// Needs dim >= 3 and checks the property at every level 2..dim.  Throws
/// NotIEP naming the failing chain.
Categorified categorify(const TruncSSet& x);

struct FullFaithfulReport {
  bool holds = false;
  std::size_t functors = 0;
  std::size_t simplicial_maps = 0;
};

/// Compares Cat(c, d) with sSet(Nc, Nd) through nerve_map.
FullFaithfulReport fully_faithful_check(const FinCat& c, const FinCat& d, int dim,
                                        std::size_t budget = 10'000);

}  // namespace hocat
