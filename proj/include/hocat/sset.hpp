#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hocat/error.hpp"
#include "hocat/fincat.hpp"

namespace hocat {

/// A monotone map [m] -> [n], stored as its list of values.
using Monotone = std::vector<int>;

/// Raw tables for make_sset.  face[n][i][x] = d_i x for 1 <= n <= dim,
/// degen[n][i][x] = s_i x for n < dim.
struct SSetData {
  int dim = 0;
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;
};

/// A simplicial set truncated at dimension dim().  Always validated.
class TruncSSet {
 public:
  TruncSSet() = default;

  int dim() const { return dim_; }
  int size(int n) const { return static_cast<int>(names_[n].size()); }
  const std::string& name(int n, int x) const { return names_[n][x]; }
  const std::vector<std::string>& names(int n) const { return names_[n]; }
  std::optional<int> find(int n, const std::string& name) const;

  int face(int n, int i, int x) const { return face_[n][i][x]; }
  int degen(int n, int i, int x) const { return degen_[n][i][x]; }

  /// X(theta)(x) for theta : [m] -> [n] monotone and x in X_n; m <= dim().
  int act(const Monotone& theta, int n, int x) const;
  /// True if x is in the image of some degeneracy.
  bool is_degenerate(int n, int x) const;

  const SSetData& data() const { return data_; }

  friend TruncSSet make_sset(SSetData data);

 private:
  int dim_ = 0;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> degen_;
  SSetData data_;
};

/// Validates every simplicial identity that fits inside the truncation.
/// Throws InvariantViolation.
TruncSSet make_sset(SSetData data);

/// Level maps f_n : X_n -> Y_n.
struct SMap {
  std::vector<std::vector<int>> level;
  friend bool operator==(const SMap&, const SMap&) = default;
  friend auto operator<=>(const SMap&, const SMap&) = default;
};

/// Throws InvariantViolation if f does not commute with faces and
/// degeneracies.
void validate_smap(const TruncSSet& x, const TruncSSet& y, const SMap& f);
bool is_smap(const TruncSSet& x, const TruncSSet& y, const SMap& f);
SMap identity_smap(const TruncSSet& x);
/// g after f.
SMap compose(const SMap& g, const SMap& f);
bool is_levelwise_bijection(const TruncSSet& x, const TruncSSet& y, const SMap& f);

struct SubSSet {
  TruncSSet sset;
  SMap inclusion;
};

/// The sub-simplicial set on the simplices flagged in keep (must be closed
/// under faces and degeneracies).
SubSSet subobject(const TruncSSet& x, const std::vector<std::vector<char>>& keep);

/// All monotone maps [m] -> [n] in lexicographic order.
std::vector<Monotone> monotone_maps(int m, int n);

/// Delta^n truncated at d; simplices are named by their vertex lists.
TruncSSet standard_simplex(int n, int d);
SubSSet boundary(int n, int d);
SubSSet spine(int n, int d);
/// The simplicial set with X_k = s for every k and identity structure maps.
TruncSSet constant_sset(const std::vector<std::string>& points, int d);

/// Every simplicial map x -> y.  Throws BudgetExceeded above `budget` maps.
std::vector<SMap> hom_sset(const TruncSSet& x, const TruncSSet& y,
                           std::size_t budget = kDefaultBudget);

struct IEPResult {
  bool holds = true;
  /// A chain of edges (by name) with no filler or with several fillers.
  std::vector<std::string> chain;
  int fillers = 0;
  std::string witness() const;
};

/// Spine extension property at level n: the map from n-simplices to
/// composable n-chains of edges is a bijection.  Requires 1 <= n <= dim.
IEPResult check_iep(const TruncSSet& x, int n);

/// Spine chain (edge ids) of an n-simplex.
std::vector<int> spine_edges(const TruncSSet& x, int n, int simplex);

TruncSSet truncate(const TruncSSet& x, int n);

struct Skeleton {
  TruncSSet sset;
  SMap counit;  // sk(x, n) -> x
};
Skeleton sk(const TruncSSet& x, int n);

struct Coskeleton {
  TruncSSet sset;
  SMap unit;  // x -> cosk(x, n)
};
/// Coskeleton computed up to x.dim().  Level m > n consists of the maps
/// truncate(Delta^m, n) -> truncate(x, n).
Coskeleton cosk(const TruncSSet& x, int n, std::size_t budget = kDefaultBudget);

/// A diagram of simplicial sets indexed by a finite category.
struct SSetDiagram {
  FinCat index;
  std::vector<TruncSSet> objects;
  std::vector<SMap> arrows;  // one per morphism of index
};
void validate_diagram(const SSetDiagram& d);

struct SSetCocone {
  TruncSSet apex;
  std::vector<SMap> legs;
};
/// Levelwise colimit; class representatives are the least simplex in input
/// order (index objects first, then simplex ids).
SSetCocone colim_sset(const SSetDiagram& d);
/// Levelwise limit as compatible families.
SSetCocone lim_sset(const SSetDiagram& d, std::size_t budget = kDefaultBudget);

struct Components {
  int count = 0;
  std::vector<int> component;  // per vertex
};
Components pi0_sset(const TruncSSet& x);

std::vector<int> nondegenerate(const TruncSSet& x, int n);

/// Eilenberg-Zilber style presentation: nondegenerate simplices with faces
/// that may be degeneracies of lower nondegenerate simplices.
struct FaceRef {
  /// Degeneracy word s_{j1} ... s_{jr} in strictly decreasing index form.
  std::vector<int> degeneracies;
  std::string target;
};
struct NondegSimplex {
  std::string name;
  int dim = 0;
  std::vector<FaceRef> faces;  // d_0 .. d_dim; empty for vertices
};
struct NondegPresentation {
  int dim = 0;  // truncation level of the expansion
  std::vector<NondegSimplex> simplices;
};
/// Throws MalformedPresentation.
TruncSSet from_nondeg(const NondegPresentation& p);
/// The inverse direction: nondegenerate simplices and their faces.
NondegPresentation to_nondeg(const TruncSSet& x);

/// The simplex category truncated at d, as a FinCat with objects "[0]".."[d]"
/// and one morphism per monotone map.
FinCat simplex_category(int d);
/// Monotone map of a morphism of simplex_category(d).
Monotone simplex_morphism_map(const FinCat& delta, MorId m);

}  // namespace hocat
