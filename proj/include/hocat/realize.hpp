#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/nerve.hpp"
#include "hocat/sset.hpp"
#include "hocat/words.hpp"

namespace hocat {

/// Edge of a boundary triple: a generator index or an identity.
struct BoundaryEdge {
  int simplex = 0;                  // 1-simplex id in the source
  std::optional<EdgeId> generator;  // absent for degenerate edges
};

struct AttachedTriangle {
  int simplex = 0;
  BoundaryEdge first;   // d2, from vertex 0 to 1
  BoundaryEdge second;  // d0, from vertex 1 to 2
  BoundaryEdge long_edge;  // d1, from vertex 0 to 2
};

/// The 2-skeletal filtration sk0 X <= sk1 X <= sk2 X <= X with its
/// attaching data.
struct Filtration {
  Skeleton sk0;
  Skeleton sk1;
  Skeleton sk2;
  std::vector<int> edges;  // nondegenerate 1-simplices, generator order
  std::vector<AttachedTriangle> triangles;
};

Filtration filtration(const TruncSSet& x);

/// Free category on the nondegenerate edges of x (no relations).
PresCat free_cat_FX(const TruncSSet& x);

/// Path of a 1-simplex in free_cat_FX(x) / hcat(x): a single generator, or
/// the empty path for a degenerate edge.
Path edge_path(const TruncSSet& x, int edge);

/// The homotopy category: free_cat_FX plus one relation per nondegenerate
/// 2-simplex.  Levels above 2 are ignored.
PresCat hcat(const TruncSSet& x);

/// Image of each generator of hcat(x) under a simplicial map x -> y.
std::vector<Path> hcat_map(const TruncSSet& x, const TruncSSet& y, const SMap& f);

/// The induced functor between materialized homotopy categories.
Functor hcat_functor(const TruncSSet& x, const TruncSSet& y, const SMap& f,
                     const MaterializeResult& hx, const MaterializeResult& hy);

/// hcat(x) materialized; throws PossiblyInfinite when not certified.
FinCat hcat_fincat(const TruncSSet& x, std::size_t max_len = 0,
                   std::size_t budget = kDefaultBudget);

struct ComparisonReport {
  bool holds = false;
  std::string detail;
};

/// Checks that the counit sk(x, 2) -> x induces an isomorphism of homotopy
/// categories.  Falls back to a presentation comparison when infinite.
ComparisonReport sk2_invariance(const TruncSSet& x, std::size_t budget = 200'000);

/// A diagram of finite categories.
struct CatDiagram {
  FinCat index;
  std::vector<FinCat> objects;
  std::vector<Functor> arrows;  // one per morphism of index
};
void validate_cat_diagram(const CatDiagram& d);

/// Colimit computed as hcat of the levelwise colimit of nerves.
struct ColimResult {
  PresCat presentation;
  MaterializeResult table;
  /// Per diagram object, the image path of every morphism.
  std::vector<std::vector<Path>> leg_paths;
  /// Per diagram object, the image vertex of every object.
  std::vector<std::vector<VertexId>> leg_objects;
  /// Cocone functors, present when the colimit is certified finite.
  std::optional<std::vector<Functor>> legs;
};
ColimResult colim_cat(const CatDiagram& d, std::size_t max_len = 0,
                      std::size_t budget = kDefaultBudget);

struct LimResult {
  FinCat category;
  std::vector<Functor> legs;
};
/// Limit computed by categorifying the levelwise limit of nerves.
LimResult lim_cat(const CatDiagram& d, std::size_t budget = kDefaultBudget);

/// The parallel pair diagram of f, g : c -> d.
CatDiagram parallel_pair_diagram(const FinCat& c, const FinCat& d, const Functor& f, const Functor& g);

struct CoequalizerResult {
  PresCat presentation;
  /// Image path of every morphism of the codomain.
  std::vector<Path> leg_paths;
  std::vector<VertexId> leg_objects;
};
/// Coequalizer of f, g : c -> d via local classes of morphisms.
CoequalizerResult coeq_cat_direct(const FinCat& c, const FinCat& d, const Functor& f,
                                  const Functor& g);

/// Decides whether two quotients of the same category `d` (given by their
/// legs) present isomorphic categories.  Uses Tietze-style translation of
/// generators and relations; when both sides are certified finite the
/// materialized tables are also compared.
ComparisonReport compare_quotients(const PresCat& p, const std::vector<Path>& p_legs,
                                   const PresCat& q, const std::vector<Path>& q_legs,
                                   const FinCat& d, std::size_t table_len = 8,
                                   std::size_t budget = 200'000);

}  // namespace hocat
