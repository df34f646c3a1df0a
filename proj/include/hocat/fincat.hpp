#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hocat/error.hpp"

namespace hocat {

/// Index of an object or morphism inside its owning category.
using ObjId = int;
using MorId = int;

struct Morphism {
  std::string name;
  ObjId src = 0;
  ObjId tgt = 0;
};

/// Raw table form accepted by make_fincat.  Composition entries are keyed
/// as (g, f) meaning g after f.
struct FinCatData {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<MorId> identity;
  struct Entry {
    MorId g;
    MorId f;
    MorId result;
  };
  std::vector<Entry> composition;
};

/// A finite category with a total composition table.  Instances are only
/// produced by make_fincat and are therefore always validated.
class FinCat {
 public:
  FinCat() = default;

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(ObjId x) const { return objects_[x]; }
  const Morphism& morphism(MorId m) const { return morphisms_[m]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  ObjId src(MorId m) const { return morphisms_[m].src; }
  ObjId tgt(MorId m) const { return morphisms_[m].tgt; }
  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId m) const { return identity_[src(m)] == m; }

  /// g after f; requires tgt(f) == src(g).
  MorId compose(MorId g, MorId f) const { return comp_[index(g, f)]; }
  bool composable(MorId g, MorId f) const { return tgt(f) == src(g); }

  /// Morphisms x -> y in id order.
  const std::vector<MorId>& hom(ObjId x, ObjId y) const {
    return hom_[static_cast<std::size_t>(x) * objects_.size() + y];
  }

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  FinCatData data() const;

  friend FinCat make_fincat(FinCatData data);

 private:
  std::size_t index(MorId g, MorId f) const {
    return static_cast<std::size_t>(g) * morphisms_.size() + f;
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;
  std::vector<MorId> comp_;
  std::vector<std::vector<MorId>> hom_;
};

/// Validates the tables and builds the category.  Throws SrcTgtMismatch,
/// UnitViolation or AssociativityViolation naming the offending data.
FinCat make_fincat(FinCatData data);

/// A functor between two FinCats.  The domain and codomain are not stored;
/// every operation that needs them takes them explicitly.
struct Functor {
  std::vector<ObjId> obj;
  std::vector<MorId> mor;

  friend bool operator==(const Functor&, const Functor&) = default;
  friend auto operator<=>(const Functor&, const Functor&) = default;
};

/// Throws NotAFunctor describing the first violated law.
void validate_functor(const FinCat& dom, const FinCat& cod, const Functor& f);
bool is_functor(const FinCat& dom, const FinCat& cod, const Functor& f);

Functor identity_functor(const FinCat& c);
/// g after f.
Functor compose(const Functor& g, const Functor& f);
/// The functor defined by sending every object to x and morphism to id_x.
Functor constant_functor(const FinCat& dom, const FinCat& cod, ObjId x);

// Standard categories.
FinCat terminal_category();
FinCat empty_category();
/// The ordinal [n] = {0 < 1 < ... < n} as a poset category.
FinCat ordinal(int n);
/// Two objects with exactly one morphism in each hom-set.
FinCat walking_iso();
/// Objects 0 and 1 with two parallel arrows s, t : 0 -> 1.
FinCat parallel_pair();
/// One object and a single idempotent e with e.e = e.
FinCat idempotent_monoid();
/// The group Z/n as a one-object category.
FinCat cyclic_group(int n);

FinCat product_cat(const FinCat& c, const FinCat& d);
std::pair<Functor, Functor> product_projections(const FinCat& c, const FinCat& d);

FinCat coproduct_cat(std::span<const FinCat> cats);
/// Injection of summand i into coproduct_cat(cats).
Functor coproduct_injection(std::span<const FinCat> cats, std::size_t i);

/// All functors c -> d, in lexicographic order of object then morphism
/// images.  Throws BudgetExceeded when more than `budget` functors exist.
std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d,
                                        std::size_t budget = kDefaultBudget);
std::size_t count_functors(const FinCat& c, const FinCat& d,
                           std::size_t budget = kDefaultBudget);

struct Isomorphism {
  Functor forward;
  Functor backward;
};

/// Finds mutually inverse functors or returns nullopt.  Names are ignored.
std::optional<Isomorphism> is_isomorphic(const FinCat& c, const FinCat& d,
                                         std::size_t budget = kDefaultBudget);

/// True when f is bijective on objects and on morphisms.
bool is_bijective(const FinCat& dom, const FinCat& cod, const Functor& f);

// ---------------------------------------------------------------------------
// Quivers and presentations

using VertexId = int;
using EdgeId = int;

struct Edge {
  std::string name;
  VertexId src = 0;
  VertexId tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  /// Distinguished loop per vertex when the quiver is reflexive.
  std::optional<std::vector<EdgeId>> reflexive;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  bool is_distinguished(EdgeId e) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Throws InvariantViolation when edges or distinguished loops are malformed.
void validate_quiver(const Quiver& q);

/// A path of edges in traversal order: edges[0] is applied first.  The empty
/// path at `source` is the identity there.
struct Path {
  VertexId source = 0;
  std::vector<EdgeId> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

VertexId path_target(const Quiver& q, const Path& p);
/// Throws InvariantViolation when consecutive edges do not chain.
void validate_path(const Quiver& q, const Path& p);
/// p followed by q.
Path concat(const Quiver& quiver, const Path& p, const Path& q);
/// Renders in composition order, e.g. "g.f" for f then g, "id_x" if empty.
std::string path_to_string(const Quiver& q, const Path& p);
/// Shortlex: shorter first, then lexicographic edge ids.
bool shortlex_less(const Path& a, const Path& b);

struct Relation {
  Path lhs;
  Path rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A finitely presented category.
struct PresCat {
  Quiver generators;
  std::vector<Relation> relations;
};

/// Checks every relation is a parallel pair of valid paths.
void validate_prescat(const PresCat& p);

/// Drops distinguished loops of a reflexive generating quiver, replacing them
/// by empty paths in every relation.
PresCat normalize(const PresCat& p);

/// Every morphism of c as a generator; relations are the composition table
/// and id_x = empty path.
PresCat presentation_of(const FinCat& c);

}  // namespace hocat
