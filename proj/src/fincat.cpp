#include "hocat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hocat {

namespace {

std::string triple_str(const FinCatData& d, MorId h, MorId g, MorId f) {
  return "(" + d.morphisms[h].name + ", " + d.morphisms[g].name + ", " +
         d.morphisms[f].name + ")";
}

}  // namespace

std::optional<ObjId> FinCat::find_object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<ObjId>(it - objects_.begin());
}

std::optional<MorId> FinCat::find_morphism(const std::string& name) const {
  for (MorId m = 0; m < num_morphisms(); ++m)
    if (morphisms_[m].name == name) return m;
  return std::nullopt;
}

FinCatData FinCat::data() const {
  FinCatData d;
  d.objects = objects_;
  d.morphisms = morphisms_;
  d.identity = identity_;
  for (MorId g = 0; g < num_morphisms(); ++g)
    for (MorId f = 0; f < num_morphisms(); ++f)
      if (composable(g, f)) d.composition.push_back({g, f, compose(g, f)});
  return d;
}

FinCat make_fincat(FinCatData data) {
  const int n_obj = static_cast<int>(data.objects.size());
  const int n_mor = static_cast<int>(data.morphisms.size());

  std::set<std::string> seen;
  for (const auto& o : data.objects)
    if (!seen.insert(o).second) throw InvariantViolation("duplicate object id '" + o + "'");
  seen.clear();
  for (const auto& m : data.morphisms) {
    if (!seen.insert(m.name).second)
      throw InvariantViolation("duplicate morphism id '" + m.name + "'");
    if (m.src < 0 || m.src >= n_obj || m.tgt < 0 || m.tgt >= n_obj)
      throw SrcTgtMismatch("morphism '" + m.name + "' has an endpoint outside the object set");
  }
  if (static_cast<int>(data.identity.size()) != n_obj)
    throw UnitViolation("identity map must assign one morphism per object");
  for (ObjId x = 0; x < n_obj; ++x) {
    MorId i = data.identity[x];
    if (i < 0 || i >= n_mor) throw UnitViolation("identity of '" + data.objects[x] + "' is not a morphism");
    if (data.morphisms[i].src != x || data.morphisms[i].tgt != x)
      throw SrcTgtMismatch("identity '" + data.morphisms[i].name + "' of '" + data.objects[x] +
                           "' is not an endomorphism of it");
  }

  FinCat c;
  c.objects_ = std::move(data.objects);
  c.morphisms_ = std::move(data.morphisms);
  c.identity_ = std::move(data.identity);
  c.comp_.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);

  const auto& ms = c.morphisms_;
  for (const auto& e : data.composition) {
    if (e.g < 0 || e.g >= n_mor || e.f < 0 || e.f >= n_mor || e.result < 0 || e.result >= n_mor)
      throw SrcTgtMismatch("composition entry references an unknown morphism");
    if (ms[e.f].tgt != ms[e.g].src)
      throw SrcTgtMismatch("composition entry for non-composable pair (" + ms[e.g].name + ", " +
                           ms[e.f].name + ")");
    if (ms[e.result].src != ms[e.f].src || ms[e.result].tgt != ms[e.g].tgt)
      throw SrcTgtMismatch("composite " + ms[e.g].name + "." + ms[e.f].name + " = " +
                           ms[e.result].name + " has wrong endpoints");
    auto& slot = c.comp_[c.index(e.g, e.f)];
    if (slot >= 0 && slot != e.result)
      throw InvariantViolation("conflicting composition entries for (" + ms[e.g].name + ", " +
                               ms[e.f].name + ")");
    slot = e.result;
  }
  // Identity composites may be left implicit.
  for (MorId f = 0; f < n_mor; ++f) {
    auto& left = c.comp_[c.index(c.identity_[ms[f].tgt], f)];
    if (left < 0) left = f;
    auto& right = c.comp_[c.index(f, c.identity_[ms[f].src])];
    if (right < 0) right = f;
  }
  for (MorId g = 0; g < n_mor; ++g)
    for (MorId f = 0; f < n_mor; ++f)
      if (ms[f].tgt == ms[g].src && c.comp_[c.index(g, f)] < 0)
        throw InvariantViolation("composition table is not total: missing " + ms[g].name + "." +
                                 ms[f].name);

  for (MorId f = 0; f < n_mor; ++f) {
    if (c.compose(c.identity_[ms[f].tgt], f) != f || c.compose(f, c.identity_[ms[f].src]) != f)
      throw UnitViolation("identity law fails at '" + ms[f].name + "'");
  }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g = 0; g < n_mor; ++g) {
      if (ms[f].tgt != ms[g].src) continue;
      MorId gf = c.compose(g, f);
      for (MorId h = 0; h < n_mor; ++h) {
        if (ms[g].tgt != ms[h].src) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          FinCatData names;
          names.morphisms = ms;
          throw AssociativityViolation("composition is not associative on " +
                                       triple_str(names, h, g, f));
        }
      }
    }

  c.hom_.assign(static_cast<std::size_t>(n_obj) * n_obj, {});
  for (MorId m = 0; m < n_mor; ++m)
    c.hom_[static_cast<std::size_t>(ms[m].src) * n_obj + ms[m].tgt].push_back(m);
  return c;
}

// ---------------------------------------------------------------------------

void validate_functor(const FinCat& dom, const FinCat& cod, const Functor& f) {
  if (static_cast<int>(f.obj.size()) != dom.num_objects() ||
      static_cast<int>(f.mor.size()) != dom.num_morphisms())
    throw NotAFunctor("functor tables do not match the domain size");
  for (ObjId x : f.obj)
    if (x < 0 || x >= cod.num_objects()) throw NotAFunctor("object image out of range");
  for (MorId m = 0; m < dom.num_morphisms(); ++m) {
    MorId fm = f.mor[m];
    if (fm < 0 || fm >= cod.num_morphisms()) throw NotAFunctor("morphism image out of range");
    if (cod.src(fm) != f.obj[dom.src(m)] || cod.tgt(fm) != f.obj[dom.tgt(m)])
      throw NotAFunctor("image of '" + dom.morphism(m).name + "' has wrong endpoints");
  }
  for (ObjId x = 0; x < dom.num_objects(); ++x)
    if (f.mor[dom.identity(x)] != cod.identity(f.obj[x]))
      throw NotAFunctor("identity of '" + dom.object_name(x) + "' is not preserved");
  for (MorId fm = 0; fm < dom.num_morphisms(); ++fm)
    for (MorId g = 0; g < dom.num_morphisms(); ++g)
      if (dom.composable(g, fm) &&
          f.mor[dom.compose(g, fm)] != cod.compose(f.mor[g], f.mor[fm]))
        throw NotAFunctor("composite " + dom.morphism(g).name + "." + dom.morphism(fm).name +
                          " is not preserved");
}

bool is_functor(const FinCat& dom, const FinCat& cod, const Functor& f) {
  try {
    validate_functor(dom, cod, f);
    return true;
  } catch (const NotAFunctor&) {
    return false;
  }
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.obj.resize(c.num_objects());
  f.mor.resize(c.num_morphisms());
  for (ObjId x = 0; x < c.num_objects(); ++x) f.obj[x] = x;
  for (MorId m = 0; m < c.num_morphisms(); ++m) f.mor[m] = m;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h;
  h.obj.reserve(f.obj.size());
  h.mor.reserve(f.mor.size());
  for (ObjId x : f.obj) h.obj.push_back(g.obj[x]);
  for (MorId m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

Functor constant_functor(const FinCat& dom, const FinCat& cod, ObjId x) {
  Functor f;
  f.obj.assign(dom.num_objects(), x);
  f.mor.assign(dom.num_morphisms(), cod.identity(x));
  return f;
}

// ---------------------------------------------------------------------------

FinCat terminal_category() { return ordinal(0); }

FinCat empty_category() { return make_fincat({}); }

FinCat ordinal(int n) {
  FinCatData d;
  for (int i = 0; i <= n; ++i) d.objects.push_back(std::to_string(i));
  std::map<std::pair<int, int>, MorId> id_of;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id_of[{i, j}] = static_cast<MorId>(d.morphisms.size());
      std::string name = i == j ? "id_" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j);
      d.morphisms.push_back({name, i, j});
    }
  for (int i = 0; i <= n; ++i) d.identity.push_back(id_of[{i, i}]);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        d.composition.push_back({id_of[{j, k}], id_of[{i, j}], id_of[{i, k}]});
  return make_fincat(std::move(d));
}

FinCat walking_iso() {
  FinCatData d;
  d.objects = {"0", "1"};
  d.morphisms = {{"id_0", 0, 0}, {"id_1", 1, 1}, {"f", 0, 1}, {"f^-1", 1, 0}};
  d.identity = {0, 1};
  d.composition = {{3, 2, 0}, {2, 3, 1}};
  return make_fincat(std::move(d));
}

FinCat parallel_pair() {
  FinCatData d;
  d.objects = {"0", "1"};
  d.morphisms = {{"id_0", 0, 0}, {"id_1", 1, 1}, {"s", 0, 1}, {"t", 0, 1}};
  d.identity = {0, 1};
  return make_fincat(std::move(d));
}

FinCat idempotent_monoid() {
  FinCatData d;
  d.objects = {"*"};
  d.morphisms = {{"id_*", 0, 0}, {"e", 0, 0}};
  d.identity = {0};
  d.composition = {{1, 1, 1}};
  return make_fincat(std::move(d));
}

FinCat cyclic_group(int n) {
  FinCatData d;
  d.objects = {"*"};
  for (int i = 0; i < n; ++i) d.morphisms.push_back({i == 0 ? "id_*" : "r" + std::to_string(i), 0, 0});
  d.identity = {0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.composition.push_back({a, b, (a + b) % n});
  return make_fincat(std::move(d));
}

FinCat product_cat(const FinCat& c, const FinCat& d) {
  FinCatData out;
  const int dn = d.num_objects();
  const int dm = d.num_morphisms();
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < dn; ++y)
      out.objects.push_back("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < dm; ++g)
      out.morphisms.push_back({"(" + c.morphism(f).name + "," + d.morphism(g).name + ")",
                               c.src(f) * dn + d.src(g), c.tgt(f) * dn + d.tgt(g)});
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < dn; ++y) out.identity.push_back(c.identity(x) * dm + d.identity(y));
  for (MorId f1 = 0; f1 < c.num_morphisms(); ++f1)
    for (MorId f2 = 0; f2 < c.num_morphisms(); ++f2) {
      if (!c.composable(f2, f1)) continue;
      for (MorId g1 = 0; g1 < dm; ++g1)
        for (MorId g2 = 0; g2 < dm; ++g2)
          if (d.composable(g2, g1))
            out.composition.push_back(
                {f2 * dm + g2, f1 * dm + g1, c.compose(f2, f1) * dm + d.compose(g2, g1)});
    }
  return make_fincat(std::move(out));
}

std::pair<Functor, Functor> product_projections(const FinCat& c, const FinCat& d) {
  Functor p, q;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < d.num_objects(); ++y) {
      p.obj.push_back(x);
      q.obj.push_back(y);
    }
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < d.num_morphisms(); ++g) {
      p.mor.push_back(f);
      q.mor.push_back(g);
    }
  return {p, q};
}

FinCat coproduct_cat(std::span<const FinCat> cats) {
  FinCatData out;
  int obj_off = 0;
  int mor_off = 0;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const FinCat& c = cats[i];
    const std::string prefix = std::to_string(i) + "/";
    for (const auto& o : c.objects()) out.objects.push_back(prefix + o);
    for (const auto& m : c.morphisms())
      out.morphisms.push_back({prefix + m.name, m.src + obj_off, m.tgt + obj_off});
    for (ObjId x = 0; x < c.num_objects(); ++x) out.identity.push_back(c.identity(x) + mor_off);
    for (MorId g = 0; g < c.num_morphisms(); ++g)
      for (MorId f = 0; f < c.num_morphisms(); ++f)
        if (c.composable(g, f))
          out.composition.push_back({g + mor_off, f + mor_off, c.compose(g, f) + mor_off});
    obj_off += c.num_objects();
    mor_off += c.num_morphisms();
  }
  return make_fincat(std::move(out));
}

Functor coproduct_injection(std::span<const FinCat> cats, std::size_t i) {
  int obj_off = 0;
  int mor_off = 0;
  for (std::size_t k = 0; k < i; ++k) {
    obj_off += cats[k].num_objects();
    mor_off += cats[k].num_morphisms();
  }
  Functor f;
  for (ObjId x = 0; x < cats[i].num_objects(); ++x) f.obj.push_back(x + obj_off);
  for (MorId m = 0; m < cats[i].num_morphisms(); ++m) f.mor.push_back(m + mor_off);
  return f;
}

// ---------------------------------------------------------------------------
// Functor enumeration

namespace {

struct Triple {
  MorId g, f, gf;
};

/// Composition triples of c, each filed under the largest id it mentions in
/// `order`, so it is checked as soon as all three are assigned.
std::vector<std::vector<Triple>> triples_by_last(const FinCat& c, const std::vector<int>& rank) {
  std::vector<std::vector<Triple>> out(c.num_morphisms());
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f) || c.is_identity(g) || c.is_identity(f)) continue;
      MorId gf = c.compose(g, f);
      MorId last = g;
      if (rank[f] > rank[last]) last = f;
      if (rank[gf] > rank[last]) last = gf;
      out[last].push_back({g, f, gf});
    }
  return out;
}

class FunctorSearch {
 public:
  FunctorSearch(const FinCat& c, const FinCat& d, std::size_t budget, bool injective)
      : c_(c), d_(d), budget_(budget), injective_(injective) {
    for (MorId m = 0; m < c.num_morphisms(); ++m)
      if (!c.is_identity(m)) order_.push_back(m);
    rank_.assign(c.num_morphisms(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
    triples_ = triples_by_last(c, rank_);
    current_.obj.assign(c.num_objects(), -1);
    current_.mor.assign(c.num_morphisms(), -1);
  }

  /// Calls visit for each functor; visit returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    visit_ = [&](const Functor& f) { return visit(f); };
    assign_object(0);
  }

  /// Requires |hom(x,y)| = |hom(F x, F y)| for assigned pairs.
  bool hom_profile = false;

 private:
  bool assign_object(ObjId x) {
    if (x == c_.num_objects()) return assign_morphism(0);
    for (ObjId y = 0; y < d_.num_objects(); ++y) {
      if (injective_ && std::find(current_.obj.begin(), current_.obj.begin() + x, y) !=
                            current_.obj.begin() + x)
        continue;
      current_.obj[x] = y;
      if (hom_profile && !profile_ok(x)) continue;
      current_.mor[c_.identity(x)] = d_.identity(y);
      if (injective_) used_.insert(d_.identity(y));
      bool keep_going = assign_object(x + 1);
      if (injective_) used_.erase(d_.identity(y));
      if (!keep_going) return false;
    }
    current_.obj[x] = -1;
    return true;
  }

  bool profile_ok(ObjId x) const {
    for (ObjId z = 0; z <= x; ++z) {
      if (c_.hom(x, z).size() != d_.hom(current_.obj[x], current_.obj[z]).size()) return false;
      if (c_.hom(z, x).size() != d_.hom(current_.obj[z], current_.obj[x]).size()) return false;
    }
    return true;
  }

  bool assign_morphism(std::size_t i) {
    if (i == order_.size()) {
      if (++found_ > budget_) throw BudgetExceeded("functor enumeration", budget_);
      return visit_(current_);
    }
    const MorId m = order_[i];
    for (MorId cand : d_.hom(current_.obj[c_.src(m)], current_.obj[c_.tgt(m)])) {
      if (injective_ && used_.count(cand)) continue;
      current_.mor[m] = cand;
      bool ok = true;
      for (const Triple& t : triples_[m])
        if (d_.compose(current_.mor[t.g], current_.mor[t.f]) != current_.mor[t.gf]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (injective_) used_.insert(cand);
      bool keep_going = assign_morphism(i + 1);
      if (injective_) used_.erase(cand);
      if (!keep_going) return false;
    }
    current_.mor[m] = -1;
    return true;
  }

  const FinCat& c_;
  const FinCat& d_;
  std::size_t budget_;
  bool injective_;
  std::vector<MorId> order_;
  std::vector<int> rank_;
  std::vector<std::vector<Triple>> triples_;
  Functor current_;
  std::unordered_set<MorId> used_;
  std::size_t found_ = 0;
  std::function<bool(const Functor&)> visit_;
};

}  // namespace

std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d, std::size_t budget) {
  std::vector<Functor> out;
  FunctorSearch search(c, d, budget, false);
  search.run([&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t count_functors(const FinCat& c, const FinCat& d, std::size_t budget) {
  std::size_t n = 0;
  FunctorSearch search(c, d, budget, false);
  search.run([&](const Functor&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<Isomorphism> is_isomorphic(const FinCat& c, const FinCat& d, std::size_t budget) {
  if (c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms())
    return std::nullopt;
  std::optional<Isomorphism> result;
  FunctorSearch search(c, d, budget, true);
  search.hom_profile = true;
  search.run([&](const Functor& f) {
    if (!is_bijective(c, d, f)) return true;
    Isomorphism iso;
    iso.forward = f;
    iso.backward.obj.assign(d.num_objects(), -1);
    iso.backward.mor.assign(d.num_morphisms(), -1);
    for (ObjId x = 0; x < c.num_objects(); ++x) iso.backward.obj[f.obj[x]] = x;
    for (MorId m = 0; m < c.num_morphisms(); ++m) iso.backward.mor[f.mor[m]] = m;
    result = std::move(iso);
    return false;
  });
  return result;
}

bool is_bijective(const FinCat& dom, const FinCat& cod, const Functor& f) {
  if (dom.num_objects() != cod.num_objects() || dom.num_morphisms() != cod.num_morphisms())
    return false;
  std::vector<char> hit_o(cod.num_objects(), 0), hit_m(cod.num_morphisms(), 0);
  for (ObjId x : f.obj) {
    if (hit_o[x]) return false;
    hit_o[x] = 1;
  }
  for (MorId m : f.mor) {
    if (hit_m[m]) return false;
    hit_m[m] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quivers, paths, presentations

bool Quiver::is_distinguished(EdgeId e) const {
  return reflexive && std::find(reflexive->begin(), reflexive->end(), e) != reflexive->end();
}

void validate_quiver(const Quiver& q) {
  std::set<std::string> names;
  for (const auto& v : q.vertices)
    if (!names.insert(v).second) throw InvariantViolation("duplicate vertex id '" + v + "'");
  names.clear();
  for (const auto& e : q.edges) {
    if (!names.insert(e.name).second) throw InvariantViolation("duplicate edge id '" + e.name + "'");
    if (e.src < 0 || e.src >= q.num_vertices() || e.tgt < 0 || e.tgt >= q.num_vertices())
      throw InvariantViolation("edge '" + e.name + "' has an endpoint outside the vertex set");
  }
  if (q.reflexive) {
    if (static_cast<int>(q.reflexive->size()) != q.num_vertices())
      throw InvariantViolation("reflexive structure must name one loop per vertex");
    std::set<EdgeId> used;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      EdgeId e = (*q.reflexive)[v];
      if (e < 0 || e >= q.num_edges() || q.edges[e].src != v || q.edges[e].tgt != v)
        throw InvariantViolation("distinguished edge of '" + q.vertices[v] + "' is not a loop on it");
      if (!used.insert(e).second)
        throw InvariantViolation("edge '" + q.edges[e].name + "' is distinguished twice");
    }
  }
}

VertexId path_target(const Quiver& q, const Path& p) {
  return p.edges.empty() ? p.source : q.edges[p.edges.back()].tgt;
}

void validate_path(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.num_vertices())
    throw InvariantViolation("path source outside the vertex set");
  VertexId at = p.source;
  for (EdgeId e : p.edges) {
    if (e < 0 || e >= q.num_edges()) throw InvariantViolation("path uses an unknown edge");
    if (q.edges[e].src != at)
      throw InvariantViolation("edge '" + q.edges[e].name + "' does not chain in path");
    at = q.edges[e].tgt;
  }
}

Path concat(const Quiver& quiver, const Path& p, const Path& q) {
  if (path_target(quiver, p) != q.source) throw InvariantViolation("paths do not chain");
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.edges.empty()) return "id_" + q.vertices[p.source];
  std::string s;
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    if (!s.empty()) s += ".";
    s += q.edges[*it].name;
  }
  return s;
}

bool shortlex_less(const Path& a, const Path& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.source < b.source;
}

void validate_prescat(const PresCat& p) {
  validate_quiver(p.generators);
  for (const auto& r : p.relations) {
    validate_path(p.generators, r.lhs);
    validate_path(p.generators, r.rhs);
    if (r.lhs.source != r.rhs.source ||
        path_target(p.generators, r.lhs) != path_target(p.generators, r.rhs))
      throw InvariantViolation("relation " + path_to_string(p.generators, r.lhs) + " = " +
                               path_to_string(p.generators, r.rhs) + " is not parallel");
  }
}

PresCat normalize(const PresCat& p) {
  if (!p.generators.reflexive) return p;
  PresCat out;
  out.generators.vertices = p.generators.vertices;
  std::vector<EdgeId> remap(p.generators.num_edges(), -1);
  for (EdgeId e = 0; e < p.generators.num_edges(); ++e) {
    if (p.generators.is_distinguished(e)) continue;
    remap[e] = out.generators.num_edges();
    out.generators.edges.push_back(p.generators.edges[e]);
  }
  auto rewrite = [&](const Path& path) {
    Path q{path.source, {}};
    for (EdgeId e : path.edges)
      if (remap[e] >= 0) q.edges.push_back(remap[e]);
    return q;
  };
  for (const auto& r : p.relations) {
    Relation nr{rewrite(r.lhs), rewrite(r.rhs)};
    if (nr.lhs != nr.rhs) out.relations.push_back(std::move(nr));
  }
  return out;
}

PresCat presentation_of(const FinCat& c) {
  PresCat p;
  p.generators.vertices = c.objects();
  for (const auto& m : c.morphisms()) p.generators.edges.push_back({m.name, m.src, m.tgt});
  for (ObjId x = 0; x < c.num_objects(); ++x)
    p.relations.push_back({Path{x, {c.identity(x)}}, Path{x, {}}});
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f) || c.is_identity(f) || c.is_identity(g)) continue;
      p.relations.push_back({Path{c.src(f), {f, g}}, Path{c.src(f), {c.compose(g, f)}}});
    }
  return p;
}

}  // namespace hocat
