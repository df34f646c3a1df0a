#include "hocat/adjoints.hpp"

#include <functional>

#include "hocat/nerve.hpp"

namespace hocat {

FinCat discrete(const FinSet& s) {
  FinCatData d;
  d.objects = s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    d.morphisms.push_back({"id_" + s[i], static_cast<ObjId>(i), static_cast<ObjId>(i)});
    d.identity.push_back(static_cast<MorId>(i));
  }
  return make_fincat(std::move(d));
}

FinCat indiscrete(const FinSet& s) {
  const int n = static_cast<int>(s.size());
  FinCatData d;
  d.objects = s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.morphisms.push_back({i == j ? "id_" + s[i] : s[i] + "~" + s[j], i, j});
  for (int i = 0; i < n; ++i) d.identity.push_back(i * n + i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) d.composition.push_back({j * n + k, i * n + j, i * n + k});
  return make_fincat(std::move(d));
}

FinSet obj(const FinCat& c) { return c.objects(); }

CatComponents pi0_cat(const FinCat& c) {
  Components comp = pi0_sset(nerve(c, 1).sset);
  CatComponents out{FinSet(comp.count), comp.component};
  std::vector<char> named(comp.count, 0);
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (!named[out.of[x]]) {
      named[out.of[x]] = 1;
      out.names[out.of[x]] = c.object_name(x);
    }
  return out;
}

PresCat free_on_reflexive_quiver(const Quiver& q) {
  validate_quiver(q);
  if (!q.reflexive) throw InvariantViolation("quiver has no reflexive structure");
  return PresCat{q, {}};
}

Quiver underlying_reflexive_quiver(const FinCat& c) {
  Quiver q;
  q.vertices = c.objects();
  for (const auto& m : c.morphisms()) q.edges.push_back({m.name, m.src, m.tgt});
  std::vector<EdgeId> loops;
  for (ObjId x = 0; x < c.num_objects(); ++x) loops.push_back(c.identity(x));
  q.reflexive = std::move(loops);
  return q;
}

Quiver adjoin_degeneracies(const Quiver& q) {
  Quiver out = forget_degeneracy(q);
  std::vector<EdgeId> loops;
  for (VertexId v = 0; v < out.num_vertices(); ++v) {
    loops.push_back(out.num_edges());
    out.edges.push_back({"1_" + out.vertices[v], v, v});
  }
  out.reflexive = std::move(loops);
  validate_quiver(out);
  return out;
}

Quiver forget_degeneracy(const Quiver& q) {
  Quiver out = q;
  out.reflexive.reset();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<SetMap> SetOps::hom(const FinSet& x, const FinSet& y, std::size_t budget) {
  std::vector<SetMap> out;
  SetMap cur(x.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == x.size()) {
      if (out.size() >= budget) throw BudgetExceeded("function enumeration", budget);
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < y.size(); ++v) {
      cur[i] = static_cast<int>(v);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

SetMap SetOps::compose(const SetMap& g, const SetMap& f) {
  SetMap out;
  for (int v : f) out.push_back(g[v]);
  return out;
}

SetMap SetOps::identity(const FinSet& x) {
  SetMap out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

std::vector<Functor> CatOps::hom(const FinCat& x, const FinCat& y, std::size_t budget) {
  return enumerate_functors(x, y, budget);
}
Functor CatOps::compose(const Functor& g, const Functor& f) { return hocat::compose(g, f); }
Functor CatOps::identity(const FinCat& x) { return identity_functor(x); }

std::vector<QuiverMap> ReflQuiverOps::hom(const Quiver& x, const Quiver& y, std::size_t budget) {
  if (!x.reflexive || !y.reflexive) throw InvariantViolation("reflexive quiver maps need reflexive quivers");
  std::vector<QuiverMap> out;
  QuiverMap cur{std::vector<VertexId>(x.num_vertices(), -1), std::vector<EdgeId>(x.num_edges(), -1)};
  std::function<void(int)> edges = [&](int e) {
    if (e == x.num_edges()) {
      if (out.size() >= budget) throw BudgetExceeded("quiver map enumeration", budget);
      out.push_back(cur);
      return;
    }
    const VertexId s = cur.vertex[x.edges[e].src], t = cur.vertex[x.edges[e].tgt];
    if (x.is_distinguished(e)) {
      cur.edge[e] = (*y.reflexive)[s];
      edges(e + 1);
      return;
    }
    for (EdgeId f = 0; f < y.num_edges(); ++f)
      if (y.edges[f].src == s && y.edges[f].tgt == t) {
        cur.edge[e] = f;
        edges(e + 1);
      }
  };
  std::function<void(int)> vertices = [&](int v) {
    if (v == x.num_vertices()) {
      edges(0);
      return;
    }
    for (VertexId w = 0; w < y.num_vertices(); ++w) {
      cur.vertex[v] = w;
      vertices(v + 1);
    }
  };
  vertices(0);
  return out;
}

QuiverMap ReflQuiverOps::compose(const QuiverMap& g, const QuiverMap& f) {
  QuiverMap out;
  for (VertexId v : f.vertex) out.vertex.push_back(g.vertex[v]);
  for (EdgeId e : f.edge) out.edge.push_back(g.edge[e]);
  return out;
}

QuiverMap ReflQuiverOps::identity(const Quiver& x) {
  QuiverMap out;
  for (VertexId v = 0; v < x.num_vertices(); ++v) out.vertex.push_back(v);
  for (EdgeId e = 0; e < x.num_edges(); ++e) out.edge.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------

AdjunctionSpec<CatOps, SetOps> pi0_discrete_adjunction() {
  AdjunctionSpec<CatOps, SetOps> s;
  s.name = "pi0 -| discrete";
  s.left = [](const FinCat& c) { return pi0_cat(c).names; };
  s.right = [](const FinSet& x) { return discrete(x); };
  s.left_map = [](const FinCat& c, const FinCat& d, const Functor& f) {
    CatComponents pc = pi0_cat(c), pd = pi0_cat(d);
    SetMap m(pc.names.size());
    for (ObjId x = 0; x < c.num_objects(); ++x) m[pc.of[x]] = pd.of[f.obj[x]];
    return m;
  };
  s.right_map = [](const FinSet&, const FinSet&, const SetMap& h) { return Functor{h, h}; };
  s.unit = [](const FinCat& c) {
    CatComponents pc = pi0_cat(c);
    Functor f{pc.of, {}};
    for (MorId m = 0; m < c.num_morphisms(); ++m) f.mor.push_back(pc.of[c.src(m)]);
    return f;
  };
  return s;
}

AdjunctionSpec<SetOps, CatOps> discrete_obj_adjunction() {
  AdjunctionSpec<SetOps, CatOps> s;
  s.name = "discrete -| obj";
  s.left = [](const FinSet& x) { return discrete(x); };
  s.right = [](const FinCat& c) { return obj(c); };
  s.left_map = [](const FinSet&, const FinSet&, const SetMap& h) { return Functor{h, h}; };
  s.right_map = [](const FinCat&, const FinCat&, const Functor& f) { return f.obj; };
  s.unit = [](const FinSet& x) { return SetOps::identity(x); };
  return s;
}

AdjunctionSpec<CatOps, SetOps> obj_indiscrete_adjunction() {
  AdjunctionSpec<CatOps, SetOps> s;
  s.name = "obj -| indiscrete";
  s.left = [](const FinCat& c) { return obj(c); };
  s.right = [](const FinSet& x) { return indiscrete(x); };
  s.left_map = [](const FinCat&, const FinCat&, const Functor& f) { return f.obj; };
  s.right_map = [](const FinSet&, const FinSet& y, const SetMap& h) {
    const int n = static_cast<int>(h.size()), m = static_cast<int>(y.size());
    Functor f{h, {}};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f.mor.push_back(h[i] * m + h[j]);
    return f;
  };
  s.unit = [](const FinCat& c) {
    Functor f{SetOps::identity(c.objects()), {}};
    for (MorId m = 0; m < c.num_morphisms(); ++m) f.mor.push_back(c.src(m) * c.num_objects() + c.tgt(m));
    return f;
  };
  return s;
}

namespace {

MaterializeResult free_table(const Quiver& q) { return materialize(free_on_reflexive_quiver(q), 0, 100'000); }

}  // namespace

AdjunctionSpec<ReflQuiverOps, CatOps> free_underlying_adjunction() {
  AdjunctionSpec<ReflQuiverOps, CatOps> s;
  s.name = "free -| underlying (reflexive quivers)";
  s.left = [](const Quiver& q) { return free_table(q).require_finite(); };
  s.right = [](const FinCat& c) { return underlying_reflexive_quiver(c); };
  s.left_map = [](const Quiver& q, const Quiver& r, const QuiverMap& h) {
    MaterializeResult fq = free_table(q), fr = free_table(r);
    const FinCat& c = fq.require_finite();
    Functor f{h.vertex, {}};
    for (MorId m = 0; m < c.num_morphisms(); ++m) {
      const Path& rep = fq.classes[m].representative;
      Path image{h.vertex[rep.source], {}};
      for (EdgeId e : rep.edges) image.edges.push_back(h.edge[e]);
      f.mor.push_back(fr.evaluate(image));
    }
    return f;
  };
  s.right_map = [](const FinCat&, const FinCat&, const Functor& f) { return QuiverMap{f.obj, f.mor}; };
  s.unit = [](const Quiver& q) {
    MaterializeResult fq = free_table(q);
    fq.require_finite();
    QuiverMap m = ReflQuiverOps::identity(q);
    m.edge = fq.generator_morphism;
    return m;
  };
  s.counit_defined = [](const FinCat& c) {
    try {
      return free_table(underlying_reflexive_quiver(c)).finite();
    } catch (const BudgetExceeded&) {
      return false;
    }
  };
  return s;
}

std::vector<FinSet> set_probes() { return {{}, {"a"}, {"a", "b"}, {"a", "b", "c"}}; }

std::vector<FinCat> cat_probes() {
  return {empty_category(), ordinal(0),          ordinal(1),       ordinal(2),
          discrete({"a", "b"}), indiscrete({"a", "b", "c"}), walking_iso(), parallel_pair(),
          idempotent_monoid()};
}

std::vector<FinCat> acyclic_cat_probes() {
  return {ordinal(0), ordinal(1), ordinal(2), discrete({"a", "b"}), parallel_pair()};
}

std::vector<Quiver> reflexive_quiver_probes() {
  std::vector<Quiver> out;
  out.push_back(adjoin_degeneracies(Quiver{{"a"}, {}, std::nullopt}));
  out.push_back(adjoin_degeneracies(Quiver{{"a", "b"}, {}, std::nullopt}));
  out.push_back(adjoin_degeneracies(Quiver{{"a", "b"}, {{"f", 0, 1}}, std::nullopt}));
  out.push_back(adjoin_degeneracies(Quiver{{"a", "b", "c"}, {{"f", 0, 1}, {"g", 1, 2}}, std::nullopt}));
  out.push_back(adjoin_degeneracies(Quiver{{"a", "b"}, {{"s", 0, 1}, {"t", 0, 1}}, std::nullopt}));
  out.push_back(underlying_reflexive_quiver(ordinal(1)));
  return out;
}

std::vector<AdjunctionReport> verify_set_cat_adjunctions(std::size_t budget) {
  return {verify_adjunction(pi0_discrete_adjunction(), cat_probes(), set_probes(), budget),
          verify_adjunction(discrete_obj_adjunction(), set_probes(), cat_probes(), budget),
          verify_adjunction(obj_indiscrete_adjunction(), cat_probes(), set_probes(), budget),
          verify_adjunction(free_underlying_adjunction(), reflexive_quiver_probes(), cat_probes(), budget)};
}

}  // namespace hocat
