#include "hocat/realize.hpp"

#include <algorithm>
#include <map>

#include "hocat/union_find.hpp"

namespace hocat {

namespace {

/// Generator index of every 1-simplex, -1 for degenerate ones.
std::vector<int> generator_index(const TruncSSet& x) {
  std::vector<int> index(x.size(1), -1);
  auto nd = nondegenerate(x, 1);
  for (std::size_t k = 0; k < nd.size(); ++k) index[nd[k]] = static_cast<int>(k);
  return index;
}

Path edge_path_with(const TruncSSet& x, const std::vector<int>& index, int edge) {
  Path p{x.face(1, 1, edge), {}};
  if (index[edge] >= 0) p.edges.push_back(index[edge]);
  return p;
}

Path translate(const Quiver& target, VertexId source, const Path& w, const std::vector<Path>& images) {
  Path out{source, {}};
  for (EdgeId e : w.edges) out = concat(target, out, images[e]);
  return out;
}

bool is_equal(const PresCat& p, const Path& a, const Path& b, std::size_t budget) {
  return word_equal(p, a, b, budget).kind == WordVerdict::Kind::Equal;
}

/// Proves p and q present isomorphic categories from mutually inverse
/// translations on vertices and generators.
ComparisonReport tietze_check(const PresCat& p, const PresCat& q, const std::vector<VertexId>& pv,
                              const std::vector<VertexId>& qv, const std::vector<Path>& pg,
                              const std::vector<Path>& qg, std::size_t budget) {
  const Quiver& pq = p.generators;
  const Quiver& qq = q.generators;
  for (VertexId v = 0; v < pq.num_vertices(); ++v)
    if (qv[pv[v]] != v) return {false, "vertex maps are not inverse at '" + pq.vertices[v] + "'"};
  for (VertexId v = 0; v < qq.num_vertices(); ++v)
    if (pv[qv[v]] != v) return {false, "vertex maps are not inverse at '" + qq.vertices[v] + "'"};
  for (EdgeId e = 0; e < pq.num_edges(); ++e)
    if (pg[e].source != pv[pq.edges[e].src] || path_target(qq, pg[e]) != pv[pq.edges[e].tgt])
      return {false, "generator '" + pq.edges[e].name + "' has an ill-typed image"};
  for (EdgeId e = 0; e < qq.num_edges(); ++e)
    if (qg[e].source != qv[qq.edges[e].src] || path_target(pq, qg[e]) != qv[qq.edges[e].tgt])
      return {false, "generator '" + qq.edges[e].name + "' has an ill-typed image"};
  auto to_q = [&](const Path& w) { return translate(qq, pv[w.source], w, pg); };
  auto to_p = [&](const Path& w) { return translate(pq, qv[w.source], w, qg); };
  for (const auto& r : p.relations)
    if (!is_equal(q, to_q(r.lhs), to_q(r.rhs), budget))
      return {false, "relation " + path_to_string(pq, r.lhs) + " = " + path_to_string(pq, r.rhs) +
                         " is not established on the other side"};
  for (const auto& r : q.relations)
    if (!is_equal(p, to_p(r.lhs), to_p(r.rhs), budget))
      return {false, "relation " + path_to_string(qq, r.lhs) + " = " + path_to_string(qq, r.rhs) +
                         " is not established on the other side"};
  for (EdgeId e = 0; e < pq.num_edges(); ++e) {
    Path g{pq.edges[e].src, {e}};
    if (!is_equal(p, to_p(to_q(g)), g, budget))
      return {false, "round trip of generator '" + pq.edges[e].name + "' is not the identity"};
  }
  for (EdgeId e = 0; e < qq.num_edges(); ++e) {
    Path g{qq.edges[e].src, {e}};
    if (!is_equal(q, to_q(to_p(g)), g, budget))
      return {false, "round trip of generator '" + qq.edges[e].name + "' is not the identity"};
  }
  return {true, "mutually inverse translations preserve all relations"};
}

}  // namespace

Filtration filtration(const TruncSSet& x) {
  if (x.dim() < 2) throw InvariantViolation("filtration needs dimension >= 2");
  Filtration f{sk(x, 0), sk(x, 1), sk(x, 2), nondegenerate(x, 1), {}};
  auto index = generator_index(x);
  auto edge = [&](int e) {
    BoundaryEdge b{e, std::nullopt};
    if (index[e] >= 0) b.generator = index[e];
    return b;
  };
  for (int s : nondegenerate(x, 2))
    f.triangles.push_back({s, edge(x.face(2, 2, s)), edge(x.face(2, 0, s)), edge(x.face(2, 1, s))});
  return f;
}

PresCat free_cat_FX(const TruncSSet& x) {
  if (x.dim() < 1) throw InvariantViolation("free category needs dimension >= 1");
  PresCat p;
  p.generators.vertices = x.names(0);
  for (int e : nondegenerate(x, 1)) p.generators.edges.push_back({x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)});
  return p;
}

Path edge_path(const TruncSSet& x, int edge) { return edge_path_with(x, generator_index(x), edge); }

PresCat hcat(const TruncSSet& x) {
  if (x.dim() < 2) throw InvariantViolation("homotopy category needs dimension >= 2");
  PresCat p = free_cat_FX(x);
  auto index = generator_index(x);
  for (int s : nondegenerate(x, 2)) {
    Path first = edge_path_with(x, index, x.face(2, 2, s));
    Path second = edge_path_with(x, index, x.face(2, 0, s));
    Relation r{concat(p.generators, first, second), edge_path_with(x, index, x.face(2, 1, s))};
    if (r.lhs != r.rhs) p.relations.push_back(std::move(r));
  }
  return p;
}

std::vector<Path> hcat_map(const TruncSSet& x, const TruncSSet& y, const SMap& f) {
  auto yindex = generator_index(y);
  std::vector<Path> out;
  for (int e : nondegenerate(x, 1)) out.push_back(edge_path_with(y, yindex, f.level[1][e]));
  return out;
}

Functor hcat_functor(const TruncSSet& x, const TruncSSet& y, const SMap& f, const MaterializeResult& hx,
                     const MaterializeResult& hy) {
  const FinCat& cx = hx.require_finite();
  hy.require_finite();
  auto images = hcat_map(x, y, f);
  Quiver qy = free_cat_FX(y).generators;
  Functor out;
  out.obj = f.level[0];
  for (MorId m = 0; m < cx.num_morphisms(); ++m) {
    const Path& rep = hx.classes[m].representative;
    out.mor.push_back(hy.evaluate(translate(qy, f.level[0][rep.source], rep, images)));
  }
  return out;
}

FinCat hcat_fincat(const TruncSSet& x, std::size_t max_len, std::size_t budget) {
  return materialize(hcat(x), max_len, budget).require_finite();
}

ComparisonReport sk2_invariance(const TruncSSet& x, std::size_t budget) {
  if (x.dim() < 3) throw InvariantViolation("sk2 invariance needs dimension >= 3");
  Skeleton s = sk(x, 2);
  PresCat hs = hcat(s.sset), hx = hcat(x);
  MaterializeResult ms = materialize(hs, 0, budget), mx = materialize(hx, 0, budget);
  if (ms.finite() && mx.finite()) {
    Functor f = hcat_functor(s.sset, x, s.counit, ms, mx);
    if (!is_functor(*ms.category, *mx.category, f)) return {false, "counit does not induce a functor"};
    if (!is_bijective(*ms.category, *mx.category, f)) return {false, "induced functor is not bijective"};
    return {true, "counit induces a bijective functor"};
  }
  // Presentation route: the counit is a bijection on vertices and edges.
  std::vector<VertexId> pv = s.counit.level[0], qv(x.size(0));
  for (int v = 0; v < s.sset.size(0); ++v) qv[pv[v]] = v;
  std::vector<int> back(x.size(1), -1);
  for (int e = 0; e < s.sset.size(1); ++e) back[s.counit.level[1][e]] = e;
  auto sindex = generator_index(s.sset);
  std::vector<Path> qg;
  for (int e : nondegenerate(x, 1)) qg.push_back(edge_path_with(s.sset, sindex, back[e]));
  return tietze_check(hs, hx, pv, qv, hcat_map(s.sset, x, s.counit), qg, budget);
}

// ---------------------------------------------------------------------------

void validate_cat_diagram(const CatDiagram& d) {
  const FinCat& j = d.index;
  if (static_cast<int>(d.objects.size()) != j.num_objects() ||
      static_cast<int>(d.arrows.size()) != j.num_morphisms())
    throw InvariantViolation("diagram does not match its index category");
  for (MorId u = 0; u < j.num_morphisms(); ++u)
    validate_functor(d.objects[j.src(u)], d.objects[j.tgt(u)], d.arrows[u]);
  for (ObjId a = 0; a < j.num_objects(); ++a)
    if (d.arrows[j.identity(a)] != identity_functor(d.objects[a]))
      throw InvariantViolation("diagram sends an identity to a non-identity functor");
  for (MorId f = 0; f < j.num_morphisms(); ++f)
    for (MorId g = 0; g < j.num_morphisms(); ++g)
      if (j.composable(g, f) && d.arrows[j.compose(g, f)] != compose(d.arrows[g], d.arrows[f]))
        throw InvariantViolation("diagram does not preserve the composite " + j.morphism(g).name + "." +
                                 j.morphism(f).name);
}

namespace {

constexpr int kNerveDim = 3;

SSetDiagram nerve_diagram(const CatDiagram& d, std::vector<NerveResult>& nerves) {
  validate_cat_diagram(d);
  SSetDiagram out{d.index, {}, {}};
  for (const auto& c : d.objects) nerves.push_back(nerve(c, kNerveDim));
  for (const auto& n : nerves) out.objects.push_back(n.sset);
  for (MorId u = 0; u < d.index.num_morphisms(); ++u)
    out.arrows.push_back(nerve_map(nerves[d.index.src(u)], nerves[d.index.tgt(u)], d.arrows[u]));
  return out;
}

}  // namespace

ColimResult colim_cat(const CatDiagram& d, std::size_t max_len, std::size_t budget) {
  std::vector<NerveResult> nerves;
  SSetCocone cocone = colim_sset(nerve_diagram(d, nerves));
  ColimResult out;
  out.presentation = hcat(cocone.apex);
  out.table = materialize(out.presentation, max_len, budget);
  auto index = generator_index(cocone.apex);
  for (std::size_t j = 0; j < d.objects.size(); ++j) {
    out.leg_objects.push_back(cocone.legs[j].level[0]);
    std::vector<Path> paths;
    for (int e : cocone.legs[j].level[1]) paths.push_back(edge_path_with(cocone.apex, index, e));
    out.leg_paths.push_back(std::move(paths));
  }
  if (out.table.finite()) {
    std::vector<Functor> legs;
    for (std::size_t j = 0; j < d.objects.size(); ++j) {
      Functor f{out.leg_objects[j], {}};
      for (const auto& p : out.leg_paths[j]) f.mor.push_back(out.table.evaluate(p));
      legs.push_back(std::move(f));
    }
    out.legs = std::move(legs);
  }
  return out;
}

LimResult lim_cat(const CatDiagram& d, std::size_t budget) {
  std::vector<NerveResult> nerves;
  SSetCocone cone = lim_sset(nerve_diagram(d, nerves), budget);
  Categorified c = categorify(cone.apex);
  LimResult out{c.category, {}};
  for (std::size_t j = 0; j < d.objects.size(); ++j) {
    Functor f{cone.legs[j].level[0], cone.legs[j].level[1]};
    validate_functor(out.category, d.objects[j], f);
    out.legs.push_back(std::move(f));
  }
  return out;
}

CatDiagram parallel_pair_diagram(const FinCat& c, const FinCat& d, const Functor& f, const Functor& g) {
  CatDiagram out{parallel_pair(), {c, d}, {}};
  for (MorId u = 0; u < out.index.num_morphisms(); ++u) {
    const std::string& name = out.index.morphism(u).name;
    if (name == "s")
      out.arrows.push_back(f);
    else if (name == "t")
      out.arrows.push_back(g);
    else
      out.arrows.push_back(identity_functor(out.objects[out.index.src(u)]));
  }
  return out;
}

CoequalizerResult coeq_cat_direct(const FinCat& c, const FinCat& d, const Functor& f, const Functor& g) {
  validate_functor(c, d, f);
  validate_functor(c, d, g);
  UnionFind objs(d.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) objs.unite(f.obj[x], g.obj[x]);
  UnionFind mors(d.num_morphisms());
  for (MorId u = 0; u < c.num_morphisms(); ++u) mors.unite(f.mor[u], g.mor[u]);
  int nobj = 0;
  auto obj_class = objs.classes(&nobj);
  int nmor = 0;
  auto mor_class = mors.classes(&nmor);

  CoequalizerResult out;
  std::vector<ObjId> obj_rep(nobj, -1);
  for (ObjId x = 0; x < d.num_objects(); ++x)
    if (obj_rep[obj_class[x]] < 0) obj_rep[obj_class[x]] = x;
  for (ObjId x : obj_rep) out.presentation.generators.vertices.push_back(d.object_name(x));
  out.leg_objects = obj_class;

  std::vector<char> identity_class(nmor, 0);
  for (ObjId x = 0; x < d.num_objects(); ++x) identity_class[mor_class[d.identity(x)]] = 1;
  std::vector<EdgeId> generator(nmor, -1);
  for (MorId m = 0; m < d.num_morphisms(); ++m) {
    int k = mor_class[m];
    if (identity_class[k] || generator[k] >= 0) continue;
    generator[k] = out.presentation.generators.num_edges();
    out.presentation.generators.edges.push_back({d.morphism(m).name, obj_class[d.src(m)], obj_class[d.tgt(m)]});
  }
  for (MorId m = 0; m < d.num_morphisms(); ++m) {
    Path p{obj_class[d.src(m)], {}};
    if (generator[mor_class[m]] >= 0) p.edges.push_back(generator[mor_class[m]]);
    out.leg_paths.push_back(std::move(p));
  }
  const Quiver& q = out.presentation.generators;
  for (MorId fm = 0; fm < d.num_morphisms(); ++fm)
    for (MorId gm = 0; gm < d.num_morphisms(); ++gm) {
      if (!d.composable(gm, fm)) continue;
      Relation r{concat(q, out.leg_paths[fm], out.leg_paths[gm]), out.leg_paths[d.compose(gm, fm)]};
      if (r.lhs == r.rhs) continue;
      if (std::find(out.presentation.relations.begin(), out.presentation.relations.end(), r) !=
          out.presentation.relations.end())
        continue;
      out.presentation.relations.push_back(std::move(r));
    }
  validate_prescat(out.presentation);
  return out;
}

ComparisonReport compare_quotients(const PresCat& p, const std::vector<Path>& p_legs, const PresCat& q,
                                   const std::vector<Path>& q_legs, const FinCat& d, std::size_t table_len,
                                   std::size_t budget) {
  const Quiver& pq = p.generators;
  const Quiver& qq = q.generators;
  std::vector<VertexId> pv(pq.num_vertices(), -1), qv(qq.num_vertices(), -1);
  for (ObjId x = 0; x < d.num_objects(); ++x) {
    VertexId a = p_legs[d.identity(x)].source, b = q_legs[d.identity(x)].source;
    if ((pv[a] >= 0 && pv[a] != b) || (qv[b] >= 0 && qv[b] != a))
      return {false, "object identifications differ at '" + d.object_name(x) + "'"};
    pv[a] = b;
    qv[b] = a;
  }
  for (VertexId v : pv)
    if (v < 0) return {false, "a vertex is not hit by the legs"};
  for (VertexId v : qv)
    if (v < 0) return {false, "a vertex is not hit by the legs"};
  auto images = [&](const Quiver& from, const std::vector<Path>& from_legs, const std::vector<Path>& to_legs,
                    std::vector<Path>& out) -> bool {
    out.assign(from.num_edges(), Path{});
    std::vector<char> seen(from.num_edges(), 0);
    for (MorId m = 0; m < d.num_morphisms(); ++m)
      if (from_legs[m].size() == 1 && !seen[from_legs[m].edges[0]]) {
        seen[from_legs[m].edges[0]] = 1;
        out[from_legs[m].edges[0]] = to_legs[m];
      }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  std::vector<Path> pg, qg;
  if (!images(pq, p_legs, q_legs, pg) || !images(qq, q_legs, p_legs, qg))
    return {false, "some generator is not the image of a single morphism"};
  ComparisonReport r = tietze_check(p, q, pv, qv, pg, qg, budget);
  if (!r.holds) return r;
  for (MorId m = 0; m < d.num_morphisms(); ++m)
    if (!is_equal(q, translate(qq, pv[p_legs[m].source], p_legs[m], pg), q_legs[m], budget))
      return {false, "legs disagree on '" + d.morphism(m).name + "'"};

  MaterializeResult mp = materialize(p, table_len, budget), mq = materialize(q, table_len, budget);
  if (mp.finite() != mq.finite()) return {false, "only one side is certified finite at the bound"};
  if (mp.finite()) {
    Functor f;
    f.obj = pv;
    for (const auto& c : mp.classes)
      f.mor.push_back(mq.evaluate(translate(qq, pv[c.representative.source], c.representative, pg)));
    if (!is_functor(*mp.category, *mq.category, f) || !is_bijective(*mp.category, *mq.category, f))
      return {false, "materialized tables are not isomorphic under the translation"};
    r.detail += "; materialized tables isomorphic";
  } else {
    r.detail += "; both sides uncertified at bound " + std::to_string(table_len);
  }
  return r;
}

}  // namespace hocat
