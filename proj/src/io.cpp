#include "hocat/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hocat/words.hpp"

namespace hocat {

namespace {

template <class T>
const T* as(const Statement& s) {
  return std::get_if<T>(&s);
}

std::string at(SourceLoc loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": "; }

/// Rethrows the active module error with a location prefix, keeping its type.
[[noreturn]] void rethrow_at(SourceLoc loc) {
  try {
    throw;
  } catch (const FrontendError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const AssociativityViolation& e) {
    throw AssociativityViolation(at(loc) + e.what());
  } catch (const UnitViolation& e) {
    throw UnitViolation(at(loc) + e.what());
  } catch (const SrcTgtMismatch& e) {
    throw SrcTgtMismatch(at(loc) + e.what());
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(at(loc) + e.what());
  } catch (const MalformedPresentation& e) {
    throw MalformedPresentation(at(loc) + e.what());
  } catch (const PossiblyInfinite& e) {
    throw PossiblyInfinite(at(loc) + e.what());
  } catch (const NotNatural& e) {
    throw NotNatural(at(loc) + e.what());
  } catch (const NotAFunctor& e) {
    throw NotAFunctor(at(loc) + e.what());
  } catch (const NotIEP& e) {
    throw NotIEP(at(loc) + e.what());
  }
}

void require_kind(const Document& doc, std::initializer_list<DocKind> kinds) {
  for (DocKind k : kinds)
    if (doc.kind == k) return;
  throw MalformedPresentation(at(doc.loc) + "document '" + doc.name + "' is a " + to_string(doc.kind) +
                              " document, expected " + to_string(*kinds.begin()));
}

std::string identity_name(const std::string& object) { return "id_" + object; }

/// Name lookup shared by relation and mark statements.
struct CategoryNames {
  std::map<std::string, VertexId> objects;
  std::map<std::string, EdgeId> arrows;

  /// Arrow id, or -1 - object for an identity.
  int resolve(const std::string& n, SourceLoc loc) const {
    if (auto it = arrows.find(n); it != arrows.end()) return it->second;
    if (n.rfind("id_", 0) == 0)
      if (auto it = objects.find(n.substr(3)); it != objects.end()) return -1 - it->second;
    throw UnknownReference("unknown morphism '" + n + "'", loc);
  }
};

struct LoadedPres {
  PresCat pres;
  CategoryNames names;
  std::vector<SourceLoc> relation_loc;
};

std::string written(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "." : "") + names[i];
  return s;
}

LoadedPres load_pres_impl(const Document& doc) {
  require_kind(doc, {DocKind::Category, DocKind::Marked});
  LoadedPres out;
  Quiver& q = out.pres.generators;
  for (const auto& s : doc.body) {
    if (auto o = as<ObjectsStmt>(s))
      for (const auto& n : o->names) {
        out.names.objects[n] = q.num_vertices();
        q.vertices.push_back(n);
      }
    if (auto a = as<ArrowStmt>(s)) {
      out.names.arrows[a->name] = q.num_edges();
      q.edges.push_back({a->name, out.names.objects.at(a->src), out.names.objects.at(a->tgt)});
    }
  }
  auto to_path = [&](const std::vector<std::string>& side, SourceLoc loc) {
    Path p;
    std::optional<VertexId> cur;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
      int r = out.names.resolve(*it, loc);
      VertexId s = r >= 0 ? q.edges[r].src : -1 - r;
      VertexId t = r >= 0 ? q.edges[r].tgt : -1 - r;
      if (!cur) p.source = s;
      else if (*cur != s)
        throw MalformedPresentation(at(loc) + "path '" + written(side) + "' is not composable at '" + *it + "'");
      cur = t;
      if (r >= 0) p.edges.push_back(r);
    }
    return std::pair{p, *cur};
  };
  for (const auto& s : doc.body)
    if (auto r = as<RelationStmt>(s)) {
      auto [lhs, lt] = to_path(r->lhs, r->loc);
      auto [rhs, rt] = to_path(r->rhs, r->loc);
      if (lhs.source != rhs.source || lt != rt)
        throw MalformedPresentation(at(r->loc) + "relation " + written(r->lhs) + " = " + written(r->rhs) +
                                    " is not parallel");
      out.pres.relations.push_back({lhs, rhs});
      out.relation_loc.push_back(r->loc);
    }
  try {
    validate_prescat(out.pres);
  } catch (...) {
    rethrow_at(doc.loc);
  }
  return out;
}

struct LoadedCat {
  FinCat cat;
  std::vector<MorId> arrow_morphism;
  std::vector<MorId> identity_morphism;
};

/// Composition-table reading; empty when the relations are not a table.
std::optional<LoadedCat> table_mode(const Document& doc, const LoadedPres& lp) {
  const PresCat& p = lp.pres;
  const Quiver& q = p.generators;
  const int nv = q.num_vertices(), ne = q.num_edges();
  // Morphism ids: identities first, then arrows.
  auto arrow_id = [&](EdgeId e) { return nv + e; };
  std::map<std::pair<MorId, MorId>, std::pair<MorId, SourceLoc>> table;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& r = p.relations[i];
    if (r.lhs.edges.size() != 2 || r.rhs.edges.size() > 1) return std::nullopt;
    MorId f = arrow_id(r.lhs.edges[0]), g = arrow_id(r.lhs.edges[1]);
    MorId h = r.rhs.edges.empty() ? r.rhs.source : arrow_id(r.rhs.edges[0]);
    auto [it, fresh] = table.emplace(std::pair{g, f}, std::pair{h, lp.relation_loc[i]});
    if (!fresh && it->second.first != h)
      throw MalformedPresentation(at(lp.relation_loc[i]) + "conflicting composites for " + q.edges[r.lhs.edges[1]].name +
                                  "." + q.edges[r.lhs.edges[0]].name);
  }
  for (EdgeId f = 0; f < ne; ++f)
    for (EdgeId g = 0; g < ne; ++g)
      if (q.edges[f].tgt == q.edges[g].src && !table.count({arrow_id(g), arrow_id(f)})) return std::nullopt;

  FinCatData data;
  data.objects = q.vertices;
  for (VertexId v = 0; v < nv; ++v) {
    data.morphisms.push_back({identity_name(q.vertices[v]), v, v});
    data.identity.push_back(v);
  }
  for (const auto& e : q.edges) data.morphisms.push_back({e.name, e.src, e.tgt});
  auto src = [&](MorId m) { return data.morphisms[m].src; };
  auto tgt = [&](MorId m) { return data.morphisms[m].tgt; };
  auto comp = [&](MorId g, MorId f) -> MorId {
    if (f < nv) return g;
    if (g < nv) return f;
    return table.at({g, f}).first;
  };
  const int nm = nv + ne;
  for (MorId f = nv; f < nm; ++f)
    for (MorId g = nv; g < nm; ++g) {
      if (tgt(f) != src(g)) continue;
      for (MorId h = nv; h < nm; ++h) {
        if (tgt(g) != src(h)) continue;
        MorId left = comp(comp(h, g), f), right = comp(h, comp(g, f));
        if (left != right)
          throw AssociativityViolation(at(table.at({g, f}).second) + "(" + data.morphisms[h].name + "." +
                                       data.morphisms[g].name + ")." + data.morphisms[f].name + " = " +
                                       data.morphisms[left].name + " but " + data.morphisms[h].name + ".(" +
                                       data.morphisms[g].name + "." + data.morphisms[f].name + ") = " +
                                       data.morphisms[right].name);
      }
    }
  for (MorId f = 0; f < nm; ++f)
    for (MorId g = 0; g < nm; ++g)
      if (tgt(f) == src(g)) data.composition.push_back({g, f, comp(g, f)});
  LoadedCat out;
  try {
    out.cat = make_fincat(std::move(data));
  } catch (...) {
    rethrow_at(doc.loc);
  }
  for (EdgeId e = 0; e < ne; ++e) out.arrow_morphism.push_back(arrow_id(e));
  for (VertexId v = 0; v < nv; ++v) out.identity_morphism.push_back(v);
  return out;
}

LoadedCat load_cat_impl(const Document& doc, std::size_t budget) {
  LoadedPres lp = load_pres_impl(doc);
  if (auto t = table_mode(doc, lp)) return std::move(*t);
  MaterializeResult m;
  try {
    m = materialize(lp.pres, 0, budget);
  } catch (...) {
    rethrow_at(doc.loc);
  }
  if (!m.finite())
    throw PossiblyInfinite(at(doc.loc) + "category '" + doc.name + "' could not be certified finite (word length " +
                           std::to_string(m.max_len) + ")");
  LoadedCat out;
  out.cat = *m.category;
  out.arrow_morphism = m.generator_morphism;
  for (VertexId v = 0; v < lp.pres.generators.num_vertices(); ++v) out.identity_morphism.push_back(out.cat.identity(v));
  return out;
}

std::string morphism_ref(const FinCat& c, MorId m) {
  return c.is_identity(m) ? identity_name(c.object_name(c.src(m))) : c.morphism(m).name;
}

std::optional<MorId> find_morphism_ref(const FinCat& c, const std::string& n) {
  if (auto m = c.find_morphism(n)) return m;
  if (n.rfind("id_", 0) == 0)
    if (auto x = c.find_object(n.substr(3))) return c.identity(*x);
  return std::nullopt;
}

}  // namespace

PresCat load_prescat(const Document& doc) { return load_pres_impl(doc).pres; }

FinCat load_fincat(const Document& doc, std::size_t budget) { return load_cat_impl(doc, budget).cat; }

Quiver load_quiver(const Document& doc) {
  require_kind(doc, {DocKind::Quiver});
  Quiver q;
  std::map<std::string, VertexId> vertex;
  std::map<VertexId, EdgeId> loops;
  for (const auto& s : doc.body) {
    if (auto o = as<ObjectsStmt>(s))
      for (const auto& n : o->names) {
        vertex[n] = q.num_vertices();
        q.vertices.push_back(n);
      }
    if (auto a = as<ArrowStmt>(s)) q.edges.push_back({a->name, vertex.at(a->src), vertex.at(a->tgt)});
    if (auto l = as<LoopStmt>(s)) {
      VertexId v = vertex.at(l->vertex);
      loops[v] = q.num_edges();
      q.edges.push_back({l->name, v, v});
    }
  }
  if (doc.reflexive) {
    q.reflexive.emplace();
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      auto it = loops.find(v);
      if (it == loops.end())
        throw InvariantViolation(at(doc.loc) + "vertex '" + q.vertices[v] + "' has no distinguished loop");
      q.reflexive->push_back(it->second);
    }
  }
  try {
    validate_quiver(q);
  } catch (...) {
    rethrow_at(doc.loc);
  }
  return q;
}

TruncSSet load_sset(const Document& doc) {
  require_kind(doc, {DocKind::SSet});
  if (doc.nondeg) {
    NondegPresentation p;
    p.dim = doc.dim;
    for (const auto& s : doc.body)
      if (auto c = as<CellStmt>(s)) {
        NondegSimplex x{c->name, c->level, {}};
        for (const auto& f : c->faces) x.faces.push_back({f.degeneracies, f.target});
        p.simplices.push_back(std::move(x));
      }
    try {
      return from_nondeg(p);
    } catch (...) {
      rethrow_at(doc.loc);
    }
  }
  const int D = doc.dim;
  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  std::vector<std::map<std::string, int>> index(D + 1);
  std::vector<std::vector<SourceLoc>> where(D + 1);
  for (const auto& s : doc.body)
    if (auto x = as<SimplexStmt>(s)) {
      index[x->level][x->name] = static_cast<int>(data.names[x->level].size());
      data.names[x->level].push_back(x->name);
      where[x->level].push_back(x->loc);
    }
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    const int sz = static_cast<int>(data.names[n].size());
    if (n >= 1) data.face[n].assign(n + 1, std::vector<int>(sz, -1));
    if (n < D) data.degen[n].assign(n + 1, std::vector<int>(sz, -1));
  }
  for (const auto& s : doc.body)
    if (auto t = as<TableStmt>(s)) {
      const int n = t->level;
      const int x = index[n].at(t->name);
      const int other = t->faces ? n - 1 : n + 1;
      auto& table = t->faces ? data.face[n] : data.degen[n];
      for (int i = 0; i <= n; ++i) table[i][x] = index[other].at(t->values[i]);
    }
  for (int n = 0; n <= D; ++n)
    for (int x = 0; x < static_cast<int>(data.names[n].size()); ++x) {
      if (n >= 1 && data.face[n][0][x] < 0)
        throw InvariantViolation(at(where[n][x]) + "simplex '" + data.names[n][x] + "' has no faces entry");
      if (n < D && data.degen[n][0][x] < 0)
        throw InvariantViolation(at(where[n][x]) + "simplex '" + data.names[n][x] + "' has no degens entry");
    }
  try {
    return make_sset(std::move(data));
  } catch (...) {
    rethrow_at(doc.loc);
  }
}

MarkedCat load_marked(const Document& doc, std::size_t budget) {
  require_kind(doc, {DocKind::Marked});
  LoadedCat lc = load_cat_impl(doc, budget);
  LoadedPres lp = load_pres_impl(doc);
  std::vector<MorId> marking;
  SourceLoc first = doc.loc;
  for (const auto& s : doc.body)
    if (auto m = as<MarkStmt>(s)) {
      first = m->loc;
      for (const auto& n : m->names) {
        int r = lp.names.resolve(n, m->loc);
        marking.push_back(r >= 0 ? lc.arrow_morphism[r] : lc.identity_morphism[-1 - r]);
      }
    }
  try {
    return make_marked(std::move(lc.cat), std::move(marking));
  } catch (...) {
    rethrow_at(first);
  }
}

CatDiagram load_diagram(const Document& doc, const std::string& base_dir, std::size_t budget) {
  require_kind(doc, {DocKind::Diagram});
  namespace fs = std::filesystem;
  auto load_file = [&](const std::string& rel) { return load_fincat(read_document((fs::path(base_dir) / rel).string()), budget); };
  CatDiagram d;
  for (const auto& s : doc.body)
    if (auto i = as<IndexStmt>(s)) {
      try {
        d.index = load_file(i->path);
      } catch (const FrontendError&) {
        throw;
      } catch (...) {
        rethrow_at(i->loc);
      }
    }
  const int n = d.index.num_objects();
  std::vector<std::optional<FinCat>> values(n);
  for (const auto& s : doc.body)
    if (auto v = as<ValueStmt>(s)) {
      auto j = d.index.find_object(v->object);
      if (!j) throw UnknownReference("unknown index object '" + v->object + "'", v->loc);
      try {
        values[*j] = load_file(v->path);
      } catch (const FrontendError&) {
        throw;
      } catch (...) {
        rethrow_at(v->loc);
      }
    }
  for (int j = 0; j < n; ++j) {
    if (!values[j])
      throw MalformedPresentation(at(doc.loc) + "no value for index object '" + d.index.object_name(j) + "'");
    d.objects.push_back(std::move(*values[j]));
  }
  const int nm = d.index.num_morphisms();
  std::vector<Functor> arrows(nm);
  std::vector<std::optional<SourceLoc>> seen(nm);
  for (MorId u = 0; u < nm; ++u) {
    const FinCat& a = d.objects[d.index.src(u)];
    arrows[u].obj.assign(a.num_objects(), -1);
    arrows[u].mor.assign(a.num_morphisms(), -1);
  }
  for (const auto& s : doc.body)
    if (auto m = as<MapStmt>(s)) {
      auto u = find_morphism_ref(d.index, m->arrow);
      if (!u) throw UnknownReference("unknown index arrow '" + m->arrow + "'", m->loc);
      if (d.index.is_identity(*u)) throw MalformedPresentation(at(m->loc) + "identity arrows map identically");
      seen[*u] = seen[*u].value_or(m->loc);
      const FinCat& a = d.objects[d.index.src(*u)];
      const FinCat& b = d.objects[d.index.tgt(*u)];
      if (m->objects) {
        auto x = a.find_object(m->from);
        if (!x) throw UnknownReference("unknown object '" + m->from + "'", m->loc);
        auto y = b.find_object(m->to);
        if (!y) throw UnknownReference("unknown object '" + m->to + "'", m->loc);
        if (arrows[*u].obj[*x] >= 0) throw DuplicateId("object '" + m->from + "' mapped twice", m->loc);
        arrows[*u].obj[*x] = *y;
      } else {
        auto f = find_morphism_ref(a, m->from);
        if (!f) throw UnknownReference("unknown morphism '" + m->from + "'", m->loc);
        auto g = find_morphism_ref(b, m->to);
        if (!g) throw UnknownReference("unknown morphism '" + m->to + "'", m->loc);
        if (arrows[*u].mor[*f] >= 0) throw DuplicateId("morphism '" + m->from + "' mapped twice", m->loc);
        arrows[*u].mor[*f] = *g;
      }
    }
  for (MorId u = 0; u < nm; ++u) {
    const FinCat& a = d.objects[d.index.src(u)];
    const FinCat& b = d.objects[d.index.tgt(u)];
    Functor& F = arrows[u];
    if (d.index.is_identity(u)) {
      F = identity_functor(a);
      continue;
    }
    SourceLoc loc = seen[u].value_or(doc.loc);
    for (ObjId x = 0; x < a.num_objects(); ++x)
      if (F.obj[x] < 0)
        throw MalformedPresentation(at(loc) + "arrow '" + d.index.morphism(u).name + "' does not map object '" +
                                    a.object_name(x) + "'");
    for (MorId f = 0; f < a.num_morphisms(); ++f) {
      if (a.is_identity(f) && F.mor[f] < 0) F.mor[f] = b.identity(F.obj[a.src(f)]);
      if (F.mor[f] < 0)
        throw MalformedPresentation(at(loc) + "arrow '" + d.index.morphism(u).name + "' does not map morphism '" +
                                    a.morphism(f).name + "'");
    }
  }
  d.arrows = std::move(arrows);
  try {
    validate_cat_diagram(d);
  } catch (...) {
    rethrow_at(doc.loc);
  }
  return d;
}

Document store_fincat(const FinCat& c, const std::string& name) {
  Document doc;
  doc.kind = DocKind::Category;
  doc.name = name;
  doc.body.push_back(ObjectsStmt{{}, c.objects()});
  std::vector<MorId> arrows;
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) {
      arrows.push_back(m);
      doc.body.push_back(ArrowStmt{{}, c.morphism(m).name, c.object_name(c.src(m)), c.object_name(c.tgt(m))});
    }
  for (MorId f : arrows)
    for (MorId g : arrows)
      if (c.composable(g, f))
        doc.body.push_back(RelationStmt{{}, {c.morphism(g).name, c.morphism(f).name}, {morphism_ref(c, c.compose(g, f))}});
  return doc;
}

Document store_prescat(const PresCat& p, const std::string& name) {
  const Quiver& q = p.generators;
  Document doc;
  doc.kind = DocKind::Category;
  doc.name = name;
  doc.body.push_back(ObjectsStmt{{}, q.vertices});
  for (const auto& e : q.edges) doc.body.push_back(ArrowStmt{{}, e.name, q.vertices[e.src], q.vertices[e.tgt]});
  auto side = [&](const Path& path) {
    std::vector<std::string> out;
    if (path.empty()) return std::vector<std::string>{identity_name(q.vertices[path.source])};
    for (auto it = path.edges.rbegin(); it != path.edges.rend(); ++it) out.push_back(q.edges[*it].name);
    return out;
  };
  for (const auto& r : p.relations) doc.body.push_back(RelationStmt{{}, side(r.lhs), side(r.rhs)});
  return doc;
}

Document store_quiver(const Quiver& q, const std::string& name) {
  Document doc;
  doc.kind = DocKind::Quiver;
  doc.name = name;
  doc.reflexive = q.reflexive.has_value();
  doc.body.push_back(ObjectsStmt{{}, q.vertices});
  for (EdgeId e = 0; e < q.num_edges(); ++e) {
    const Edge& x = q.edges[e];
    if (q.is_distinguished(e))
      doc.body.push_back(LoopStmt{{}, x.name, q.vertices[x.src]});
    else
      doc.body.push_back(ArrowStmt{{}, x.name, q.vertices[x.src], q.vertices[x.tgt]});
  }
  return doc;
}

Document store_sset(const TruncSSet& x, const std::string& name, bool nondeg) {
  Document doc;
  doc.kind = DocKind::SSet;
  doc.name = name;
  doc.dim = x.dim();
  doc.nondeg = nondeg;
  if (nondeg) {
    for (const auto& s : to_nondeg(x).simplices) {
      CellStmt c{{}, s.dim, s.name, {}};
      for (const auto& f : s.faces) c.faces.push_back({f.degeneracies, f.target});
      doc.body.push_back(std::move(c));
    }
    return doc;
  }
  for (int n = 0; n <= x.dim(); ++n)
    for (int a = 0; a < x.size(n); ++a) doc.body.push_back(SimplexStmt{{}, n, x.name(n, a)});
  for (int n = 0; n <= x.dim(); ++n)
    for (int a = 0; a < x.size(n); ++a) {
      if (n >= 1) {
        TableStmt t{{}, true, n, x.name(n, a), {}};
        for (int i = 0; i <= n; ++i) t.values.push_back(x.name(n - 1, x.face(n, i, a)));
        doc.body.push_back(std::move(t));
      }
      if (n < x.dim()) {
        TableStmt t{{}, false, n, x.name(n, a), {}};
        for (int i = 0; i <= n; ++i) t.values.push_back(x.name(n + 1, x.degen(n, i, a)));
        doc.body.push_back(std::move(t));
      }
    }
  return doc;
}

Document store_marked(const MarkedCat& m, const std::string& name) {
  Document doc = store_fincat(m.cat, name);
  doc.kind = DocKind::Marked;
  if (!m.marking.empty()) {
    MarkStmt s;
    for (MorId f : m.marking) s.names.push_back(morphism_ref(m.cat, f));
    doc.body.push_back(std::move(s));
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document read_document(const std::string& path) { return parse(read_file(path)); }

}  // namespace hocat
