#include "hocat/elements.hpp"

#include <functional>
#include <random>

#include "hocat/union_find.hpp"

namespace hocat {

namespace {

bool covariant(const SetValuedFunctor& w) { return w.variance == Variance::Covariant; }

/// Object whose values feed the map of f.
ObjId map_domain(const SetValuedFunctor& w, MorId f) {
  return covariant(w) ? w.base.src(f) : w.base.tgt(f);
}
ObjId map_codomain(const SetValuedFunctor& w, MorId f) {
  return covariant(w) ? w.base.tgt(f) : w.base.src(f);
}

}  // namespace

void validate_set_functor(const SetValuedFunctor& w) {
  const FinCat& c = w.base;
  if (static_cast<int>(w.values.size()) != c.num_objects() || static_cast<int>(w.map.size()) != c.num_morphisms())
    throw NotAFunctor("set-valued functor does not match its base");
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (static_cast<int>(w.map[f].size()) != w.size(map_domain(w, f)))
      throw NotAFunctor("map of '" + c.morphism(f).name + "' has the wrong domain size");
    for (int v : w.map[f])
      if (v < 0 || v >= w.size(map_codomain(w, f)))
        throw NotAFunctor("map of '" + c.morphism(f).name + "' leaves its codomain");
  }
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (int a = 0; a < w.size(x); ++a)
      if (w.map[c.identity(x)][a] != a)
        throw NotAFunctor("identity at '" + c.object_name(x) + "' is not sent to the identity");
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f)) continue;
      const auto& gf = w.map[c.compose(g, f)];
      const auto& first = covariant(w) ? w.map[f] : w.map[g];
      const auto& second = covariant(w) ? w.map[g] : w.map[f];
      for (std::size_t a = 0; a < gf.size(); ++a)
        if (gf[a] != second[first[a]])
          throw NotAFunctor("composite " + c.morphism(g).name + "." + c.morphism(f).name + " is not preserved");
    }
}

SetValuedFunctor constant_singleton(const FinCat& base, Variance v) {
  SetValuedFunctor w{base, v, {}, {}};
  w.values.assign(base.num_objects(), {"*"});
  w.map.assign(base.num_morphisms(), {0});
  return w;
}

SetValuedFunctor representable_contra(const FinCat& base, ObjId c) {
  SetValuedFunctor w{base, Variance::Contravariant, {}, {}};
  std::vector<std::vector<int>> pos(base.num_objects(), std::vector<int>(base.num_morphisms(), -1));
  for (ObjId x = 0; x < base.num_objects(); ++x) {
    w.values.emplace_back();
    for (MorId h : base.hom(x, c)) {
      pos[x][h] = static_cast<int>(w.values[x].size());
      w.values[x].push_back(base.morphism(h).name);
    }
  }
  for (MorId f = 0; f < base.num_morphisms(); ++f) {
    std::vector<int> m;
    for (MorId h : base.hom(base.tgt(f), c)) m.push_back(pos[base.src(f)][base.compose(h, f)]);
    w.map.push_back(std::move(m));
  }
  return w;
}

SetValuedFunctor representable_co(const FinCat& base, ObjId c) {
  SetValuedFunctor w{base, Variance::Covariant, {}, {}};
  std::vector<std::vector<int>> pos(base.num_objects(), std::vector<int>(base.num_morphisms(), -1));
  for (ObjId x = 0; x < base.num_objects(); ++x) {
    w.values.emplace_back();
    for (MorId h : base.hom(c, x)) {
      pos[x][h] = static_cast<int>(w.values[x].size());
      w.values[x].push_back(base.morphism(h).name);
    }
  }
  for (MorId f = 0; f < base.num_morphisms(); ++f) {
    std::vector<int> m;
    for (MorId h : base.hom(c, base.src(f))) m.push_back(pos[base.tgt(f)][base.compose(f, h)]);
    w.map.push_back(std::move(m));
  }
  return w;
}

SetValuedFunctor sum(const std::vector<SetValuedFunctor>& parts) {
  if (parts.empty()) throw InvariantViolation("sum of no functors has no base");
  const FinCat& base = parts.front().base;
  SetValuedFunctor w{base, parts.front().variance, {}, {}};
  w.values.resize(base.num_objects());
  w.map.resize(base.num_morphisms());
  std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(base.num_objects(), 0));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (ObjId x = 0; x < base.num_objects(); ++x) {
      offset[i][x] = static_cast<int>(w.values[x].size());
      for (const auto& v : parts[i].values[x]) w.values[x].push_back(std::to_string(i) + ":" + v);
    }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (MorId f = 0; f < base.num_morphisms(); ++f)
      for (int v : parts[i].map[f]) w.map[f].push_back(offset[i][map_codomain(w, f)] + v);
  return w;
}

SetValuedFunctor random_set_functor(const FinCat& base, Variance v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SetValuedFunctor> parts;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    if (base.num_objects() > 0 && rng() % 3 != 0) {
      ObjId c = static_cast<ObjId>(rng() % base.num_objects());
      parts.push_back(v == Variance::Covariant ? representable_co(base, c) : representable_contra(base, c));
    } else {
      parts.push_back(constant_singleton(base, v));
    }
  }
  return sum(parts);
}

SetValuedFunctor as_presheaf(const TruncSSet& x) {
  SetValuedFunctor w{simplex_category(x.dim()), Variance::Contravariant, {}, {}};
  for (int n = 0; n <= x.dim(); ++n) w.values.push_back(x.names(n));
  for (MorId f = 0; f < w.base.num_morphisms(); ++f) {
    Monotone theta = simplex_morphism_map(w.base, f);
    const int n = w.base.tgt(f);
    std::vector<int> m;
    for (int a = 0; a < x.size(n); ++a) m.push_back(x.act(theta, n, a));
    w.map.push_back(std::move(m));
  }
  return w;
}

// ---------------------------------------------------------------------------

int ElementsCat::object_of(ObjId c, int x) const {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == std::pair<ObjId, int>{c, x}) return static_cast<int>(k);
  throw InvariantViolation("no such element");
}

ElementsCat elements(const SetValuedFunctor& w) {
  validate_set_functor(w);
  const FinCat& c = w.base;
  ElementsCat out;
  std::vector<int> obj_offset(c.num_objects());
  FinCatData d;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    obj_offset[x] = static_cast<int>(out.elements.size());
    for (int a = 0; a < w.size(x); ++a) {
      out.elements.push_back({x, a});
      d.objects.push_back("(" + c.object_name(x) + "," + w.values[x][a] + ")");
    }
  }
  // Morphisms over f are labelled by values at map_domain(f).
  std::vector<int> mor_offset(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    mor_offset[f] = static_cast<int>(out.labels.size());
    const ObjId dom = map_domain(w, f);
    for (int a = 0; a < w.size(dom); ++a) {
      out.labels.push_back({f, a});
      const int b = w.map[f][a];
      const int s = covariant(w) ? obj_offset[c.src(f)] + a : obj_offset[c.src(f)] + b;
      const int t = covariant(w) ? obj_offset[c.tgt(f)] + b : obj_offset[c.tgt(f)] + a;
      d.morphisms.push_back({c.morphism(f).name + "@" + w.values[dom][a], s, t});
    }
  }
  for (const auto& [x, a] : out.elements) d.identity.push_back(mor_offset[c.identity(x)] + a);
  for (std::size_t i = 0; i < out.labels.size(); ++i)
    for (std::size_t j = 0; j < out.labels.size(); ++j) {
      const auto [f, a] = out.labels[i];
      const auto [g, b] = out.labels[j];
      if (d.morphisms[i].tgt != d.morphisms[j].src) continue;
      const MorId gf = c.compose(g, f);
      d.composition.push_back({static_cast<MorId>(j), static_cast<MorId>(i),
                               mor_offset[gf] + (covariant(w) ? a : b)});
    }
  out.cat = make_fincat(std::move(d));
  for (const auto& e : out.elements) out.projection.obj.push_back(e.first);
  for (const auto& l : out.labels) out.projection.mor.push_back(l.first);
  validate_functor(out.cat, c, out.projection);
  return out;
}

void validate_natural(const SetValuedFunctor& w1, const SetValuedFunctor& w2, const NatTrans& a) {
  const FinCat& c = w1.base;
  if (w1.variance != w2.variance) throw NotNatural("functors of different variance");
  if (static_cast<int>(a.component.size()) != c.num_objects()) throw NotNatural("wrong number of components");
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (static_cast<int>(a.component[x].size()) != w1.size(x))
      throw NotNatural("component at '" + c.object_name(x) + "' has the wrong domain");
    for (int v : a.component[x])
      if (v < 0 || v >= w2.size(x)) throw NotNatural("component at '" + c.object_name(x) + "' leaves its codomain");
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const ObjId dom = map_domain(w1, f), cod = map_codomain(w1, f);
    for (int v = 0; v < w1.size(dom); ++v)
      if (a.component[cod][w1.map[f][v]] != w2.map[f][a.component[dom][v]])
        throw NotNatural("square at '" + c.morphism(f).name + "' fails on '" + w1.values[dom][v] + "'");
  }
}

std::vector<NatTrans> enumerate_natural(const SetValuedFunctor& w1, const SetValuedFunctor& w2,
                                        std::size_t budget) {
  const FinCat& c = w1.base;
  std::vector<NatTrans> out;
  NatTrans cur;
  cur.component.resize(c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) cur.component[x].assign(w1.size(x), -1);
  // Flatten the assignment slots.
  std::vector<std::pair<ObjId, int>> slots;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (int v = 0; v < w1.size(x); ++v) slots.push_back({x, v});
  auto consistent = [&]() {
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      const ObjId dom = map_domain(w1, f), cod = map_codomain(w1, f);
      for (int v = 0; v < w1.size(dom); ++v) {
        int lhs = cur.component[cod][w1.map[f][v]];
        int src = cur.component[dom][v];
        if (lhs < 0 || src < 0) continue;
        if (lhs != w2.map[f][src]) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == slots.size()) {
      if (out.size() >= budget) throw BudgetExceeded("natural transformation enumeration", budget);
      out.push_back(cur);
      return;
    }
    auto [x, v] = slots[k];
    for (int y = 0; y < w2.size(x); ++y) {
      cur.component[x][v] = y;
      if (consistent()) rec(k + 1);
    }
    cur.component[x][v] = -1;
  };
  rec(0);
  return out;
}

Functor elements_map(const SetValuedFunctor& w1, const SetValuedFunctor& w2, const NatTrans& a,
                     const ElementsCat& e1, const ElementsCat& e2) {
  validate_natural(w1, w2, a);
  Functor out;
  for (const auto& [x, v] : e1.elements) out.obj.push_back(e2.object_of(x, a.component[x][v]));
  for (const auto& [f, v] : e1.labels) {
    const int image = a.component[map_domain(w1, f)][v];
    MorId m = -1;
    for (std::size_t k = 0; k < e2.labels.size(); ++k)
      if (e2.labels[k] == std::pair<MorId, int>{f, image}) m = static_cast<MorId>(k);
    out.mor.push_back(m);
  }
  validate_functor(e1.cat, e2.cat, out);
  return out;
}

// ---------------------------------------------------------------------------

SetColimit weighted_colim_set(const SetValuedFunctor& w, const SetValuedFunctor& f) {
  if (w.variance != Variance::Contravariant || f.variance != Variance::Covariant)
    throw InvariantViolation("weighted colimit needs a contravariant weight and a covariant functor");
  validate_set_functor(f);
  SetColimit out;
  out.shape = elements(w);
  const auto& el = out.shape;
  std::vector<int> offset;
  int total = 0;
  for (const auto& e : el.elements) {
    offset.push_back(total);
    total += f.size(e.first);
  }
  UnionFind uf(total);
  for (MorId m = 0; m < el.cat.num_morphisms(); ++m) {
    const MorId base = el.labels[m].first;
    const int s = el.cat.src(m), t = el.cat.tgt(m);
    for (int a = 0; a < f.size(el.elements[s].first); ++a) uf.unite(offset[s] + a, offset[t] + f.map[base][a]);
  }
  int count = 0;
  auto cls = uf.classes(&count);
  out.elements.assign(count, "");
  out.cocone.resize(el.elements.size());
  for (std::size_t k = 0; k < el.elements.size(); ++k)
    for (int a = 0; a < f.size(el.elements[k].first); ++a) {
      int c = cls[offset[k] + a];
      out.cocone[k].push_back(c);
      if (out.elements[c].empty())
        out.elements[c] = el.cat.object_name(static_cast<ObjId>(k)) + ":" + f.values[el.elements[k].first][a];
    }
  return out;
}

SetLimit weighted_lim_set(const SetValuedFunctor& w, const SetValuedFunctor& f, std::size_t budget) {
  if (w.variance != Variance::Covariant || f.variance != Variance::Covariant)
    throw InvariantViolation("weighted limit needs covariant weight and functor");
  validate_set_functor(f);
  SetLimit out;
  out.shape = elements(w);
  const auto& el = out.shape;
  const int k = el.cat.num_objects();
  std::vector<std::vector<MorId>> check_at(k);
  for (MorId m = 0; m < el.cat.num_morphisms(); ++m)
    check_at[std::max(el.cat.src(m), el.cat.tgt(m))].push_back(m);
  std::vector<int> cur(k, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      if (out.families.size() >= budget) throw BudgetExceeded("weighted limit enumeration", budget);
      out.families.push_back(cur);
      return;
    }
    for (int a = 0; a < f.size(el.elements[i].first); ++a) {
      cur[i] = a;
      bool ok = true;
      for (MorId m : check_at[i])
        if (f.map[el.labels[m].first][cur[el.cat.src(m)]] != cur[el.cat.tgt(m)]) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
    cur[i] = -1;
  };
  rec(0);
  return out;
}

CatDiagram pullback_diagram(const ElementsCat& el, const CatDiagram& f) {
  CatDiagram out{el.cat, {}, {}};
  for (const auto& e : el.elements) out.objects.push_back(f.objects[e.first]);
  for (const auto& l : el.labels) out.arrows.push_back(f.arrows[l.first]);
  return out;
}

ColimResult weighted_colim_cat(const SetValuedFunctor& w, const CatDiagram& f, std::size_t max_len,
                               std::size_t budget) {
  if (w.variance != Variance::Contravariant) throw InvariantViolation("weight must be contravariant");
  return colim_cat(pullback_diagram(elements(w), f), max_len, budget);
}

CatDiagram simplex_inclusion_diagram(int dim) {
  CatDiagram out{simplex_category(dim), {}, {}};
  for (int n = 0; n <= dim; ++n) out.objects.push_back(ordinal(n));
  for (MorId u = 0; u < out.index.num_morphisms(); ++u) {
    Monotone theta = simplex_morphism_map(out.index, u);
    const FinCat& src = out.objects[out.index.src(u)];
    const FinCat& tgt = out.objects[out.index.tgt(u)];
    Functor f{theta, {}};
    for (MorId m = 0; m < src.num_morphisms(); ++m)
      f.mor.push_back(tgt.hom(theta[src.src(m)], theta[src.tgt(m)]).front());
    out.arrows.push_back(std::move(f));
  }
  return out;
}

}  // namespace hocat
