#include "hocat/localize.hpp"

#include <algorithm>
#include <set>

namespace hocat {

bool MarkedCat::is_marked(MorId m) const { return std::binary_search(marking.begin(), marking.end(), m); }

MarkedCat make_marked(FinCat c, std::vector<MorId> marking) {
  std::sort(marking.begin(), marking.end());
  marking.erase(std::unique(marking.begin(), marking.end()), marking.end());
  for (MorId m : marking)
    if (m < 0 || m >= c.num_morphisms()) throw InvariantViolation("marking refers to an unknown morphism");
  return MarkedCat{std::move(c), std::move(marking)};
}

std::optional<MorId> inverse_of(const FinCat& c, MorId m) {
  for (MorId g : c.hom(c.tgt(m), c.src(m)))
    if (c.compose(g, m) == c.identity(c.src(m)) && c.compose(m, g) == c.identity(c.tgt(m))) return g;
  return std::nullopt;
}

MarkedCat mark_isos(const FinCat& c) {
  std::vector<MorId> isos;
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (inverse_of(c, m)) isos.push_back(m);
  return make_marked(c, std::move(isos));
}

bool is_groupoid(const FinCat& c) {
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (!inverse_of(c, m)) return false;
  return true;
}

Localization localize_rel(const MarkedCat& m, std::size_t max_len, std::size_t budget) {
  const FinCat& c = m.cat;
  Localization loc;
  Quiver& q = loc.presentation.generators;
  q.vertices = c.objects();
  for (const auto& mor : c.morphisms()) q.edges.push_back({mor.name, mor.src, mor.tgt});
  for (MorId w : m.marking) {
    loc.inverse.push_back(q.num_edges());
    q.edges.push_back({c.morphism(w).name + "^-1", c.tgt(w), c.src(w)});
  }
  auto& rel = loc.presentation.relations;
  for (ObjId x = 0; x < c.num_objects(); ++x) rel.push_back({Path{x, {c.identity(x)}}, Path{x, {}}});
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f) || c.is_identity(f) || c.is_identity(g)) continue;
      rel.push_back({Path{c.src(f), {f, g}}, Path{c.src(f), {c.compose(g, f)}}});
    }
  for (std::size_t k = 0; k < m.marking.size(); ++k) {
    const MorId w = m.marking[k];
    rel.push_back({Path{c.src(w), {w, loc.inverse[k]}}, Path{c.src(w), {}}});
    rel.push_back({Path{c.tgt(w), {loc.inverse[k], w}}, Path{c.tgt(w), {}}});
  }
  validate_prescat(loc.presentation);
  loc.table = materialize(loc.presentation, max_len, budget);
  if (loc.table.finite()) {
    Functor g{{}, {}};
    for (ObjId x = 0; x < c.num_objects(); ++x) g.obj.push_back(x);
    for (MorId f = 0; f < c.num_morphisms(); ++f) g.mor.push_back(loc.table.generator_morphism[f]);
    validate_functor(c, *loc.table.category, g);
    loc.gamma = std::move(g);
  }
  return loc;
}

Localization localize_total(const FinCat& c, std::size_t max_len, std::size_t budget) {
  std::vector<MorId> all(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) all[f] = f;
  return localize_rel(make_marked(c, std::move(all)), max_len, budget);
}

Zigzag zigzag_of(const MarkedCat& m, const Localization& loc, const Path& word) {
  const FinCat& c = m.cat;
  validate_path(loc.presentation.generators, word);
  const int nmor = c.num_morphisms();
  // Letters: forward morphism or backward marked morphism.
  std::vector<ZigzagLeg> stack;
  for (EdgeId e : word.edges) {
    ZigzagLeg leg;
    if (e < nmor) {
      if (c.is_identity(e)) continue;
      leg = {false, e};
    } else {
      leg = {true, m.marking[e - nmor]};
    }
    if (!stack.empty() && stack.back().morphism == leg.morphism && stack.back().backward != leg.backward &&
        m.is_marked(leg.morphism)) {
      stack.pop_back();
      continue;
    }
    stack.push_back(leg);
  }
  Zigzag z{word.source, path_target(loc.presentation.generators, word), {}};
  ObjId at = word.source;
  for (const auto& leg : stack) {
    if (!leg.backward) {
      if (!z.legs.empty() && !z.legs.back().backward)
        z.legs.back().morphism = c.compose(leg.morphism, z.legs.back().morphism);
      else
        z.legs.push_back(leg);
      at = c.tgt(leg.morphism);
    } else {
      if (!z.legs.empty() && z.legs.back().backward) z.legs.push_back({false, c.identity(at)});
      z.legs.push_back(leg);
      at = c.src(leg.morphism);
    }
  }
  // Forward runs may compose to identities; drop those between forward neighbours only.
  std::vector<ZigzagLeg> cleaned;
  for (std::size_t i = 0; i < z.legs.size(); ++i) {
    const auto& leg = z.legs[i];
    bool between_backward = i > 0 && i + 1 < z.legs.size() && z.legs[i - 1].backward && z.legs[i + 1].backward;
    if (!leg.backward && c.is_identity(leg.morphism) && !between_backward) continue;
    cleaned.push_back(leg);
  }
  z.legs = std::move(cleaned);
  return z;
}

Path word_of(const MarkedCat& m, const Localization& loc, const Zigzag& z) {
  Path p{z.source, {}};
  for (const auto& leg : z.legs) {
    if (!leg.backward) {
      p.edges.push_back(Localization::generator(leg.morphism));
    } else {
      auto it = std::lower_bound(m.marking.begin(), m.marking.end(), leg.morphism);
      if (it == m.marking.end() || *it != leg.morphism) throw InvariantViolation("backward leg is not marked");
      p.edges.push_back(loc.inverse[it - m.marking.begin()]);
    }
  }
  validate_path(loc.presentation.generators, p);
  return p;
}

bool check_marking_functor(const Functor& f, const MarkedCat& m, const MarkedCat& n) {
  for (MorId w : m.marking)
    if (!n.is_marked(f.mor[w])) return false;
  return true;
}

ColimResult localize_pushout(const MarkedCat& m, std::size_t max_len, std::size_t budget) {
  const FinCat& c = m.cat;
  const FinCat arrow = ordinal(1), iso = walking_iso();
  std::vector<FinCat> arrows(m.marking.size(), arrow), isos(m.marking.size(), iso);
  FinCat source = coproduct_cat(arrows), target = coproduct_cat(isos);
  Functor to_c{std::vector<ObjId>(source.num_objects()), std::vector<MorId>(source.num_morphisms())};
  Functor to_iso{std::vector<ObjId>(source.num_objects()), std::vector<MorId>(source.num_morphisms())};
  for (std::size_t k = 0; k < m.marking.size(); ++k) {
    const MorId w = m.marking[k];
    Functor in_s = coproduct_injection(arrows, k), in_t = coproduct_injection(isos, k);
    const ObjId ends[2] = {c.src(w), c.tgt(w)};
    for (ObjId x = 0; x < 2; ++x) {
      to_c.obj[in_s.obj[x]] = ends[x];
      to_iso.obj[in_s.obj[x]] = in_t.obj[x];
    }
    for (MorId a = 0; a < arrow.num_morphisms(); ++a) {
      const bool ident = arrow.is_identity(a);
      to_c.mor[in_s.mor[a]] = ident ? c.identity(ends[arrow.src(a)]) : w;
      to_iso.mor[in_s.mor[a]] = in_t.mor[iso.hom(arrow.src(a), arrow.tgt(a)).front()];
    }
  }
  FinCatData span;
  span.objects = {"arrows", "base", "isos"};
  span.morphisms = {{"id_arrows", 0, 0}, {"id_base", 1, 1}, {"id_isos", 2, 2}, {"mark", 0, 1}, {"include", 0, 2}};
  span.identity = {0, 1, 2};
  CatDiagram d{make_fincat(std::move(span)), {source, c, target}, {}};
  d.arrows = {identity_functor(source), identity_functor(c), identity_functor(target), to_c, to_iso};
  return colim_cat(d, max_len, budget);
}

UniversalReport localization_universal_check(const MarkedCat& m, const Localization& loc, const FinCat& target,
                                             std::size_t budget) {
  UniversalReport r;
  const FinCat& l = loc.table.require_finite();
  const Functor& gamma = *loc.gamma;
  auto out = enumerate_functors(l, target, budget);
  r.out_of_localization = out.size();
  std::set<Functor> restricted;
  for (const auto& g : out) restricted.insert(compose(g, gamma));
  std::set<Functor> inverting;
  for (const auto& f : enumerate_functors(m.cat, target, budget)) {
    bool ok = true;
    for (MorId w : m.marking)
      if (!inverse_of(target, f.mor[w])) ok = false;
    if (ok) inverting.insert(f);
  }
  r.inverting_functors = inverting.size();
  r.holds = restricted.size() == out.size() && restricted == inverting;
  return r;
}

}  // namespace hocat
