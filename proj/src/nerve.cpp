#include "hocat/nerve.hpp"

#include <set>

namespace hocat {

namespace {

/// Vertex k of a chain (k = 0 is the start).
ObjId vertex(const FinCat& c, const Chain& ch, int k) {
  return k == 0 ? ch.start : c.tgt(ch.arrows[k - 1]);
}

std::string chain_name(const FinCat& c, const Chain& ch) {
  if (ch.arrows.empty()) return c.object_name(ch.start);
  if (ch.arrows.size() == 1) return c.morphism(ch.arrows[0]).name;
  std::string s = "(";
  for (std::size_t i = 0; i < ch.arrows.size(); ++i)
    s += (i ? "," : "") + c.morphism(ch.arrows[i]).name;
  return s + ")";
}

Chain face_of(const FinCat& c, const Chain& ch, int i) {
  const int n = static_cast<int>(ch.arrows.size());
  Chain out;
  if (i == 0) {
    out.start = c.tgt(ch.arrows[0]);
    out.arrows.assign(ch.arrows.begin() + 1, ch.arrows.end());
  } else if (i == n) {
    out.start = ch.start;
    out.arrows.assign(ch.arrows.begin(), ch.arrows.end() - 1);
  } else {
    out.start = ch.start;
    for (int k = 0; k < n; ++k) {
      if (k == i - 1) {
        out.arrows.push_back(c.compose(ch.arrows[i], ch.arrows[i - 1]));
        ++k;
      } else {
        out.arrows.push_back(ch.arrows[k]);
      }
    }
  }
  return out;
}

Chain degen_of(const FinCat& c, const Chain& ch, int i) {
  Chain out{ch.start, ch.arrows};
  out.arrows.insert(out.arrows.begin() + i, c.identity(vertex(c, ch, i)));
  return out;
}

}  // namespace

int NerveResult::index_of(const Chain& c) const {
  const std::size_t n = c.arrows.size();
  if (n >= lookup.size()) throw InvariantViolation("chain longer than the nerve truncation");
  auto it = lookup[n].find(c);
  if (it == lookup[n].end()) throw InvariantViolation("chain is not composable");
  return it->second;
}

NerveResult nerve(const FinCat& c, int dim) {
  if (dim < 0) throw InvariantViolation("negative truncation dimension");
  NerveResult out;
  out.chains.resize(dim + 1);
  out.lookup.resize(dim + 1);
  for (ObjId x = 0; x < c.num_objects(); ++x) out.chains[0].push_back({x, {}});
  if (dim >= 1)
    for (MorId m = 0; m < c.num_morphisms(); ++m) out.chains[1].push_back({c.src(m), {m}});
  for (int n = 2; n <= dim; ++n)
    for (const auto& ch : out.chains[n - 1])
      for (MorId m = 0; m < c.num_morphisms(); ++m)
        if (c.src(m) == c.tgt(ch.arrows.back())) {
          Chain next = ch;
          next.arrows.push_back(m);
          out.chains[n].push_back(std::move(next));
        }
  SSetData data;
  data.dim = dim;
  data.names.resize(dim + 1);
  for (int n = 0; n <= dim; ++n)
    for (std::size_t k = 0; k < out.chains[n].size(); ++k) {
      out.lookup[n][out.chains[n][k]] = static_cast<int>(k);
      data.names[n].push_back(chain_name(c, out.chains[n][k]));
    }
  data.face.resize(dim + 1);
  data.degen.resize(dim + 1);
  for (int n = 1; n <= dim; ++n) {
    data.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (const auto& ch : out.chains[n]) data.face[n][i].push_back(out.lookup[n - 1].at(face_of(c, ch, i)));
  }
  for (int n = 0; n < dim; ++n) {
    data.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (const auto& ch : out.chains[n]) data.degen[n][i].push_back(out.lookup[n + 1].at(degen_of(c, ch, i)));
  }
  out.sset = make_sset(std::move(data));
  return out;
}

SMap nerve_map(const NerveResult& nc, const NerveResult& nd, const Functor& f) {
  const int dim = nc.sset.dim();
  if (nd.sset.dim() != dim) throw InvariantViolation("nerves truncated at different dimensions");
  SMap out;
  out.level.resize(dim + 1);
  for (int n = 0; n <= dim; ++n)
    for (const auto& ch : nc.chains[n]) {
      Chain image{f.obj[ch.start], {}};
      for (MorId m : ch.arrows) image.arrows.push_back(f.mor[m]);
      out.level[n].push_back(nd.index_of(image));
    }
  return out;
}

Categorified categorify(const TruncSSet& x) {
  if (x.dim() < 3)
    throw InvariantViolation("categorify needs truncation dimension >= 3, got " + std::to_string(x.dim()));
  for (int n = 2; n <= x.dim(); ++n) {
    IEPResult r = check_iep(x, n);
    if (!r.holds)
      throw NotIEP("spine extension property fails at level " + std::to_string(n) + ": " + r.witness());
  }
  std::map<std::pair<int, int>, int> filler;  // (f, g) -> 2-simplex
  for (int s = 0; s < x.size(2); ++s) {
    auto sp = spine_edges(x, 2, s);
    filler[{sp[0], sp[1]}] = s;
  }
  FinCatData d;
  d.objects = x.names(0);
  for (int e = 0; e < x.size(1); ++e) d.morphisms.push_back({x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)});
  for (int v = 0; v < x.size(0); ++v) d.identity.push_back(x.degen(0, 0, v));
  for (const auto& [pair, s] : filler) d.composition.push_back({pair.second, pair.first, x.face(2, 1, s)});
  Categorified out;
  out.category = make_fincat(std::move(d));
  NerveResult n = nerve(out.category, x.dim());
  out.witness.level.resize(x.dim() + 1);
  for (int k = 0; k <= x.dim(); ++k)
    for (int s = 0; s < x.size(k); ++s) {
      Chain ch{k == 0 ? s : x.act({0}, k, s), k == 0 ? std::vector<MorId>{} : spine_edges(x, k, s)};
      out.witness.level[k].push_back(n.index_of(ch));
    }
  validate_smap(x, n.sset, out.witness);
  if (!is_levelwise_bijection(x, n.sset, out.witness))
    throw InvariantViolation("categorify witness is not a levelwise bijection");
  return out;
}

FullFaithfulReport fully_faithful_check(const FinCat& c, const FinCat& d, int dim, std::size_t budget) {
  FullFaithfulReport r;
  auto functors = enumerate_functors(c, d, budget);
  NerveResult nc = nerve(c, dim), nd = nerve(d, dim);
  auto maps = hom_sset(nc.sset, nd.sset, budget);
  r.functors = functors.size();
  r.simplicial_maps = maps.size();
  std::set<SMap> induced;
  for (const auto& f : functors) induced.insert(nerve_map(nc, nd, f));
  r.holds = induced.size() == functors.size() && induced == std::set<SMap>(maps.begin(), maps.end());
  return r;
}

}  // namespace hocat
