#include "hocat/sset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hocat/union_find.hpp"

namespace hocat {

namespace {

std::string level_str(int n) { return "level " + std::to_string(n); }

Monotone coface(int m, int i) {  // [m-1] -> [m] skipping i
  Monotone d(m);
  for (int p = 0; p < m; ++p) d[p] = p < i ? p : p + 1;
  return d;
}

Monotone codegeneracy(int m, int i) {  // [m+1] -> [m] repeating i
  Monotone s(m + 2);
  for (int p = 0; p <= m + 1; ++p) s[p] = p <= i ? p : p - 1;
  return s;
}

/// (theta . alpha)(p) = theta(alpha(p))
Monotone after(const Monotone& theta, const Monotone& alpha) {
  Monotone out(alpha.size());
  for (std::size_t p = 0; p < alpha.size(); ++p) out[p] = theta[alpha[p]];
  return out;
}

std::string vertex_list_name(const Monotone& a, int n) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (n >= 10 && i > 0) s += ",";
    s += std::to_string(a[i]);
  }
  return s;
}

/// Degeneracy word (decreasing form) of a surjection, e.g. "s1s0".
std::string degeneracy_prefix(const Monotone& sigma) {
  std::vector<int> pos;
  for (std::size_t p = 0; p + 1 < sigma.size(); ++p)
    if (sigma[p] == sigma[p + 1]) pos.push_back(static_cast<int>(p));
  std::string s;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) s += "s" + std::to_string(*it);
  return s;
}

std::vector<int> degeneracy_word(const Monotone& sigma) {
  std::vector<int> pos;
  for (std::size_t p = 0; p + 1 < sigma.size(); ++p)
    if (sigma[p] == sigma[p + 1]) pos.push_back(static_cast<int>(p));
  std::reverse(pos.begin(), pos.end());
  return pos;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<int> TruncSSet::find(int n, const std::string& name) const {
  if (n < 0 || n > dim_) return std::nullopt;
  auto it = std::find(names_[n].begin(), names_[n].end(), name);
  if (it == names_[n].end()) return std::nullopt;
  return static_cast<int>(it - names_[n].begin());
}

int TruncSSet::act(const Monotone& theta, int n, int x) const {
  std::vector<char> in_image(n + 1, 0);
  for (int v : theta) in_image[v] = 1;
  int level = n;
  for (int v = n; v >= 0; --v)
    if (!in_image[v]) x = face(level--, v, x);
  for (std::size_t p = 0; p + 1 < theta.size(); ++p)
    if (theta[p] == theta[p + 1]) x = degen(level++, static_cast<int>(p), x);
  return x;
}

bool TruncSSet::is_degenerate(int n, int x) const {
  if (n == 0) return false;
  for (int j = 0; j < n; ++j)
    for (int y = 0; y < size(n - 1); ++y)
      if (degen(n - 1, j, y) == x) return true;
  return false;
}

TruncSSet make_sset(SSetData data) {
  const int D = data.dim;
  if (D < 0) throw InvariantViolation("negative truncation dimension");
  if (static_cast<int>(data.names.size()) != D + 1)
    throw InvariantViolation("expected " + std::to_string(D + 1) + " levels");
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    std::set<std::string> seen;
    for (const auto& s : data.names[n])
      if (!seen.insert(s).second)
        throw InvariantViolation("duplicate simplex id '" + s + "' at " + level_str(n));
  }
  auto sz = [&](int n) { return static_cast<int>(data.names[n].size()); };
  for (int n = 1; n <= D; ++n) {
    if (static_cast<int>(data.face[n].size()) != n + 1)
      throw InvariantViolation("missing face tables at " + level_str(n));
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(data.face[n][i].size()) != sz(n))
        throw InvariantViolation("face table d" + std::to_string(i) + " at " + level_str(n) +
                                 " has the wrong size");
      for (int v : data.face[n][i])
        if (v < 0 || v >= sz(n - 1))
          throw InvariantViolation("face d" + std::to_string(i) + " at " + level_str(n) +
                                   " points outside " + level_str(n - 1));
    }
  }
  for (int n = 0; n < D; ++n) {
    if (static_cast<int>(data.degen[n].size()) != n + 1)
      throw InvariantViolation("missing degeneracy tables at " + level_str(n));
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(data.degen[n][i].size()) != sz(n))
        throw InvariantViolation("degeneracy table s" + std::to_string(i) + " at " + level_str(n) +
                                 " has the wrong size");
      for (int v : data.degen[n][i])
        if (v < 0 || v >= sz(n + 1))
          throw InvariantViolation("degeneracy s" + std::to_string(i) + " at " + level_str(n) +
                                   " points outside " + level_str(n + 1));
    }
  }
  const auto& d = data.face;
  const auto& s = data.degen;
  auto fail = [&](const std::string& law, int n, int x) {
    throw InvariantViolation("simplicial identity " + law + " fails on '" + data.names[n][x] +
                             "' at " + level_str(n));
  };
  // d_i d_j = d_{j-1} d_i  (i < j)
  for (int n = 2; n <= D; ++n)
    for (int x = 0; x < sz(n); ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (d[n - 1][i][d[n][j][x]] != d[n - 1][j - 1][d[n][i][x]])
            fail("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" +
                     std::to_string(j - 1) + "d" + std::to_string(i),
                 n, x);
  // s_i s_j = s_{j+1} s_i  (i <= j)
  for (int n = 0; n + 2 <= D; ++n)
    for (int x = 0; x < sz(n); ++x)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (s[n + 1][i][s[n][j][x]] != s[n + 1][j + 1][s[n][i][x]])
            fail("s" + std::to_string(i) + "s" + std::to_string(j) + " = s" +
                     std::to_string(j + 1) + "s" + std::to_string(i),
                 n, x);
  // d_i s_j mixed identities on X_n, s_j : X_n -> X_{n+1}
  for (int n = 0; n < D; ++n)
    for (int x = 0; x < sz(n); ++x)
      for (int j = 0; j <= n; ++j) {
        int y = s[n][j][x];
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = d[n + 1][i][y];
          if (i == j || i == j + 1) {
            if (lhs != x) fail("d" + std::to_string(i) + "s" + std::to_string(j) + " = id", n, x);
          } else if (i < j) {
            if (lhs != s[n - 1][j - 1][d[n][i][x]])
              fail("d" + std::to_string(i) + "s" + std::to_string(j) + " = s" +
                       std::to_string(j - 1) + "d" + std::to_string(i),
                   n, x);
          } else {
            if (lhs != s[n - 1][j][d[n][i - 1][x]])
              fail("d" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j) +
                       "d" + std::to_string(i - 1),
                   n, x);
          }
        }
      }

  TruncSSet out;
  out.dim_ = D;
  out.names_ = data.names;
  out.face_ = data.face;
  out.degen_ = data.degen;
  out.data_ = std::move(data);
  return out;
}

// ---------------------------------------------------------------------------

void validate_smap(const TruncSSet& x, const TruncSSet& y, const SMap& f) {
  if (x.dim() != y.dim()) throw InvariantViolation("simplicial map between different truncations");
  if (static_cast<int>(f.level.size()) != x.dim() + 1)
    throw InvariantViolation("simplicial map has the wrong number of levels");
  for (int n = 0; n <= x.dim(); ++n) {
    if (static_cast<int>(f.level[n].size()) != x.size(n))
      throw InvariantViolation("simplicial map level " + std::to_string(n) + " has the wrong size");
    for (int v : f.level[n])
      if (v < 0 || v >= y.size(n)) throw InvariantViolation("simplicial map image out of range");
  }
  for (int n = 1; n <= x.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a < x.size(n); ++a)
        if (y.face(n, i, f.level[n][a]) != f.level[n - 1][x.face(n, i, a)])
          throw InvariantViolation("map does not commute with d" + std::to_string(i) + " on '" +
                                   x.name(n, a) + "'");
  for (int n = 0; n < x.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a < x.size(n); ++a)
        if (y.degen(n, i, f.level[n][a]) != f.level[n + 1][x.degen(n, i, a)])
          throw InvariantViolation("map does not commute with s" + std::to_string(i) + " on '" +
                                   x.name(n, a) + "'");
}

bool is_smap(const TruncSSet& x, const TruncSSet& y, const SMap& f) {
  try {
    validate_smap(x, y, f);
    return true;
  } catch (const InvariantViolation&) {
    return false;
  }
}

SMap identity_smap(const TruncSSet& x) {
  SMap f;
  f.level.resize(x.dim() + 1);
  for (int n = 0; n <= x.dim(); ++n)
    for (int a = 0; a < x.size(n); ++a) f.level[n].push_back(a);
  return f;
}

SMap compose(const SMap& g, const SMap& f) {
  SMap h;
  h.level.resize(f.level.size());
  for (std::size_t n = 0; n < f.level.size(); ++n)
    for (int a : f.level[n]) h.level[n].push_back(g.level[n][a]);
  return h;
}

bool is_levelwise_bijection(const TruncSSet& x, const TruncSSet& y, const SMap& f) {
  for (int n = 0; n <= x.dim(); ++n) {
    if (x.size(n) != y.size(n)) return false;
    std::vector<char> hit(y.size(n), 0);
    for (int v : f.level[n]) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

SubSSet subobject(const TruncSSet& x, const std::vector<std::vector<char>>& keep) {
  const int D = x.dim();
  std::vector<std::vector<int>> index(D + 1);
  SubSSet out;
  out.inclusion.level.resize(D + 1);
  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    index[n].assign(x.size(n), -1);
    for (int a = 0; a < x.size(n); ++a)
      if (keep[n][a]) {
        index[n][a] = static_cast<int>(data.names[n].size());
        data.names[n].push_back(x.name(n, a));
        out.inclusion.level[n].push_back(a);
      }
  }
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int n = 1; n <= D; ++n) {
    data.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int a : out.inclusion.level[n]) {
        int v = index[n - 1][x.face(n, i, a)];
        if (v < 0) throw InvariantViolation("subobject is not closed under faces at '" + x.name(n, a) + "'");
        data.face[n][i].push_back(v);
      }
  }
  for (int n = 0; n < D; ++n) {
    data.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int a : out.inclusion.level[n]) {
        int v = index[n + 1][x.degen(n, i, a)];
        if (v < 0)
          throw InvariantViolation("subobject is not closed under degeneracies at '" + x.name(n, a) + "'");
        data.degen[n][i].push_back(v);
      }
  }
  out.sset = make_sset(std::move(data));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Monotone> monotone_maps(int m, int n) {
  std::vector<Monotone> out;
  Monotone cur(m + 1, 0);
  std::function<void(int, int)> rec = [&](int p, int lo) {
    if (p == m + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur[p] = v;
      rec(p + 1, v);
    }
  };
  if (m >= 0 && n >= 0) rec(0, 0);
  return out;
}

TruncSSet standard_simplex(int n, int d) {
  SSetData data;
  data.dim = d;
  std::vector<std::map<Monotone, int>> index(d + 1);
  std::vector<std::vector<Monotone>> level(d + 1);
  data.names.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    level[k] = monotone_maps(k, n);
    for (std::size_t a = 0; a < level[k].size(); ++a) {
      index[k][level[k][a]] = static_cast<int>(a);
      data.names[k].push_back(vertex_list_name(level[k][a], n));
    }
  }
  data.face.resize(d + 1);
  data.degen.resize(d + 1);
  for (int k = 1; k <= d; ++k) {
    data.face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& a : level[k]) data.face[k][i].push_back(index[k - 1].at(after(a, coface(k, i))));
  }
  for (int k = 0; k < d; ++k) {
    data.degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i)
      for (const auto& a : level[k])
        data.degen[k][i].push_back(index[k + 1].at(after(a, codegeneracy(k, i))));
  }
  return make_sset(std::move(data));
}

namespace {

std::vector<std::vector<char>> simplex_mask(int n, int d,
                                            const std::function<bool(const std::set<int>&)>& keep) {
  std::vector<std::vector<char>> mask(d + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& a : monotone_maps(k, n)) mask[k].push_back(keep(std::set<int>(a.begin(), a.end())));
  return mask;
}

}  // namespace

SubSSet boundary(int n, int d) {
  if (n < 1) throw InvariantViolation("boundary needs n >= 1");
  return subobject(standard_simplex(n, d),
                   simplex_mask(n, d, [&](const std::set<int>& im) {
                     return static_cast<int>(im.size()) < n + 1;
                   }));
}

SubSSet spine(int n, int d) {
  if (n < 1) throw InvariantViolation("spine needs n >= 1");
  return subobject(standard_simplex(n, d), simplex_mask(n, d, [&](const std::set<int>& im) {
                     return im.size() == 1 || (im.size() == 2 && *im.rbegin() == *im.begin() + 1);
                   }));
}

TruncSSet constant_sset(const std::vector<std::string>& points, int d) {
  SSetData data;
  data.dim = d;
  const int k = static_cast<int>(points.size());
  std::vector<int> ident(k);
  for (int a = 0; a < k; ++a) ident[a] = a;
  data.names.resize(d + 1);
  data.face.resize(d + 1);
  data.degen.resize(d + 1);
  for (int n = 0; n <= d; ++n) {
    for (const auto& p : points)
      data.names[n].push_back(n == 0 ? p : degeneracy_prefix(Monotone(n + 1, 0)) + "(" + p + ")");
    if (n >= 1) data.face[n].assign(n + 1, ident);
    if (n < d) data.degen[n].assign(n + 1, ident);
  }
  return make_sset(std::move(data));
}

// ---------------------------------------------------------------------------
// Enumeration of simplicial maps

namespace {

class SMapSearch {
 public:
  SMapSearch(const TruncSSet& x, const TruncSSet& y, std::size_t budget)
      : x_(x), y_(y), budget_(budget) {
    const int D = x.dim();
    degenerate_from_.resize(D + 1);
    by_faces_.resize(D + 1);
    for (int n = 0; n <= D; ++n) {
      degenerate_from_[n].resize(x.size(n));
      if (n > 0)
        for (int j = 0; j < n; ++j)
          for (int a = 0; a < x.size(n - 1); ++a)
            degenerate_from_[n][x.degen(n - 1, j, a)].push_back({j, a});
      for (int b = 0; b < y.size(n); ++b) by_faces_[n][faces_of(y, n, b)].push_back(b);
    }
    current_.level.resize(D + 1);
    for (int n = 0; n <= D; ++n) current_.level[n].assign(x.size(n), -1);
  }

  template <class Visit>
  void run(Visit&& visit) {
    visit_ = [&](const SMap& f) { return visit(f); };
    if (x_.dim() != y_.dim()) throw InvariantViolation("hom_sset needs equal truncations");
    assign(0, 0);
  }

 private:
  static std::vector<int> faces_of(const TruncSSet& s, int n, int a) {
    std::vector<int> out;
    for (int i = 0; n > 0 && i <= n; ++i) out.push_back(s.face(n, i, a));
    return out;
  }

  bool consistent(int n, int a, int b) const {
    for (int i = 0; n > 0 && i <= n; ++i)
      if (y_.face(n, i, b) != current_.level[n - 1][x_.face(n, i, a)]) return false;
    for (auto [j, src] : degenerate_from_[n][a])
      if (y_.degen(n - 1, j, current_.level[n - 1][src]) != b) return false;
    return true;
  }

  bool assign(int n, int a) {
    if (a == x_.size(n)) {
      if (n == x_.dim()) {
        if (++found_ > budget_) throw BudgetExceeded("simplicial map enumeration", budget_);
        return visit_(current_);
      }
      return assign(n + 1, 0);
    }
    auto try_value = [&](int b) {
      if (!consistent(n, a, b)) return true;
      current_.level[n][a] = b;
      bool go_on = assign(n, a + 1);
      current_.level[n][a] = -1;
      return go_on;
    };
    if (!degenerate_from_[n][a].empty()) {
      auto [j, src] = degenerate_from_[n][a].front();
      return try_value(y_.degen(n - 1, j, current_.level[n - 1][src]));
    }
    std::vector<int> want;
    for (int i = 0; n > 0 && i <= n; ++i) want.push_back(current_.level[n - 1][x_.face(n, i, a)]);
    auto it = by_faces_[n].find(want);
    if (it == by_faces_[n].end()) return true;
    for (int b : it->second)
      if (!try_value(b)) return false;
    return true;
  }

  const TruncSSet& x_;
  const TruncSSet& y_;
  std::size_t budget_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> degenerate_from_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
  SMap current_;
  std::size_t found_ = 0;
  std::function<bool(const SMap&)> visit_;
};

}  // namespace

std::vector<SMap> hom_sset(const TruncSSet& x, const TruncSSet& y, std::size_t budget) {
  std::vector<SMap> out;
  SMapSearch search(x, y, budget);
  search.run([&](const SMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> spine_edges(const TruncSSet& x, int n, int simplex) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) out.push_back(x.act({k, k + 1}, n, simplex));
  return out;
}

std::string IEPResult::witness() const {
  if (holds) return "";
  std::string s = "chain (";
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? ", " : "") + chain[i];
  s += ") has " + std::to_string(fillers) + (fillers == 1 ? " filler" : " fillers");
  return s;
}

IEPResult check_iep(const TruncSSet& x, int n) {
  if (n < 1 || n > x.dim())
    throw InvariantViolation("check_iep needs 1 <= n <= dim, got n = " + std::to_string(n));
  std::map<std::vector<int>, int> fillers;
  for (int a = 0; a < x.size(n); ++a) ++fillers[spine_edges(x, n, a)];

  std::vector<std::vector<int>> starting_at(x.size(0));
  for (int e = 0; e < x.size(1); ++e) starting_at[x.face(1, 1, e)].push_back(e);

  IEPResult result;
  std::vector<int> chain;
  std::function<bool()> walk = [&]() -> bool {
    if (static_cast<int>(chain.size()) == n) {
      auto it = fillers.find(chain);
      int count = it == fillers.end() ? 0 : it->second;
      if (count != 1) {
        result.holds = false;
        result.fillers = count;
        for (int e : chain) result.chain.push_back(x.name(1, e));
        return false;
      }
      return true;
    }
    std::vector<int> next;
    if (chain.empty()) {
      for (int e = 0; e < x.size(1); ++e) next.push_back(e);
    } else {
      next = starting_at[x.face(1, 0, chain.back())];
    }
    for (int e : next) {
      chain.push_back(e);
      bool ok = walk();
      chain.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  walk();
  return result;
}

// ---------------------------------------------------------------------------

TruncSSet truncate(const TruncSSet& x, int n) {
  if (n < 0 || n > x.dim()) throw InvariantViolation("truncation level out of range");
  SSetData data = x.data();
  data.dim = n;
  data.names.resize(n + 1);
  data.face.resize(n + 1);
  data.degen.resize(n + 1);
  data.degen[n].clear();
  return make_sset(std::move(data));
}

Skeleton sk(const TruncSSet& x, int n) {
  if (n < 0) throw InvariantViolation("skeleton level must be non-negative");
  std::vector<std::vector<char>> keep(x.dim() + 1);
  for (int m = 0; m <= x.dim(); ++m) {
    keep[m].assign(x.size(m), m <= n ? 1 : 0);
    if (m > n)
      for (int a = 0; a < x.size(m - 1); ++a)
        if (keep[m - 1][a])
          for (int j = 0; j < m; ++j) keep[m][x.degen(m - 1, j, a)] = 1;
  }
  SubSSet sub = subobject(x, keep);
  return {std::move(sub.sset), std::move(sub.inclusion)};
}

Coskeleton cosk(const TruncSSet& x, int n, std::size_t budget) {
  const int D = x.dim();
  if (n < 0 || n > D) throw InvariantViolation("coskeleton level out of range");
  const TruncSSet xn = truncate(x, n);

  // For m > n: simplices are maps truncate(Delta^m, n) -> xn.
  std::vector<std::vector<SMap>> families(D + 1);
  std::vector<std::map<std::vector<int>, int>> key_index(D + 1);
  std::vector<std::vector<std::map<Monotone, int>>> simplex_index(D + 1);
  auto key_of = [](const SMap& f) {
    std::vector<int> k;
    for (const auto& lvl : f.level) k.insert(k.end(), lvl.begin(), lvl.end());
    return k;
  };
  for (int m = 0; m <= D; ++m) {
    simplex_index[m].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      auto maps = monotone_maps(k, m);
      for (std::size_t a = 0; a < maps.size(); ++a) simplex_index[m][k][maps[a]] = static_cast<int>(a);
    }
    if (m <= n) continue;
    families[m] = hom_sset(standard_simplex(m, n), xn, budget);
    for (std::size_t z = 0; z < families[m].size(); ++z)
      key_index[m][key_of(families[m][z])] = static_cast<int>(z);
  }

  // Value of simplex z of level m on alpha : [k] -> [m], k <= n.
  auto value = [&](int m, int z, const Monotone& alpha) {
    const int k = static_cast<int>(alpha.size()) - 1;
    if (m <= n) return x.act(alpha, m, z);
    return families[m][z].level[k][simplex_index[m][k].at(alpha)];
  };
  // Element of level m determined by beta(alpha) = value on theta . alpha.
  auto lookup = [&](int m, const std::function<int(const Monotone&)>& on) {
    std::vector<int> key;
    for (int k = 0; k <= n; ++k)
      for (const auto& alpha : monotone_maps(k, m)) key.push_back(on(alpha));
    return key_index[m].at(key);
  };

  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int m = 0; m <= D; ++m) {
    if (m <= n) {
      data.names[m] = x.names(m);
      continue;
    }
    for (const auto& f : families[m]) {
      std::string s = "<";
      bool first = true;
      for (const auto& alpha : monotone_maps(n, m)) {
        if (std::set<int>(alpha.begin(), alpha.end()).size() != alpha.size()) continue;
        s += (first ? "" : ",") + xn.name(n, f.level[n][simplex_index[m][n].at(alpha)]);
        first = false;
      }
      data.names[m].push_back(s + ">");
    }
  }
  for (int m = 1; m <= D; ++m) {
    data.face[m].resize(m + 1);
    for (int i = 0; i <= m; ++i) {
      const Monotone delta = coface(m, i);
      for (int z = 0; z < static_cast<int>(data.names[m].size()); ++z) {
        if (m <= n)
          data.face[m][i].push_back(x.face(m, i, z));
        else if (m - 1 <= n)
          data.face[m][i].push_back(value(m, z, delta));
        else
          data.face[m][i].push_back(
              lookup(m - 1, [&](const Monotone& a) { return value(m, z, after(delta, a)); }));
      }
    }
  }
  for (int m = 0; m < D; ++m) {
    data.degen[m].resize(m + 1);
    for (int i = 0; i <= m; ++i) {
      const Monotone sigma = codegeneracy(m, i);
      for (int z = 0; z < static_cast<int>(data.names[m].size()); ++z) {
        if (m + 1 <= n)
          data.degen[m][i].push_back(x.degen(m, i, z));
        else
          data.degen[m][i].push_back(
              lookup(m + 1, [&](const Monotone& a) { return value(m, z, after(sigma, a)); }));
      }
    }
  }
  Coskeleton out;
  out.sset = make_sset(std::move(data));
  out.unit.level.resize(D + 1);
  for (int m = 0; m <= D; ++m)
    for (int a = 0; a < x.size(m); ++a)
      out.unit.level[m].push_back(
          m <= n ? a : lookup(m, [&](const Monotone& alpha) { return x.act(alpha, m, a); }));
  return out;
}

// ---------------------------------------------------------------------------
// Levelwise (co)limits

void validate_diagram(const SSetDiagram& d) {
  const FinCat& j = d.index;
  if (static_cast<int>(d.objects.size()) != j.num_objects() ||
      static_cast<int>(d.arrows.size()) != j.num_morphisms())
    throw InvariantViolation("diagram does not match its index category");
  const int D = d.objects.empty() ? 0 : d.objects.front().dim();
  for (const auto& o : d.objects)
    if (o.dim() != D) throw InvariantViolation("diagram values have different truncations");
  for (MorId u = 0; u < j.num_morphisms(); ++u)
    validate_smap(d.objects[j.src(u)], d.objects[j.tgt(u)], d.arrows[u]);
  for (ObjId a = 0; a < j.num_objects(); ++a)
    if (d.arrows[j.identity(a)] != identity_smap(d.objects[a]))
      throw InvariantViolation("diagram sends an identity to a non-identity map");
  for (MorId f = 0; f < j.num_morphisms(); ++f)
    for (MorId g = 0; g < j.num_morphisms(); ++g)
      if (j.composable(g, f) && d.arrows[j.compose(g, f)] != compose(d.arrows[g], d.arrows[f]))
        throw InvariantViolation("diagram does not preserve the composite " + j.morphism(g).name +
                                 "." + j.morphism(f).name);
}

SSetCocone colim_sset(const SSetDiagram& d) {
  validate_diagram(d);
  const FinCat& J = d.index;
  const int D = d.objects.empty() ? 0 : d.objects.front().dim();
  SSetCocone out;
  out.legs.resize(J.num_objects());
  for (auto& leg : out.legs) leg.level.resize(D + 1);
  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  std::vector<std::vector<int>> cls(D + 1);
  std::vector<std::vector<int>> offset(D + 1);
  std::vector<std::vector<std::pair<int, int>>> rep(D + 1);  // class -> (object, simplex)
  for (int n = 0; n <= D; ++n) {
    int total = 0;
    for (ObjId a = 0; a < J.num_objects(); ++a) {
      offset[n].push_back(total);
      total += d.objects[a].size(n);
    }
    UnionFind uf(total);
    for (MorId u = 0; u < J.num_morphisms(); ++u)
      for (int x = 0; x < d.objects[J.src(u)].size(n); ++x)
        uf.unite(offset[n][J.src(u)] + x, offset[n][J.tgt(u)] + d.arrows[u].level[n][x]);
    int count = 0;
    cls[n] = uf.classes(&count);
    rep[n].assign(count, {-1, -1});
    for (ObjId a = 0; a < J.num_objects(); ++a)
      for (int x = 0; x < d.objects[a].size(n); ++x) {
        int c = cls[n][offset[n][a] + x];
        out.legs[a].level[n].push_back(c);
        if (rep[n][c].first < 0) rep[n][c] = {a, x};
      }
    for (auto [a, x] : rep[n]) data.names[n].push_back(J.object_name(a) + "/" + d.objects[a].name(n, x));
  }
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int n = 1; n <= D; ++n) {
    data.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (auto [a, x] : rep[n])
        data.face[n][i].push_back(cls[n - 1][offset[n - 1][a] + d.objects[a].face(n, i, x)]);
  }
  for (int n = 0; n < D; ++n) {
    data.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (auto [a, x] : rep[n])
        data.degen[n][i].push_back(cls[n + 1][offset[n + 1][a] + d.objects[a].degen(n, i, x)]);
  }
  out.apex = make_sset(std::move(data));
  return out;
}

SSetCocone lim_sset(const SSetDiagram& d, std::size_t budget) {
  validate_diagram(d);
  const FinCat& J = d.index;
  const int D = d.objects.empty() ? 0 : d.objects.front().dim();
  const int k = J.num_objects();
  // Arrows checked once both endpoints are assigned.
  std::vector<std::vector<MorId>> check_at(k);
  for (MorId u = 0; u < J.num_morphisms(); ++u)
    if (!J.is_identity(u)) check_at[std::max(J.src(u), J.tgt(u))].push_back(u);

  std::vector<std::vector<std::vector<int>>> families(D + 1);
  std::vector<std::map<std::vector<int>, int>> index(D + 1);
  for (int n = 0; n <= D; ++n) {
    std::vector<int> cur(k, -1);
    std::function<void(int)> rec = [&](int a) {
      if (a == k) {
        if (families[n].size() >= budget) throw BudgetExceeded("limit enumeration", budget);
        index[n][cur] = static_cast<int>(families[n].size());
        families[n].push_back(cur);
        return;
      }
      for (int x = 0; x < d.objects[a].size(n); ++x) {
        cur[a] = x;
        bool ok = true;
        for (MorId u : check_at[a])
          if (d.arrows[u].level[n][cur[J.src(u)]] != cur[J.tgt(u)]) {
            ok = false;
            break;
          }
        if (ok) rec(a + 1);
      }
      cur[a] = -1;
    };
    rec(0);
  }
  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int n = 0; n <= D; ++n)
    for (const auto& fam : families[n]) {
      std::string s = "(";
      for (int a = 0; a < k; ++a) s += (a ? "," : "") + d.objects[a].name(n, fam[a]);
      data.names[n].push_back(s + ")");
    }
  auto componentwise = [&](const std::vector<int>& fam, auto&& op) {
    std::vector<int> out(k);
    for (int a = 0; a < k; ++a) out[a] = op(d.objects[a], fam[a]);
    return out;
  };
  for (int n = 1; n <= D; ++n) {
    data.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (const auto& fam : families[n])
        data.face[n][i].push_back(index[n - 1].at(componentwise(
            fam, [&](const TruncSSet& s, int x) { return s.face(n, i, x); })));
  }
  for (int n = 0; n < D; ++n) {
    data.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (const auto& fam : families[n])
        data.degen[n][i].push_back(index[n + 1].at(componentwise(
            fam, [&](const TruncSSet& s, int x) { return s.degen(n, i, x); })));
  }
  SSetCocone out;
  out.apex = make_sset(std::move(data));
  out.legs.resize(k);
  for (int a = 0; a < k; ++a) {
    out.legs[a].level.resize(D + 1);
    for (int n = 0; n <= D; ++n)
      for (const auto& fam : families[n]) out.legs[a].level[n].push_back(fam[a]);
  }
  return out;
}

Components pi0_sset(const TruncSSet& x) {
  if (x.dim() < 1) throw InvariantViolation("pi0 needs dimension >= 1");
  UnionFind uf(x.size(0));
  for (int e = 0; e < x.size(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));
  Components c;
  c.component = uf.classes(&c.count);
  return c;
}

std::vector<int> nondegenerate(const TruncSSet& x, int n) {
  std::vector<char> degenerate(x.size(n), 0);
  if (n > 0)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < x.size(n - 1); ++a) degenerate[x.degen(n - 1, j, a)] = 1;
  std::vector<int> out;
  for (int a = 0; a < x.size(n); ++a)
    if (!degenerate[a]) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Nondegenerate presentations

namespace {

/// Surjection of a degeneracy word s_{j1} ... s_{jr} applied to a simplex of
/// dimension `low`: the map [low + r] -> [low].
Monotone surjection_of(const std::vector<int>& word, int low) {
  Monotone tau(low + word.size() + 1);
  for (std::size_t p = 0; p < tau.size(); ++p) {
    int v = static_cast<int>(p);
    // s_{j1} is outermost, so its codegeneracy is applied first.
    int level = low + static_cast<int>(word.size());
    for (int j : word) {
      v = codegeneracy(level - 1, j)[v];
      --level;
    }
    tau[p] = v;
  }
  return tau;
}

bool is_surjective(const Monotone& s, int k) {
  std::set<int> im(s.begin(), s.end());
  return static_cast<int>(im.size()) == k + 1;
}

}  // namespace

TruncSSet from_nondeg(const NondegPresentation& p) {
  const int D = p.dim;
  if (D < 0) throw MalformedPresentation("negative truncation dimension");
  // Nondegenerate simplices per dimension.
  std::vector<std::vector<int>> nd(D + 1);
  std::vector<std::map<std::string, int>> nd_index(D + 1);
  for (std::size_t s = 0; s < p.simplices.size(); ++s) {
    const auto& simp = p.simplices[s];
    if (simp.dim < 0 || simp.dim > D)
      throw MalformedPresentation("simplex '" + simp.name + "' has dimension outside 0.." + std::to_string(D));
    if (!nd_index[simp.dim].emplace(simp.name, static_cast<int>(nd[simp.dim].size())).second)
      throw MalformedPresentation("duplicate simplex '" + simp.name + "'");
    nd[simp.dim].push_back(static_cast<int>(s));
  }
  // Faces as (surjection, lower nondegenerate) pairs.
  struct EZ {
    Monotone sigma;
    int k;
    int y;
    bool operator<(const EZ& o) const {
      return std::tie(k, y, sigma) < std::tie(o.k, o.y, o.sigma);
    }
  };
  std::vector<std::vector<std::vector<EZ>>> face_of(D + 1);
  for (int k = 0; k <= D; ++k) {
    face_of[k].resize(nd[k].size());
    for (std::size_t y = 0; y < nd[k].size(); ++y) {
      const auto& simp = p.simplices[nd[k][y]];
      if (k == 0) {
        if (!simp.faces.empty()) throw MalformedPresentation("vertex '" + simp.name + "' cannot have faces");
        continue;
      }
      if (static_cast<int>(simp.faces.size()) != k + 1)
        throw MalformedPresentation("simplex '" + simp.name + "' needs " + std::to_string(k + 1) + " faces");
      for (const auto& f : simp.faces) {
        for (std::size_t t = 1; t < f.degeneracies.size(); ++t)
          if (f.degeneracies[t] >= f.degeneracies[t - 1])
            throw MalformedPresentation("degeneracy word on face of '" + simp.name +
                                        "' is not in strictly decreasing form");
        int low = k - 1 - static_cast<int>(f.degeneracies.size());
        if (low < 0) throw MalformedPresentation("degeneracy word too long on face of '" + simp.name + "'");
        for (std::size_t t = 0; t < f.degeneracies.size(); ++t) {
          int applied_to = k - 1 - static_cast<int>(t) - 1;  // level before s_{j_t}
          if (f.degeneracies[t] < 0 || f.degeneracies[t] > applied_to)
            throw MalformedPresentation("degeneracy index out of range on face of '" + simp.name + "'");
        }
        auto it = nd_index[low].find(f.target);
        if (it == nd_index[low].end())
          throw MalformedPresentation("face of '" + simp.name + "' refers to unknown " +
                                      std::to_string(low) + "-simplex '" + f.target + "'");
        face_of[k][y].push_back({surjection_of(f.degeneracies, low), low, it->second});
      }
    }
  }

  SSetData data;
  data.dim = D;
  data.names.resize(D + 1);
  std::vector<std::vector<EZ>> level(D + 1);
  std::vector<std::map<EZ, int>> index(D + 1);
  for (int m = 0; m <= D; ++m) {
    for (int k = m; k >= 0; --k)
      for (std::size_t y = 0; y < nd[k].size(); ++y)
        for (const auto& sigma : monotone_maps(m, k)) {
          if (!is_surjective(sigma, k)) continue;
          EZ e{sigma, k, static_cast<int>(y)};
          index[m][e] = static_cast<int>(level[m].size());
          level[m].push_back(e);
          const std::string& base = p.simplices[nd[k][y]].name;
          data.names[m].push_back(k == m ? base : degeneracy_prefix(sigma) + "(" + base + ")");
        }
  }
  auto face_ez = [&](const EZ& e, int i) -> EZ {
    const int m = static_cast<int>(e.sigma.size()) - 1;
    Monotone comp = after(e.sigma, coface(m, i));
    if (is_surjective(comp, e.k)) return {comp, e.k, e.y};
    const int j = e.sigma[i];
    Monotone reduced(comp.size());
    for (std::size_t q = 0; q < comp.size(); ++q) reduced[q] = comp[q] < j ? comp[q] : comp[q] - 1;
    const EZ& fy = face_of[e.k][e.y][j];
    return {after(fy.sigma, reduced), fy.k, fy.y};
  };
  data.face.resize(D + 1);
  data.degen.resize(D + 1);
  for (int m = 1; m <= D; ++m) {
    data.face[m].resize(m + 1);
    for (int i = 0; i <= m; ++i)
      for (const auto& e : level[m]) data.face[m][i].push_back(index[m - 1].at(face_ez(e, i)));
  }
  for (int m = 0; m < D; ++m) {
    data.degen[m].resize(m + 1);
    for (int i = 0; i <= m; ++i)
      for (const auto& e : level[m])
        data.degen[m][i].push_back(index[m + 1].at({after(e.sigma, codegeneracy(m, i)), e.k, e.y}));
  }
  try {
    return make_sset(std::move(data));
  } catch (const InvariantViolation& err) {
    throw MalformedPresentation(std::string("stated faces violate the simplicial identities: ") + err.what());
  }
}

NondegPresentation to_nondeg(const TruncSSet& x) {
  const int D = x.dim();
  // Reverse degeneracy index: simplex -> (j, source).
  std::vector<std::vector<std::pair<int, int>>> from(D + 1);
  for (int n = 0; n <= D; ++n) from[n].assign(x.size(n), {-1, -1});
  for (int n = 0; n < D; ++n)
    for (int j = 0; j <= n; ++j)
      for (int a = 0; a < x.size(n); ++a) {
        auto& slot = from[n + 1][x.degen(n, j, a)];
        if (slot.first < 0) slot = {j, a};
      }
  auto decompose = [&](int n, int z) {
    std::vector<int> applied;  // in application order, innermost first
    while (from[n][z].first >= 0) {
      auto [j, a] = from[n][z];
      applied.push_back(j);
      z = a;
      --n;
    }
    // Normalize through the surjection.
    std::reverse(applied.begin(), applied.end());  // outermost first
    Monotone sigma = surjection_of(applied, n);
    return FaceRef{degeneracy_word(sigma), x.name(n, z)};
  };
  NondegPresentation p;
  p.dim = D;
  for (int n = 0; n <= D; ++n)
    for (int a : nondegenerate(x, n)) {
      NondegSimplex s{x.name(n, a), n, {}};
      for (int i = 0; n > 0 && i <= n; ++i) s.faces.push_back(decompose(n - 1, x.face(n, i, a)));
      p.simplices.push_back(std::move(s));
    }
  return p;
}

// ---------------------------------------------------------------------------

FinCat simplex_category(int d) {
  FinCatData data;
  for (int k = 0; k <= d; ++k) data.objects.push_back("[" + std::to_string(k) + "]");
  std::vector<std::vector<std::map<Monotone, MorId>>> id_of(d + 1, std::vector<std::map<Monotone, MorId>>(d + 1));
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n)
      for (const auto& theta : monotone_maps(m, n)) {
        id_of[m][n][theta] = static_cast<MorId>(data.morphisms.size());
        std::string s = "<";
        for (std::size_t p = 0; p < theta.size(); ++p) s += (p ? "," : "") + std::to_string(theta[p]);
        data.morphisms.push_back({s + ">:[" + std::to_string(m) + "]->[" + std::to_string(n) + "]", m, n});
      }
  for (int k = 0; k <= d; ++k) {
    Monotone ident(k + 1);
    for (int p = 0; p <= k; ++p) ident[p] = p;
    data.identity.push_back(id_of[k][k].at(ident));
  }
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      for (const auto& [f, fid] : id_of[a][b])
        for (int c = 0; c <= d; ++c)
          for (const auto& [g, gid] : id_of[b][c])
            data.composition.push_back({gid, fid, id_of[a][c].at(after(g, f))});
  return make_fincat(std::move(data));
}

Monotone simplex_morphism_map(const FinCat& delta, MorId m) {
  const std::string& s = delta.morphism(m).name;
  Monotone out;
  std::size_t p = 1;
  while (p < s.size() && s[p] != '>') {
    std::size_t q = p;
    while (q < s.size() && s[q] != ',' && s[q] != '>') ++q;
    out.push_back(std::stoi(s.substr(p, q - p)));
    p = s[q] == ',' ? q + 1 : q;
  }
  return out;
}

}  // namespace hocat
