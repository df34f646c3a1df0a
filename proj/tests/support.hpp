#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/io.hpp"

namespace testing_support {

inline std::string corpus_path(const std::string& file) { return std::string(HOCAT_CORPUS_DIR) + "/" + file; }

struct NamedCat {
  std::string name;
  hocat::FinCat cat;
};

/// The ten corpus categories, loaded from their documents.
inline std::vector<NamedCat> corpus_categories() {
  const char* files[] = {"ord0.cat",   "arrow.cat", "ord2.cat",     "ord3.cat",           "discrete2.cat",
                         "indiscrete3.cat", "iso.cat", "parallel.cat", "arrow_plus_arrow.cat", "square.cat"};
  std::vector<NamedCat> out;
  for (const char* f : files) {
    auto doc = hocat::read_document(corpus_path(f));
    out.push_back({doc.name, hocat::load_fincat(doc)});
  }
  return out;
}

/// An isomorphism found by the library, confirmed by checking both
/// functors and both composites directly.
inline bool verified_iso(const hocat::FinCat& a, const hocat::FinCat& b) {
  auto iso = hocat::is_isomorphic(a, b);
  if (!iso) return false;
  return hocat::is_functor(a, b, iso->forward) && hocat::is_functor(b, a, iso->backward) &&
         hocat::compose(iso->backward, iso->forward) == hocat::identity_functor(a) &&
         hocat::compose(iso->forward, iso->backward) == hocat::identity_functor(b);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Functors by exhaustive assignment of objects then morphisms, checking
/// every composition at the end.
inline std::size_t brute_force_functor_count(const hocat::FinCat& c, const hocat::FinCat& d) {
  const int no = c.num_objects(), nm = c.num_morphisms();
  std::vector<int> obj(no, 0), mor(nm, -1);
  std::size_t count = 0;
  std::function<void(int)> assign_mor = [&](int m) {
    if (m == nm) {
      for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g)
          if (c.composable(g, f) && d.compose(mor[g], mor[f]) != mor[c.compose(g, f)]) return;
      ++count;
      return;
    }
    if (c.is_identity(m)) {
      mor[m] = d.identity(obj[c.src(m)]);
      assign_mor(m + 1);
      return;
    }
    for (int h = 0; h < d.num_morphisms(); ++h)
      if (d.src(h) == obj[c.src(m)] && d.tgt(h) == obj[c.tgt(m)]) {
        mor[m] = h;
        assign_mor(m + 1);
      }
  };
  std::function<void(int)> assign_obj = [&](int x) {
    if (x == no) {
      assign_mor(0);
      return;
    }
    for (int y = 0; y < d.num_objects(); ++y) {
      obj[x] = y;
      assign_obj(x + 1);
    }
  };
  assign_obj(0);
  return count;
}

/// Number of composable strings of k morphisms (identities allowed).
inline std::size_t chain_count(const hocat::FinCat& c, int k) {
  if (k == 0) return static_cast<std::size_t>(c.num_objects());
  std::vector<std::size_t> ending(c.num_objects(), 1);  // chains ending at each object
  for (int step = 0; step < k; ++step) {
    std::vector<std::size_t> next(c.num_objects(), 0);
    for (int m = 0; m < c.num_morphisms(); ++m) next[c.tgt(m)] += ending[c.src(m)];
    ending = next;
  }
  return std::accumulate(ending.begin(), ending.end(), std::size_t{0});
}

/// Cardinality of the colimit of a covariant set functor given as values
/// sizes and morphism maps, by merging x with F(f)(x).
inline std::size_t set_colimit_size(const std::vector<int>& sizes, const std::vector<int>& src,
                                    const std::vector<int>& tgt, const std::vector<std::vector<int>>& maps) {
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
  std::vector<int> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t f = 0; f < maps.size(); ++f)
    for (int x = 0; x < sizes[src[f]]; ++x) parent[find(offset[src[f]] + x)] = find(offset[tgt[f]] + maps[f][x]);
  std::size_t roots = 0;
  for (int x = 0; x < offset.back(); ++x) roots += find(x) == x;
  return roots;
}

/// Cardinality of the limit of a covariant set functor: compatible choices
/// of one element per object.
inline std::size_t set_limit_size(const std::vector<int>& sizes, const std::vector<int>& src,
                                  const std::vector<int>& tgt, const std::vector<std::vector<int>>& maps) {
  std::vector<int> pick(sizes.size(), 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == sizes.size()) {
      for (std::size_t f = 0; f < maps.size(); ++f)
        if (maps[f][pick[src[f]]] != pick[tgt[f]]) return;
      ++count;
      return;
    }
    for (int x = 0; x < sizes[i]; ++x) {
      pick[i] = x;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace testing_support
