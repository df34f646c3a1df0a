#include "hocat/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hocat {

const FinCat& MaterializeResult::require_finite() const {
  if (!category)
    throw PossiblyInfinite("presentation not certified finite at word length " +
                           std::to_string(max_len) + " (" + std::to_string(classes.size()) +
                           " partial classes)");
  return *category;
}

MorId MaterializeResult::evaluate(const Path& p) const {
  const FinCat& c = require_finite();
  MorId m = c.identity(p.source);
  for (EdgeId e : p.edges) m = c.compose(generator_morphism[e], m);
  return m;
}

std::size_t default_max_len(const PresCat& p) {
  std::size_t longest = 0;
  for (const auto& r : p.relations) longest = std::max({longest, r.lhs.size(), r.rhs.size()});
  return static_cast<std::size_t>(p.generators.num_edges()) + longest + 2;
}

namespace {

/// Coset table over the right Cayley graphs of all vertices.  Node k stands
/// for a class of words starting at nodes_[k].start; next[e] is the class
/// obtained by appending generator e.
class CosetTable {
 public:
  CosetTable(const PresCat& p, std::size_t max_len, std::size_t budget)
      : p_(p), q_(p.generators), max_len_(max_len), budget_(budget) {
    out_.resize(q_.num_vertices());
    for (EdgeId e = 0; e < q_.num_edges(); ++e) out_[q_.edges[e].src].push_back(e);
    rel_at_.resize(q_.num_vertices());
    for (std::size_t r = 0; r < p.relations.size(); ++r)
      rel_at_[p.relations[r].lhs.source].push_back(r);
    for (VertexId v = 0; v < q_.num_vertices(); ++v) start_.push_back(new_node(v, Path{v, {}}));
  }

  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!live(static_cast<int>(i))) continue;
        const int n = static_cast<int>(i);
        for (EdgeId e : out_[nodes_[n].target])
          if (nodes_[n].next[e] < 0 && define(n, e) >= 0) changed = true;
        for (std::size_t r : rel_at_[nodes_[n].target]) {
          if (!live(n)) break;
          int a = trace(n, p_.relations[r].lhs, true);
          int b = trace(find(n), p_.relations[r].rhs, true);
          if (a >= 0 && b >= 0 && find(a) != find(b)) {
            coincide(a, b);
            changed = true;
          }
        }
      }
      if (refresh_representatives()) changed = true;
    }
  }

  bool complete() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!live(static_cast<int>(i))) continue;
      for (EdgeId e : out_[nodes_[i].target])
        if (nodes_[i].next[e] < 0) return false;
    }
    return true;
  }

  MaterializeResult result() {
    MaterializeResult out;
    out.max_len = max_len_;
    std::vector<int> order;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (live(static_cast<int>(i))) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (nodes_[a].start != nodes_[b].start) return nodes_[a].start < nodes_[b].start;
      return shortlex_less(nodes_[a].rep, nodes_[b].rep);
    });
    std::map<int, MorId> index;
    for (int n : order) {
      index[n] = static_cast<MorId>(out.classes.size());
      out.classes.push_back({nodes_[n].start, nodes_[n].target, nodes_[n].rep});
    }
    if (!complete()) return out;

    FinCatData d;
    d.objects = q_.vertices;
    std::set<std::string> used;
    for (const auto& c : out.classes) {
      // Generator names may contain '.', so rendered words can collide.
      std::string name = path_to_string(q_, c.representative);
      while (!used.insert(name).second) name += "'";
      d.morphisms.push_back({name, c.src, c.tgt});
    }
    for (VertexId v = 0; v < q_.num_vertices(); ++v) d.identity.push_back(index.at(find(start_[v])));
    for (int f : order)
      for (int g : order) {
        if (nodes_[g].start != nodes_[f].target) continue;
        int h = trace(f, nodes_[g].rep, false);
        d.composition.push_back({index.at(g), index.at(f), index.at(find(h))});
      }
    out.category = make_fincat(std::move(d));
    out.generator_morphism.resize(q_.num_edges());
    for (EdgeId e = 0; e < q_.num_edges(); ++e)
      out.generator_morphism[e] = index.at(find(nodes_[find(start_[q_.edges[e].src])].next[e]));
    return out;
  }

 private:
  struct Node {
    VertexId start;
    VertexId target;
    Path rep;
    std::vector<int> next;
  };

  int new_node(VertexId target, Path rep) {
    if (nodes_.size() >= budget_) throw BudgetExceeded("word-class table", budget_);
    Node n{rep.source, target, std::move(rep), std::vector<int>(q_.num_edges(), -1)};
    nodes_.push_back(std::move(n));
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool live(int n) const { return parent_[n] == n; }

  int find(int n) {
    int r = n;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[n] != r) {
      int next = parent_[n];
      parent_[n] = r;
      n = next;
    }
    return r;
  }

  int define(int n, EdgeId e) {
    if (nodes_[n].rep.size() >= max_len_) return -1;
    Path rep = nodes_[n].rep;
    rep.edges.push_back(e);
    int m = new_node(q_.edges[e].tgt, std::move(rep));
    nodes_[n].next[e] = m;
    return m;
  }

  int trace(int n, const Path& word, bool allow_define) {
    n = find(n);
    for (EdgeId e : word.edges) {
      int m = nodes_[n].next[e];
      if (m < 0) {
        if (!allow_define) return -1;
        m = define(n, e);
        if (m < 0) return -1;
      }
      n = find(m);
    }
    return n;
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (shortlex_less(nodes_[y].rep, nodes_[x].rep)) std::swap(x, y);
      parent_[y] = x;
      for (EdgeId e = 0; e < q_.num_edges(); ++e) {
        int ny = nodes_[y].next[e];
        if (ny < 0) continue;
        int nx = nodes_[x].next[e];
        if (nx < 0)
          nodes_[x].next[e] = ny;
        else
          queue.emplace_back(nx, ny);
      }
    }
  }

  /// Shortlex-least representatives by ordered BFS from each start node.
  bool refresh_representatives() {
    bool changed = false;
    std::vector<char> seen(nodes_.size(), 0);
    for (VertexId v = 0; v < q_.num_vertices(); ++v) {
      std::deque<int> queue{find(start_[v])};
      seen[queue.front()] = 1;
      while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        for (EdgeId e : out_[nodes_[n].target]) {
          int m = nodes_[n].next[e];
          if (m < 0) continue;
          m = find(m);
          if (seen[m]) continue;
          seen[m] = 1;
          Path rep = nodes_[n].rep;
          rep.edges.push_back(e);
          if (rep != nodes_[m].rep) {
            if (rep.size() != nodes_[m].rep.size()) changed = true;
            nodes_[m].rep = std::move(rep);
          }
          queue.push_back(m);
        }
      }
    }
    return changed;
  }

  const PresCat& p_;
  const Quiver& q_;
  std::size_t max_len_;
  std::size_t budget_;
  std::vector<Node> nodes_;
  std::vector<int> parent_;
  std::vector<int> start_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<std::size_t>> rel_at_;
};

}  // namespace

MaterializeResult materialize(const PresCat& p, std::size_t max_len, std::size_t budget) {
  validate_prescat(p);
  PresCat normal = normalize(p);
  if (max_len == 0) max_len = default_max_len(normal);
  CosetTable table(normal, max_len, budget);
  table.close();
  MaterializeResult out = table.result();
  if (p.generators.reflexive) {
    // Report words over the original edges; distinguished loops are identities.
    std::vector<EdgeId> original;
    for (EdgeId e = 0; e < p.generators.num_edges(); ++e)
      if (!p.generators.is_distinguished(e)) original.push_back(e);
    for (auto& c : out.classes)
      for (EdgeId& e : c.representative.edges) e = original[e];
    if (out.category) {
      std::vector<MorId> full(p.generators.num_edges(), -1);
      for (EdgeId e = 0; e < p.generators.num_edges(); ++e)
        if (p.generators.is_distinguished(e))
          full[e] = out.category->identity(p.generators.edges[e].src);
      for (std::size_t k = 0; k < original.size(); ++k)
        full[original[k]] = out.generator_morphism[k];
      out.generator_morphism = std::move(full);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

VertexId vertex_at(const Quiver& q, const Path& w, std::size_t pos) {
  return pos == 0 ? w.source : q.edges[w.edges[pos - 1]].tgt;
}

bool occurs_at(const Quiver& q, const Path& w, const Path& side, std::size_t pos) {
  if (pos + side.size() > w.size()) return false;
  if (side.empty()) return vertex_at(q, w, pos) == side.source;
  return std::equal(side.edges.begin(), side.edges.end(), w.edges.begin() + pos);
}

Path splice(const Path& w, std::size_t pos, std::size_t len, const Path& with) {
  Path out{w.source, {}};
  out.edges.reserve(w.size() - len + with.size());
  out.edges.insert(out.edges.end(), w.edges.begin(), w.edges.begin() + pos);
  out.edges.insert(out.edges.end(), with.edges.begin(), with.edges.end());
  out.edges.insert(out.edges.end(), w.edges.begin() + pos + len, w.edges.end());
  return out;
}

struct SearchNode {
  Path word;
  int parent;
  RewriteStep step;
};

/// Bidirectional breadth-first search over single relation applications,
/// restricted to words of length <= bound.
std::optional<std::vector<RewriteStep>> rewrite_search(const PresCat& p, const Path& from,
                                                       const Path& to, std::size_t bound,
                                                       std::size_t budget) {
  const Quiver& q = p.generators;
  std::vector<SearchNode> side[2];
  std::map<std::vector<EdgeId>, int> seen[2];
  std::deque<int> frontier[2];
  const Path* roots[2] = {&from, &to};
  for (int s = 0; s < 2; ++s) {
    side[s].push_back({*roots[s], -1, {}});
    seen[s][roots[s]->edges] = 0;
    frontier[s].push_back(0);
  }

  auto chain = [&](int s, int idx) {
    std::vector<RewriteStep> steps;
    while (side[s][idx].parent >= 0) {
      steps.push_back(side[s][idx].step);
      idx = side[s][idx].parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  auto join = [&](int s, int idx_s, int idx_other) {
    std::vector<RewriteStep> a = chain(s, idx_s);
    std::vector<RewriteStep> b = chain(1 - s, idx_other);
    // Steps of the side rooted at `to` are inverted and reversed.
    std::vector<RewriteStep>& fwd = s == 0 ? a : b;
    std::vector<RewriteStep>& bwd = s == 0 ? b : a;
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
      RewriteStep inv = *it;
      inv.forward = !inv.forward;
      fwd.push_back(inv);
    }
    return fwd;
  };

  if (auto it = seen[1].find(from.edges); it != seen[1].end()) return join(0, 0, it->second);

  std::size_t expanded = 0;
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int s = frontier[0].empty() ? 1 : frontier[1].empty() ? 0
            : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    // Expand one full layer of the chosen side.
    std::size_t layer = frontier[s].size();
    for (std::size_t k = 0; k < layer; ++k) {
      int idx = frontier[s].front();
      frontier[s].pop_front();
      const Path w = side[s][idx].word;
      for (std::size_t r = 0; r < p.relations.size(); ++r)
        for (int dir = 0; dir < 2; ++dir) {
          const Path& pat = dir == 0 ? p.relations[r].lhs : p.relations[r].rhs;
          const Path& rep = dir == 0 ? p.relations[r].rhs : p.relations[r].lhs;
          if (w.size() - pat.size() + rep.size() > bound) continue;
          for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
            if (!occurs_at(q, w, pat, pos)) continue;
            Path next = splice(w, pos, pat.size(), rep);
            if (seen[s].count(next.edges)) continue;
            if (++expanded > budget) return std::nullopt;
            int nidx = static_cast<int>(side[s].size());
            side[s].push_back({next, idx, RewriteStep{pos, r, dir == 0}});
            seen[s][next.edges] = nidx;
            if (auto it = seen[1 - s].find(next.edges); it != seen[1 - s].end())
              return join(s, nidx, it->second);
            frontier[s].push_back(nidx);
          }
        }
    }
  }
  return std::nullopt;
}

}  // namespace

Path apply_rewrite(const PresCat& p, const Path& w, const RewriteStep& step) {
  if (step.relation >= p.relations.size()) throw InvariantViolation("rewrite names an unknown relation");
  const Relation& r = p.relations[step.relation];
  const Path& pat = step.forward ? r.lhs : r.rhs;
  const Path& rep = step.forward ? r.rhs : r.lhs;
  if (!occurs_at(p.generators, w, pat, step.position))
    throw InvariantViolation("rewrite step does not match the word");
  return splice(w, step.position, pat.size(), rep);
}

Path replay(const PresCat& p, const Path& w, const std::vector<RewriteStep>& steps) {
  Path cur = w;
  for (const auto& s : steps) cur = apply_rewrite(p, cur, s);
  return cur;
}

WordVerdict word_equal(const PresCat& p, const Path& w1, const Path& w2, std::size_t budget,
                       std::size_t max_len) {
  validate_prescat(p);
  validate_path(p.generators, w1);
  validate_path(p.generators, w2);
  if (w1.source != w2.source || path_target(p.generators, w1) != path_target(p.generators, w2))
    throw InvariantViolation("word_equal needs parallel words");

  WordVerdict v;
  if (w1 == w2) {
    v.kind = WordVerdict::Kind::Equal;
    return v;
  }
  if (max_len == 0) max_len = default_max_len(p);
  std::size_t bound = std::max({max_len, w1.size(), w2.size()});
  if (auto steps = rewrite_search(p, w1, w2, bound, budget)) {
    v.kind = WordVerdict::Kind::Equal;
    v.witness = std::move(*steps);
    return v;
  }
  if (p.relations.empty()) {
    v.kind = WordVerdict::Kind::NotEqual;
    v.certificate = "no relations: distinct words are distinct morphisms of the free category";
    return v;
  }
  MaterializeResult table;
  try {
    table = materialize(p, max_len, budget);
  } catch (const BudgetExceeded&) {
    return v;
  }
  if (!table.finite()) return v;
  MorId a = table.evaluate(w1);
  MorId b = table.evaluate(w2);
  if (a != b) {
    v.kind = WordVerdict::Kind::NotEqual;
    v.certificate = "finiteness certificate: complete word-class table with " +
                    std::to_string(table.classes.size()) + " classes separates " +
                    table.category->morphism(a).name + " from " + table.category->morphism(b).name;
    return v;
  }
  // Same class in a certified table: a derivation exists, search longer words.
  for (std::size_t longer = 2 * bound; longer <= 8 * bound; longer *= 2) {
    if (auto steps = rewrite_search(p, w1, w2, longer, budget)) {
      v.kind = WordVerdict::Kind::Equal;
      v.witness = std::move(*steps);
      return v;
    }
  }
  return v;
}

std::string to_string(WordVerdict::Kind k) {
  switch (k) {
    case WordVerdict::Kind::Equal:
      return "Equal";
    case WordVerdict::Kind::NotEqual:
      return "NotEqual";
    case WordVerdict::Kind::Unknown:
      break;
  }
  return "Unknown";
}

}  // namespace hocat
