#include "hocat/dot.hpp"

#include <set>
#include <sstream>

namespace hocat {

namespace {

std::string esc(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node(int i) { return "n" + std::to_string(i); }

/// Strictly indecomposable arrows first, then a greedy completion in id
/// order so that the drawn arrows generate every non-identity morphism.
std::vector<MorId> drawn_generators(const FinCat& c) {
  const int nm = c.num_morphisms();
  std::vector<char> chosen(nm, 0);
  for (MorId m = 0; m < nm; ++m) {
    if (c.is_identity(m)) continue;
    bool composite = false;
    for (MorId f = 0; f < nm && !composite; ++f) {
      if (c.is_identity(f) || f == m || c.src(f) != c.src(m)) continue;
      for (MorId g : c.hom(c.tgt(f), c.tgt(m)))
        if (!c.is_identity(g) && g != m && c.compose(g, f) == m) {
          composite = true;
          break;
        }
    }
    chosen[m] = !composite;
  }
  auto closure = [&] {
    std::vector<char> in(nm, 0);
    for (MorId m = 0; m < nm; ++m) in[m] = chosen[m];
    bool grew = true;
    while (grew) {
      grew = false;
      for (MorId f = 0; f < nm; ++f)
        for (MorId g = 0; g < nm; ++g)
          if (in[f] && in[g] && c.composable(g, f) && !in[c.compose(g, f)]) {
            in[c.compose(g, f)] = 1;
            grew = true;
          }
    }
    return in;
  };
  auto in = closure();
  for (MorId m = 0; m < nm; ++m)
    if (!c.is_identity(m) && !in[m]) {
      chosen[m] = 1;
      in = closure();
    }
  std::vector<MorId> out;
  for (MorId m = 0; m < nm; ++m)
    if (chosen[m]) out.push_back(m);
  return out;
}

std::string category_dot(const FinCat& c, const std::vector<MorId>& marking, const std::string& name) {
  std::set<MorId> marked(marking.begin(), marking.end());
  std::set<MorId> edges;
  for (MorId m : drawn_generators(c)) edges.insert(m);
  for (MorId m : marked)
    if (!c.is_identity(m)) edges.insert(m);
  std::ostringstream out;
  out << "digraph " << esc(name) << " {\n";
  for (ObjId x = 0; x < c.num_objects(); ++x) out << "  " << node(x) << " [label=" << esc(c.object_name(x)) << "];\n";
  for (MorId m : edges) {
    std::vector<std::string> attrs{"label=" + esc(c.morphism(m).name)};
    if (inverse_of(c, m)) attrs.push_back("style=dashed, color=blue");
    if (marked.count(m)) attrs.push_back("penwidth=2, color=red");
    out << "  " << node(c.src(m)) << " -> " << node(c.tgt(m)) << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string dot_export(const FinCat& c, const std::string& name) { return category_dot(c, {}, name); }

std::string dot_export(const MarkedCat& m, const std::string& name) { return category_dot(m.cat, m.marking, name); }

std::string dot_export(const TruncSSet& x, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << esc(name) << " {\n";
  for (int v = 0; v < x.size(0); ++v) out << "  " << node(v) << " [label=" << esc(x.name(0, v)) << "];\n";
  if (x.dim() >= 1)
    for (int e : nondegenerate(x, 1))
      out << "  " << node(x.face(1, 1, e)) << " -> " << node(x.face(1, 0, e)) << " [label=" << esc(x.name(1, e))
          << "];\n";
  out << "}\n";
  return out.str();
}

std::string dot_export(const Quiver& q, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << esc(name) << " {\n";
  for (VertexId v = 0; v < q.num_vertices(); ++v) out << "  " << node(v) << " [label=" << esc(q.vertices[v]) << "];\n";
  for (EdgeId e = 0; e < q.num_edges(); ++e)
    out << "  " << node(q.edges[e].src) << " -> " << node(q.edges[e].tgt) << " [label=" << esc(q.edges[e].name)
        << (q.is_distinguished(e) ? ", style=dotted" : "") << "];\n";
  out << "}\n";
  return out.str();
}

std::string dot_export(const Zigzag& z, const MarkedCat& m, const std::string& name) {
  const FinCat& c = m.cat;
  std::ostringstream out;
  out << "digraph " << esc(name) << " {\n  rankdir=LR;\n";
  ObjId cur = z.source;
  out << "  " << node(0) << " [label=" << esc(c.object_name(cur)) << "];\n";
  for (std::size_t i = 0; i < z.legs.size(); ++i) {
    const ZigzagLeg& leg = z.legs[i];
    cur = leg.backward ? c.src(leg.morphism) : c.tgt(leg.morphism);
    const int a = static_cast<int>(i), b = a + 1;
    out << "  " << node(b) << " [label=" << esc(c.object_name(cur)) << "];\n";
    if (leg.backward)
      out << "  " << node(b) << " -> " << node(a) << " [label=" << esc(c.morphism(leg.morphism).name)
          << ", style=dashed];\n";
    else
      out << "  " << node(a) << " -> " << node(b) << " [label=" << esc(c.morphism(leg.morphism).name) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hocat
