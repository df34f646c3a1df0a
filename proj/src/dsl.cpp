#include "hocat/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace hocat {

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::Category: return "category";
    case DocKind::Quiver: return "quiver";
    case DocKind::SSet: return "sset";
    case DocKind::Diagram: return "diagram";
    case DocKind::Marked: return "marked";
  }
  return "?";
}

namespace {

bool is_punct(char c) { return c == ':' || c == '=' || c == '.' || c == '(' || c == ')'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool word_char(char c) { return !is_space(c) && !is_punct(c) && c != '"' && c != '#' && c != '\n'; }

struct Token {
  enum Kind { Word, String, Punct } kind;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    SourceLoc loc{lineno, static_cast<int>(i) + 1};
    if (is_space(c)) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (is_punct(c)) {
      out.push_back({Token::Punct, std::string(1, c), loc});
      ++i;
    } else if (c == '"') {
      std::string s;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          s += line[i + 1];
          i += 2;
        } else if (line[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          s += line[i++];
        }
      }
      if (!closed) throw ParseError("unterminated string", loc, {"\""});
      out.push_back({Token::String, s, loc});
    } else {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j])) ++j;
      out.push_back({Token::Word, line.substr(i, j - i), loc});
      i = j;
    }
  }
  return out;
}

bool is_degeneracy_word(const std::string& w, std::vector<int>* out) {
  if (w.empty()) return false;
  std::vector<int> idx;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 's') return false;
    std::size_t j = ++i;
    while (j < w.size() && w[j] >= '0' && w[j] <= '9') ++j;
    if (j == i || j - i > 6) return false;
    idx.push_back(std::stoi(w.substr(i, j - i)));
    i = j;
  }
  if (out) *out = idx;
  return true;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::size_t start = 0;
    int lineno = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      lines_.push_back({lineno, lex_line(text.substr(start, end - start), lineno)});
      last_line_ = lineno;
      last_col_ = static_cast<int>(end - start) + 1;
      ++lineno;
      start = end + 1;
    }
  }

  Document run() {
    Document d;
    if (!next_line())
      throw ParseError("empty document", eof(), {"category", "quiver", "sset", "diagram", "marked"});
    header(d);
    bool ended = false;
    while (next_line()) {
      const Token& kw = cur_[0];
      if (kw.kind == Token::Word && kw.text == "end") {
        pos_ = 1;
        expect_eol();
        ended = true;
        break;
      }
      statement(d);
    }
    if (!ended) throw ParseError("missing 'end'", eof(), {"end"});
    if (next_line()) throw ParseError("text after 'end'", cur_[0].loc, {"end of input"});
    check_references(d);
    return d;
  }

 private:
  // ---- token access --------------------------------------------------------
  bool next_line() {
    while (line_ < lines_.size()) {
      auto& l = lines_[line_++];
      if (!l.second.empty()) {
        cur_ = l.second;
        lineno_ = l.first;
        pos_ = 0;
        return true;
      }
    }
    return false;
  }
  SourceLoc eof() const { return {last_line_, last_col_}; }
  SourceLoc here() const {
    if (pos_ < cur_.size()) return cur_[pos_].loc;
    const Token& t = cur_.back();
    return {t.loc.line, t.loc.column + static_cast<int>(t.text.size()) + (t.kind == Token::String ? 2 : 0)};
  }
  bool at_eol() const { return pos_ >= cur_.size(); }
  void expect_eol() {
    if (!at_eol()) throw ParseError("unexpected '" + cur_[pos_].text + "'", here(), {"end of line"});
  }
  std::string name(const std::string& what) {
    if (at_eol() || cur_[pos_].kind == Token::Punct) throw ParseError("missing " + what, here(), {what});
    return cur_[pos_++].text;
  }
  SourceLoc name_loc() const { return here(); }
  void punct(char c) {
    if (at_eol() || cur_[pos_].kind != Token::Punct || cur_[pos_].text[0] != c)
      throw ParseError(at_eol() ? "unexpected end of line" : "unexpected '" + cur_[pos_].text + "'", here(),
                       {std::string("'") + c + "'"});
    ++pos_;
  }
  bool peek_punct(char c) const {
    return !at_eol() && cur_[pos_].kind == Token::Punct && cur_[pos_].text[0] == c;
  }
  void keyword(const std::string& k) {
    if (at_eol() || cur_[pos_].kind != Token::Word || cur_[pos_].text != k)
      throw ParseError(at_eol() ? "unexpected end of line" : "unexpected '" + cur_[pos_].text + "'", here(),
                       {"'" + k + "'"});
    ++pos_;
  }
  int integer(const std::string& what) {
    SourceLoc loc = here();
    if (at_eol() || cur_[pos_].kind != Token::Word) throw ParseError("missing " + what, loc, {"integer"});
    const std::string& t = cur_[pos_].text;
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || v < 0 || v > 64)
      throw ParseError("invalid " + what + " '" + t + "'", loc, {"integer 0..64"});
    ++pos_;
    return v;
  }

  // ---- grammar ---------------------------------------------------------------
  void header(Document& d) {
    const Token& kw = cur_[0];
    static const std::map<std::string, DocKind> kinds = {{"category", DocKind::Category},
                                                         {"quiver", DocKind::Quiver},
                                                         {"sset", DocKind::SSet},
                                                         {"diagram", DocKind::Diagram},
                                                         {"marked", DocKind::Marked}};
    auto it = kw.kind == Token::Word ? kinds.find(kw.text) : kinds.end();
    if (it == kinds.end())
      throw ParseError("unknown document kind '" + kw.text + "'", kw.loc,
                       {"category", "quiver", "sset", "diagram", "marked"});
    d.kind = it->second;
    d.loc = kw.loc;
    pos_ = 1;
    d.name = name("document name");
    if (d.kind == DocKind::Quiver && !at_eol()) {
      keyword("reflexive");
      d.reflexive = true;
    }
    if (d.kind == DocKind::SSet) {
      keyword("dim");
      d.dim = integer("dimension");
      if (at_eol()) throw ParseError("missing sset format", here(), {"raw", "nondeg"});
      const Token& f = cur_[pos_];
      if (f.kind != Token::Word || (f.text != "raw" && f.text != "nondeg"))
        throw ParseError("unknown sset format '" + f.text + "'", f.loc, {"raw", "nondeg"});
      d.nondeg = f.text == "nondeg";
      ++pos_;
    }
    expect_eol();
  }

  std::vector<std::string> allowed(const Document& d) const {
    switch (d.kind) {
      case DocKind::Category: return {"objects", "arrow", "relation", "end"};
      case DocKind::Marked: return {"objects", "arrow", "relation", "mark", "end"};
      case DocKind::Quiver:
        return d.reflexive ? std::vector<std::string>{"vertices", "edge", "loop", "end"}
                           : std::vector<std::string>{"vertices", "edge", "end"};
      case DocKind::SSet:
        return d.nondeg ? std::vector<std::string>{"cell", "end"}
                        : std::vector<std::string>{"simplex", "faces", "degens", "end"};
      case DocKind::Diagram: return {"index", "value", "objmap", "mormap", "end"};
    }
    return {};
  }

  std::vector<std::string> path() {
    std::vector<std::string> out{name("morphism name")};
    while (peek_punct('.')) {
      ++pos_;
      out.push_back(name("morphism name"));
    }
    return out;
  }

  void statement(Document& d) {
    const Token& kw = cur_[0];
    auto ok = allowed(d);
    if (kw.kind != Token::Word || std::find(ok.begin(), ok.end(), kw.text) == ok.end())
      throw ParseError("unexpected '" + kw.text + "' in " + to_string(d.kind) + " document", kw.loc, ok);
    const std::string k = kw.text;
    const SourceLoc loc = kw.loc;
    pos_ = 1;
    if (k == "objects" || k == "vertices") {
      ObjectsStmt s{loc, {}};
      while (!at_eol()) s.names.push_back(name(k == "objects" ? "object name" : "vertex name"));
      d.body.push_back(std::move(s));
    } else if (k == "arrow" || k == "edge") {
      ArrowStmt s{loc, name(k + " name"), "", ""};
      punct(':');
      s.src = name("source");
      keyword("->");
      s.tgt = name("target");
      d.body.push_back(std::move(s));
    } else if (k == "relation") {
      RelationStmt s{loc, path(), {}};
      punct('=');
      s.rhs = path();
      d.body.push_back(std::move(s));
    } else if (k == "loop") {
      LoopStmt s{loc, name("loop name"), ""};
      punct(':');
      s.vertex = name("vertex");
      d.body.push_back(std::move(s));
    } else if (k == "mark") {
      MarkStmt s{loc, {}};
      while (!at_eol()) s.names.push_back(name("morphism name"));
      if (s.names.empty()) throw ParseError("nothing marked", here(), {"morphism name"});
      d.body.push_back(std::move(s));
    } else if (k == "simplex") {
      SimplexStmt s{loc, integer("level"), ""};
      s.name = name("simplex name");
      d.body.push_back(std::move(s));
    } else if (k == "faces" || k == "degens") {
      TableStmt s{loc, k == "faces", integer("level"), "", {}};
      s.name = name("simplex name");
      punct('=');
      while (!at_eol()) s.values.push_back(name("simplex name"));
      d.body.push_back(std::move(s));
    } else if (k == "cell") {
      CellStmt s{loc, integer("level"), "", {}};
      s.name = name("cell name");
      if (s.level > 0) {
        punct(':');
        while (!at_eol()) s.faces.push_back(face_term());
      }
      d.body.push_back(std::move(s));
    } else if (k == "index") {
      d.body.push_back(IndexStmt{loc, name("file path")});
    } else if (k == "value") {
      ValueStmt s{loc, name("index object"), ""};
      s.path = name("file path");
      d.body.push_back(std::move(s));
    } else if (k == "objmap" || k == "mormap") {
      MapStmt s{loc, k == "objmap", name("index arrow"), "", ""};
      s.from = name("source name");
      keyword("->");
      s.to = name("target name");
      d.body.push_back(std::move(s));
    }
    expect_eol();
  }

  FaceTerm face_term() {
    SourceLoc loc = here();
    bool bare = !at_eol() && cur_[pos_].kind == Token::Word;
    std::string first = name("face");
    std::vector<int> word;
    if (bare && peek_punct('(')) {
      if (!is_degeneracy_word(first, &word)) throw ParseError("invalid degeneracy word '" + first + "'", loc, {"s<i>..."});
      ++pos_;
      FaceTerm t{word, name("simplex name")};
      punct(')');
      return t;
    }
    return FaceTerm{{}, first};
  }

  // ---- name resolution -------------------------------------------------------
  template <class T>
  static const T* as(const Statement& s) {
    return std::get_if<T>(&s);
  }

  void check_references(const Document& d) {
    switch (d.kind) {
      case DocKind::Category:
      case DocKind::Marked: check_category(d); break;
      case DocKind::Quiver: check_quiver(d); break;
      case DocKind::SSet: d.nondeg ? check_nondeg(d) : check_raw(d); break;
      case DocKind::Diagram: check_diagram(d); break;
    }
  }

  static void declare(std::set<std::string>& names, const std::string& n, SourceLoc loc, const std::string& what) {
    if (!names.insert(n).second) throw DuplicateId("duplicate " + what + " '" + n + "'", loc);
  }
  static void require(const std::set<std::string>& names, const std::string& n, SourceLoc loc,
                      const std::string& what) {
    if (!names.count(n)) throw UnknownReference("unknown " + what + " '" + n + "'", loc);
  }

  void check_category(const Document& d) {
    std::set<std::string> objects, arrows;
    auto morphism_known = [&](const std::string& n) {
      return arrows.count(n) || (n.rfind("id_", 0) == 0 && objects.count(n.substr(3)));
    };
    for (const auto& s : d.body) {
      if (auto o = as<ObjectsStmt>(s))
        for (const auto& n : o->names) declare(objects, n, o->loc, "object");
      if (auto a = as<ArrowStmt>(s)) {
        declare(arrows, a->name, a->loc, "arrow");
        require(objects, a->src, a->loc, "object");
        require(objects, a->tgt, a->loc, "object");
      }
      if (auto r = as<RelationStmt>(s))
        for (const auto* side : {&r->lhs, &r->rhs})
          for (const auto& n : *side)
            if (!morphism_known(n)) throw UnknownReference("unknown morphism '" + n + "'", r->loc);
      if (auto m = as<MarkStmt>(s))
        for (const auto& n : m->names)
          if (!morphism_known(n)) throw UnknownReference("unknown morphism '" + n + "'", m->loc);
    }
  }

  void check_quiver(const Document& d) {
    std::set<std::string> vertices, edges, looped;
    for (const auto& s : d.body) {
      if (auto o = as<ObjectsStmt>(s))
        for (const auto& n : o->names) declare(vertices, n, o->loc, "vertex");
      if (auto a = as<ArrowStmt>(s)) {
        declare(edges, a->name, a->loc, "edge");
        require(vertices, a->src, a->loc, "vertex");
        require(vertices, a->tgt, a->loc, "vertex");
      }
      if (auto l = as<LoopStmt>(s)) {
        declare(edges, l->name, l->loc, "edge");
        require(vertices, l->vertex, l->loc, "vertex");
        declare(looped, l->vertex, l->loc, "distinguished loop at");
      }
    }
  }

  void check_raw(const Document& d) {
    std::vector<std::set<std::string>> level(d.dim + 1);
    for (const auto& s : d.body)
      if (auto x = as<SimplexStmt>(s)) {
        if (x->level > d.dim)
          throw ParseError("level " + std::to_string(x->level) + " above dimension " + std::to_string(d.dim), x->loc,
                           {"level 0.." + std::to_string(d.dim)});
        declare(level[x->level], x->name, x->loc, "simplex");
      }
    std::set<std::pair<bool, std::pair<int, std::string>>> seen;
    for (const auto& s : d.body)
      if (auto t = as<TableStmt>(s)) {
        const int n = t->level;
        const bool ok_level = t->faces ? (n >= 1 && n <= d.dim) : (n < d.dim);
        if (!ok_level) throw ParseError("no " + std::string(t->faces ? "faces" : "degeneracies") + " at level " +
                                            std::to_string(n), t->loc, {"valid level"});
        require(level[n], t->name, t->loc, "simplex");
        if (!seen.insert({t->faces, {n, t->name}}).second)
          throw DuplicateId("table for '" + t->name + "' given twice", t->loc);
        if (static_cast<int>(t->values.size()) != n + 1)
          throw ParseError("expected " + std::to_string(n + 1) + " entries", t->loc, {std::to_string(n + 1) + " names"});
        for (const auto& v : t->values) require(level[t->faces ? n - 1 : n + 1], v, t->loc, "simplex");
      }
  }

  void check_nondeg(const Document& d) {
    std::map<std::string, int> cells;
    for (const auto& s : d.body)
      if (auto c = as<CellStmt>(s)) {
        if (c->level > d.dim)
          throw ParseError("level " + std::to_string(c->level) + " above dimension " + std::to_string(d.dim), c->loc,
                           {"level 0.." + std::to_string(d.dim)});
        if (c->level > 0 && static_cast<int>(c->faces.size()) != c->level + 1)
          throw ParseError("expected " + std::to_string(c->level + 1) + " faces", c->loc,
                           {std::to_string(c->level + 1) + " faces"});
        for (const auto& f : c->faces) {
          auto it = cells.find(f.target);
          if (it == cells.end()) throw UnknownReference("unknown cell '" + f.target + "'", c->loc);
        }
        if (!cells.emplace(c->name, c->level).second) throw DuplicateId("duplicate cell '" + c->name + "'", c->loc);
      }
  }

  void check_diagram(const Document& d) {
    std::set<std::string> values;
    int index = 0;
    for (const auto& s : d.body) {
      if (auto i = as<IndexStmt>(s))
        if (++index > 1) throw DuplicateId("index given twice", i->loc);
      if (auto v = as<ValueStmt>(s)) declare(values, v->object, v->loc, "value for");
    }
    if (index == 0) throw ParseError("diagram has no index", d.loc, {"index"});
  }

  std::vector<std::pair<int, std::vector<Token>>> lines_;
  std::size_t line_ = 0;
  std::vector<Token> cur_;
  std::size_t pos_ = 0;
  int lineno_ = 0;
  int last_line_ = 1;
  int last_col_ = 1;
};

std::string join_path(const std::vector<std::string>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + quote_if_needed(p[i]);
  return s;
}

}  // namespace

Document parse(const std::string& text) { return Parser(text).run(); }

std::string quote_if_needed(const std::string& name) {
  bool bare = !name.empty() && name != "->";
  for (char c : name)
    if (!word_char(c) || c == '\\') bare = false;
  if (bare) return name;
  std::string s = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') s += '\\';
    s += c;
  }
  return s + "\"";
}

std::string print(const Document& d) {
  std::string out = to_string(d.kind) + " " + quote_if_needed(d.name);
  if (d.kind == DocKind::Quiver && d.reflexive) out += " reflexive";
  if (d.kind == DocKind::SSet) out += " dim " + std::to_string(d.dim) + (d.nondeg ? " nondeg" : " raw");
  out += "\n";
  auto names = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& n : v) s += " " + quote_if_needed(n);
    return s;
  };
  for (const auto& st : d.body) {
    out += "  ";
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ObjectsStmt>) {
            out += (d.kind == DocKind::Quiver ? "vertices" : "objects") + names(s.names);
          } else if constexpr (std::is_same_v<T, ArrowStmt>) {
            out += (d.kind == DocKind::Quiver ? "edge " : "arrow ") + quote_if_needed(s.name) + " : " +
                   quote_if_needed(s.src) + " -> " + quote_if_needed(s.tgt);
          } else if constexpr (std::is_same_v<T, RelationStmt>) {
            out += "relation " + join_path(s.lhs) + " = " + join_path(s.rhs);
          } else if constexpr (std::is_same_v<T, LoopStmt>) {
            out += "loop " + quote_if_needed(s.name) + " : " + quote_if_needed(s.vertex);
          } else if constexpr (std::is_same_v<T, SimplexStmt>) {
            out += "simplex " + std::to_string(s.level) + " " + quote_if_needed(s.name);
          } else if constexpr (std::is_same_v<T, TableStmt>) {
            out += std::string(s.faces ? "faces " : "degens ") + std::to_string(s.level) + " " +
                   quote_if_needed(s.name) + " =" + names(s.values);
          } else if constexpr (std::is_same_v<T, CellStmt>) {
            out += "cell " + std::to_string(s.level) + " " + quote_if_needed(s.name);
            if (s.level > 0) {
              out += " :";
              for (const auto& f : s.faces) {
                out += " ";
                if (f.degeneracies.empty()) {
                  out += quote_if_needed(f.target);
                } else {
                  for (int j : f.degeneracies) out += "s" + std::to_string(j);
                  out += "(" + quote_if_needed(f.target) + ")";
                }
              }
            }
          } else if constexpr (std::is_same_v<T, IndexStmt>) {
            out += "index " + quote_if_needed(s.path);
          } else if constexpr (std::is_same_v<T, ValueStmt>) {
            out += "value " + quote_if_needed(s.object) + " " + quote_if_needed(s.path);
          } else if constexpr (std::is_same_v<T, MapStmt>) {
            out += std::string(s.objects ? "objmap " : "mormap ") + quote_if_needed(s.arrow) + " " +
                   quote_if_needed(s.from) + " -> " + quote_if_needed(s.to);
          } else if constexpr (std::is_same_v<T, MarkStmt>) {
            out += "mark" + names(s.names);
          }
        },
        st);
    out += "\n";
  }
  return out + "end\n";
}

}  // namespace hocat
