#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hocat/error.hpp"

namespace hocat {

/// 1-based position in the source text.  Locations never take part in AST
/// equality, so reprinted documents compare equal to their originals.
struct SourceLoc {
  int line = 0;
  int column = 0;
  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

/// Base of every frontend diagnostic; carries the offending location.
class FrontendError : public Error {
 public:
  FrontendError(const std::string& what, SourceLoc loc)
      : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what), loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

class ParseError : public FrontendError {
 public:
  ParseError(const std::string& what, SourceLoc loc, std::vector<std::string> expected)
      : FrontendError(what + expected_suffix(expected), loc), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string expected_suffix(const std::vector<std::string>& e) {
    if (e.empty()) return "";
    std::string s = " (expected ";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? " | " : "") + e[i];
    return s + ")";
  }
  std::vector<std::string> expected_;
};

class DuplicateId : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

class UnknownReference : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

enum class DocKind { Category, Quiver, SSet, Diagram, Marked };
std::string to_string(DocKind k);

// Statements.  Paths are written in composition order ("g.f" is f then g)
// and stored in that written order.

struct ObjectsStmt {
  SourceLoc loc;
  std::vector<std::string> names;
  friend bool operator==(const ObjectsStmt&, const ObjectsStmt&) = default;
};
/// `arrow f : a -> b` in categories, `edge f : a -> b` in quivers.
struct ArrowStmt {
  SourceLoc loc;
  std::string name, src, tgt;
  friend bool operator==(const ArrowStmt&, const ArrowStmt&) = default;
};
struct RelationStmt {
  SourceLoc loc;
  std::vector<std::string> lhs, rhs;
  friend bool operator==(const RelationStmt&, const RelationStmt&) = default;
};
/// `loop e : v` in reflexive quivers.
struct LoopStmt {
  SourceLoc loc;
  std::string name, vertex;
  friend bool operator==(const LoopStmt&, const LoopStmt&) = default;
};
/// Raw simplicial sets: `simplex n x`.
struct SimplexStmt {
  SourceLoc loc;
  int level = 0;
  std::string name;
  friend bool operator==(const SimplexStmt&, const SimplexStmt&) = default;
};
/// Raw: `faces n x = y0 .. yn` or `degens n x = z0 .. zn`.
struct TableStmt {
  SourceLoc loc;
  bool faces = true;
  int level = 0;
  std::string name;
  std::vector<std::string> values;
  friend bool operator==(const TableStmt&, const TableStmt&) = default;
};
/// Nondegenerate form face: degeneracy word applied to a simplex.
struct FaceTerm {
  std::vector<int> degeneracies;
  std::string target;
  friend bool operator==(const FaceTerm&, const FaceTerm&) = default;
};
/// Nondegenerate: `cell n x : face0 .. facen` (no faces for n = 0).
struct CellStmt {
  SourceLoc loc;
  int level = 0;
  std::string name;
  std::vector<FaceTerm> faces;
  friend bool operator==(const CellStmt&, const CellStmt&) = default;
};
/// Diagrams: `index "file"` and `value j "file"`.
struct IndexStmt {
  SourceLoc loc;
  std::string path;
  friend bool operator==(const IndexStmt&, const IndexStmt&) = default;
};
struct ValueStmt {
  SourceLoc loc;
  std::string object, path;
  friend bool operator==(const ValueStmt&, const ValueStmt&) = default;
};
/// `objmap u a -> b` / `mormap u f -> g`.
struct MapStmt {
  SourceLoc loc;
  bool objects = true;
  std::string arrow, from, to;
  friend bool operator==(const MapStmt&, const MapStmt&) = default;
};
struct MarkStmt {
  SourceLoc loc;
  std::vector<std::string> names;
  friend bool operator==(const MarkStmt&, const MarkStmt&) = default;
};

using Statement =
    std::variant<ObjectsStmt, ArrowStmt, RelationStmt, LoopStmt, SimplexStmt, TableStmt, CellStmt, IndexStmt,
                 ValueStmt, MapStmt, MarkStmt>;

struct Document {
  DocKind kind = DocKind::Category;
  std::string name;
  SourceLoc loc;
  /// Quivers: reflexive structure present.
  bool reflexive = false;
  /// Simplicial sets: truncation level and format.
  int dim = 0;
  bool nondeg = false;
  std::vector<Statement> body;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Parses exactly one document.  Throws ParseError, DuplicateId or
/// UnknownReference, each with a location.
Document parse(const std::string& text);
/// Canonical text; parse(print(d)) == d.
std::string print(const Document& d);

/// Quotes a name when it is not a bare identifier.
std::string quote_if_needed(const std::string& name);

}  // namespace hocat
