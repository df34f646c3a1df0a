#pragma once

#include <string>

#include "hocat/dsl.hpp"
#include "hocat/fincat.hpp"
#include "hocat/localize.hpp"
#include "hocat/realize.hpp"
#include "hocat/sset.hpp"

namespace hocat {

/// Loads a category document as a presentation.  `id_x` in a relation is
/// the empty path at x unless an arrow carries that name.
PresCat load_prescat(const Document& doc);

/// Loads a category document as a finite category.  When the relations give
/// a composite for every composable pair of arrows they are read as a
/// composition table (validated for associativity and units); otherwise the
/// presentation is materialized and must be certified finite.
FinCat load_fincat(const Document& doc, std::size_t budget = kDefaultBudget);

Quiver load_quiver(const Document& doc);
TruncSSet load_sset(const Document& doc);
MarkedCat load_marked(const Document& doc, std::size_t budget = kDefaultBudget);

/// Reads the files named by a diagram document relative to `base_dir`.
CatDiagram load_diagram(const Document& doc, const std::string& base_dir,
                        std::size_t budget = kDefaultBudget);

/// Full composition table; identities are written `id_<object>`.
Document store_fincat(const FinCat& c, const std::string& name);
Document store_prescat(const PresCat& p, const std::string& name);
Document store_quiver(const Quiver& q, const std::string& name);
Document store_sset(const TruncSSet& x, const std::string& name, bool nondeg);
Document store_marked(const MarkedCat& m, const std::string& name);

/// A document file could not be read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a file; throws FileError when it cannot be opened.
Document read_document(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace hocat
