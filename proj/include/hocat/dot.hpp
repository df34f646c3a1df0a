#pragma once

#include <string>

#include "hocat/fincat.hpp"
#include "hocat/localize.hpp"
#include "hocat/sset.hpp"

namespace hocat {

/// Objects as nodes, indecomposable non-identity morphisms as edges.
/// Invertible morphisms are drawn dashed and paired.
std::string dot_export(const FinCat& c, const std::string& name = "C");
/// As above with marked morphisms drawn bold.
std::string dot_export(const MarkedCat& m, const std::string& name = "C");
/// Vertices as nodes, nondegenerate 1-simplices as edges.
std::string dot_export(const TruncSSet& x, const std::string& name = "X");
/// Vertices as nodes, edges as arrows; distinguished loops drawn dotted.
std::string dot_export(const Quiver& q, const std::string& name = "Q");
/// A chain of nodes; backward legs are drawn reversed and dashed.
std::string dot_export(const Zigzag& z, const MarkedCat& m, const std::string& name = "Z");

}  // namespace hocat
