#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

/// One class of the (possibly partial) word-class table.
struct WordClass {
  VertexId src = 0;
  VertexId tgt = 0;
  /// Shortlex-least word known to lie in the class.
  Path representative;
};

/// Outcome of the bounded congruence closure.
///
/// `category` is present exactly when the closure produced a finiteness
/// certificate: a coset table in which every class has every composable
/// generator extension defined and every relation holds at every class.
/// Such a table is a model of the presentation, so distinct classes are
/// provably distinct morphisms.  Otherwise the table is partial and only
/// its identifications (never its separations) are meaningful.
struct MaterializeResult {
  std::optional<FinCat> category;
  std::vector<WordClass> classes;
  /// For a certified result: morphism id of each generator edge.
  std::vector<MorId> generator_morphism;
  std::size_t max_len = 0;

  bool finite() const { return category.has_value(); }
  /// Throws PossiblyInfinite when uncertified.
  const FinCat& require_finite() const;
  /// Composite of a path in the materialized category.
  MorId evaluate(const Path& p) const;
};

/// Default word-length bound: generators + longest relation side + 2.
std::size_t default_max_len(const PresCat& p);

/// Bounded congruence closure (coset enumeration over the right Cayley graph
/// of every vertex).  max_len = 0 selects default_max_len.  Throws
/// BudgetExceeded when more than `budget` table nodes are needed.
MaterializeResult materialize(const PresCat& p, std::size_t max_len = 0,
                              std::size_t budget = kDefaultBudget);

/// Replace an occurrence of one relation side by the other.
struct RewriteStep {
  std::size_t position = 0;   // index of the first replaced edge
  std::size_t relation = 0;   // index into PresCat::relations
  bool forward = true;        // lhs -> rhs when true
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct WordVerdict {
  enum class Kind { Equal, NotEqual, Unknown };
  Kind kind = Kind::Unknown;
  /// For Equal: rewrite steps taking w1 to w2.
  std::vector<RewriteStep> witness;
  /// For NotEqual: why the separation is sound.
  std::string certificate;
};

/// Applies one step; throws InvariantViolation if the step does not match.
Path apply_rewrite(const PresCat& p, const Path& w, const RewriteStep& step);
/// Applies all steps in order.
Path replay(const PresCat& p, const Path& w, const std::vector<RewriteStep>& steps);

/// Decides equality of two parallel words where it can do so soundly.
/// Equal always carries a replayable witness; NotEqual is issued only for
/// an empty relation set or under a finiteness certificate.
WordVerdict word_equal(const PresCat& p, const Path& w1, const Path& w2,
                       std::size_t budget = 200'000, std::size_t max_len = 0);

std::string to_string(WordVerdict::Kind k);

}  // namespace hocat
