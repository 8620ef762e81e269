#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kanrew/presentation.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

inline constexpr std::size_t kDefaultEnumerationLimit = 1000;

/// The finite answer: the sets K(B) as irreducible terms, the action of
/// every codomain arrow, and the map ε. Terms are addressed by their
/// index in terms(), which is breadth-first discovery order.
class KanTables {
 public:
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& term(std::size_t i) const { return terms_.at(i); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Indices of the terms with target B.
  std::span<const std::size_t> elements_of(ObjectId b) const { return by_object_.at(b.value()); }
  ObjectId tau(std::size_t i) const { return terms_.at(i).target(); }

  /// Image of term i under arrow b. Throws std::out_of_range unless
  /// tau(i) is the source of b.
  std::size_t act(std::size_t i, ArrowId b) const;
  std::size_t epsilon(ElementId x) const { return epsilon_.at(x.value()); }
  std::optional<std::size_t> find(const Term& t) const;

 private:
  friend class TableBuilder;

  std::vector<Term> terms_;
  std::vector<std::vector<std::size_t>> by_object_;
  // action_[b][i] for every term index i with target src(b)
  std::vector<std::unordered_map<std::size_t, std::size_t>> action_;
  std::vector<std::size_t> epsilon_;
  std::unordered_map<Term, std::size_t> index_;
};

/// Returned instead of tables once more than `limit` terms were found.
/// Carries the complete system so callers can describe the sets some
/// other way.
struct EnumerationExceeded {
  std::size_t limit;
  RewriteSystem system;
};

using EnumerationOutcome = std::variant<KanTables, EnumerationExceeded>;

/// Breadth-first closure of the normal forms of x|id under the action of
/// codomain arrows. `complete_rules` must be complete.
EnumerationOutcome tabulate(const KanPresentation& p, const RewriteSystem& complete_rules,
                            std::size_t limit = kDefaultEnumerationLimit);

/// Normal form of x|id. Throws ValidationError for an unknown element.
Term epsilon(ElementId x, const KanPresentation& p, const RewriteSystem& complete_rules);

/// Checks that ε is natural on generators: acting on ε(x) along the
/// image path of a gives ε(x.a).
bool naturality_check(const KanPresentation& p, const RewriteSystem& complete_rules,
                      const KanTables& tables);

/// Every irreducible term whose path has at most `max_length` arrows, in
/// breadth-first order. Relies on irreducibility being prefix-closed.
std::vector<Term> irreducible_terms(const KanPresentation& p, const RewriteSystem& rules,
                                    std::size_t max_length);

}  // namespace kanrew
