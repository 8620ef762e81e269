#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kanrew/presentation.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

enum class Ordering { less, equal, greater };

/// Ranks for the length-lexicographic orderings on paths and terms. Lower
/// rank means smaller.
class OrderConfig {
 public:
  OrderConfig() = default;

  /// Arrows and elements ranked in the order the presentation declares them.
  static OrderConfig declaration_order(const KanPresentation& p);

  /// Replace the arrow ranking; `names` must list every codomain arrow
  /// exactly once, smallest first. Throws ValidationError otherwise.
  OrderConfig with_arrow_order(const KanPresentation& p,
                               std::span<const std::string> names) const;
  /// Same for elements.
  OrderConfig with_element_order(const KanPresentation& p,
                                 std::span<const std::string> names) const;

  std::uint32_t rank(ArrowId a) const { return arrow_rank_.at(a.value()); }
  std::uint32_t rank(ElementId x) const { return element_rank_.at(x.value()); }

  friend bool operator==(const OrderConfig&, const OrderConfig&) = default;

 private:
  std::vector<std::uint32_t> arrow_rank_;
  std::vector<std::uint32_t> element_rank_;
};

/// Length first, then arrow ranks left to right. Identity paths at
/// different objects are ordered by object index.
Ordering compare_paths(const Path& p, const Path& q, const OrderConfig& cfg);

/// Paths first, then element rank. Equal exactly when the terms are.
Ordering compare_terms(const Term& s, const Term& t, const OrderConfig& cfg);

/// Orient an equation between two terms with the same target as a rule
/// from the greater side to the lesser one; nullopt when the sides are
/// equal. Throws std::invalid_argument if the targets differ.
std::optional<TermRule> orient(const Term& a, const Term& b, const OrderConfig& cfg);

/// Same for two parallel paths.
std::optional<PathRule> orient(const Path& a, const Path& b, const OrderConfig& cfg);

}  // namespace kanrew
