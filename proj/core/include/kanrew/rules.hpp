#pragma once

#include <cstddef>
#include <vector>

#include "kanrew/presentation.hpp"

namespace kanrew {

/// Rewrites any term having `lhs` as a prefix: lhs.q -> rhs.q.
struct TermRule {
  Term lhs;
  Term rhs;
  friend bool operator==(const TermRule&, const TermRule&) = default;
};

/// Rewrites a factor of a term's path: x|u.lhs.v -> x|u.rhs.v.
struct PathRule {
  Path lhs;
  Path rhs;
  friend bool operator==(const PathRule&, const PathRule&) = default;
};

/// Term rules and path rules, both kept in insertion order.
struct RewriteSystem {
  std::vector<TermRule> term_rules;
  std::vector<PathRule> path_rules;

  std::size_t size() const noexcept { return term_rules.size() + path_rules.size(); }
  bool empty() const noexcept { return term_rules.empty() && path_rules.empty(); }

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;
};

}  // namespace kanrew
