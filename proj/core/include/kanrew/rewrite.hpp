#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kanrew/ordering.hpp"
#include "kanrew/presentation.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

inline constexpr std::size_t kDefaultStepLimit = 1'000'000;

/// Which redex reduce_once picks when several rules apply.
///
/// leftmost:  term rules before path rules; within a family the first rule
///            in insertion order, at its leftmost occurrence.
/// rightmost: path rules before term rules; within a family the last rule,
///            at its rightmost occurrence.
///
/// leftmost is the canonical strategy. rightmost exists so tests can
/// check that complete systems have strategy-independent normal forms.
enum class Strategy { leftmost, rightmost };

/// One ε-rule x|F(a) -> (x.a)|id per domain arrow a and element x of the
/// arrow's source set, plus one path rule per relation, all oriented by
/// `cfg`. Trivial equations are dropped.
RewriteSystem initial_rules(const KanPresentation& p, const OrderConfig& cfg);

std::optional<Term> reduce_once(const Term& t, const RewriteSystem& rules,
                                Strategy strategy = Strategy::leftmost);

std::optional<Path> reduce_path_once(const Path& w, std::span<const PathRule> rules,
                                     Strategy strategy = Strategy::leftmost);

/// Iterates reduce_once to a fixed point. Throws ReductionLimitError after
/// `step_limit` steps.
Term normal_form(const Term& t, const RewriteSystem& rules,
                 Strategy strategy = Strategy::leftmost,
                 std::size_t step_limit = kDefaultStepLimit);

Path path_normal_form(const Path& w, std::span<const PathRule> rules,
                      Strategy strategy = Strategy::leftmost,
                      std::size_t step_limit = kDefaultStepLimit);

/// Every term visited on the way to the normal form, starting with `t`.
std::vector<Term> reduction_trace(const Term& t, const RewriteSystem& rules,
                                  Strategy strategy = Strategy::leftmost,
                                  std::size_t step_limit = kDefaultStepLimit);

inline bool is_irreducible(const Term& t, const RewriteSystem& rules) {
  return !reduce_once(t, rules).has_value();
}

/// Equality of normal forms; decides the congruence only when `rules` is
/// complete.
bool equivalent(const Term& s, const Term& t, const RewriteSystem& rules);

/// Throws ValidationError unless every rule is well-typed and strictly
/// decreasing under `cfg`.
void check_oriented(const RewriteSystem& rules, const OrderConfig& cfg);

}  // namespace kanrew
