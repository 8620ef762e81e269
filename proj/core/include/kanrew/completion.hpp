#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "kanrew/ordering.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

/// The five ways two rules can rewrite a common part of one term.
///
///   term_prefix        (i)   s2 = s1.q                  pair (u1.q, u2)
///   path_factor        (ii)  l1 = p.l2.q                pair (r1, p.r2.q)
///   path_overlap       (iii) l1.q = p.l2, shared part nonempty, p and q
///                            nonempty                   pair (r1.q, p.r2)
///   term_path_overlap  (iv)  s1.q = s.l1, shared part nonempty, q
///                            nonempty                   pair (u1.q, s.r1)
///   path_in_term       (v)   s1 = s.(l1.q)              pair (u1, s.r1.q)
///
/// For (i) both indices refer to term rules, for (ii) and (iii) to path
/// rules, for (iv) and (v) `first` is a term rule and `second` a path rule
/// (called s1/u1 and l1/r1 above).
enum class OverlapKind { term_prefix, path_factor, path_overlap, term_path_overlap, path_in_term };

std::string_view roman(OverlapKind kind);

struct Overlap {
  OverlapKind kind;
  std::size_t first;
  std::size_t second;
  /// (i): length of path(s1). (ii): offset of l2 in l1. (iii), (iv):
  /// length of the shared part. (v): offset of l1 in path(s1).
  std::size_t position;

  friend auto operator<=>(const Overlap&, const Overlap&) = default;
};

struct TermPair {
  Term left;
  Term right;
  friend bool operator==(const TermPair&, const TermPair&) = default;
};

struct PathPair {
  Path left;
  Path right;
  friend bool operator==(const PathPair&, const PathPair&) = default;
};

using CriticalPair = std::variant<TermPair, PathPair>;
/// Common reduct of both sides of a resolved critical pair.
using Resolution = std::variant<Term, Path>;

/// All overlaps between rules of `rules`, self-overlaps included, sorted
/// by kind, then rule indices, then position.
std::vector<Overlap> find_overlaps(const RewriteSystem& rules);

/// The two single-step reducts of the overlap's critical term.
CriticalPair critical_pair(const Overlap& overlap, const RewriteSystem& rules);

/// Normal forms of both sides when they agree, nullopt otherwise.
std::optional<Resolution> resolves(const CriticalPair& pair, const RewriteSystem& rules);

/// True when every overlap of `rules` resolves.
bool is_locally_confluent(const RewriteSystem& rules);

enum class CompletionStatus { completed, limit_exceeded };

struct CompletionLimits {
  std::size_t max_rules = 10'000;
  std::size_t max_passes = 100;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::completed;
  RewriteSystem system;
  std::size_t passes = 0;
  std::size_t added = 0;
};

/// Called after each pass with the pass number and current rule count.
using ProgressHook = std::function<void(std::size_t pass, std::size_t rules)>;

/// Knuth-Bendix style completion on terms and paths.
///
/// Each pass examines the overlaps involving at least one rule added by
/// the previous pass (all overlaps on the first pass) against the rule
/// list as it stood when the pass began. Every critical pair whose sides
/// have different normal forms contributes the oriented pair of normal
/// forms as a new rule. New rules become visible on the next pass. A
/// pass that adds nothing ends completion, and the result is then
/// interreduced and sorted. Hitting a limit returns the partial system
/// as it stands, which still generates the same congruence.
CompletionResult complete(RewriteSystem initial, const OrderConfig& cfg,
                          const CompletionLimits& limits = {},
                          const ProgressHook& progress = {});

/// Drop rules whose left side is reducible by the remaining rules, then
/// normalize every right side, then sort. Preserves normal forms of a
/// complete system.
RewriteSystem interreduce(const RewriteSystem& rules, const OrderConfig& cfg);

/// Term rules by (element rank, path), then path rules by left side.
void sort_rules(RewriteSystem& rules, const OrderConfig& cfg);

}  // namespace kanrew
