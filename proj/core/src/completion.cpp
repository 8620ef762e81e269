#include "kanrew/completion.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "kanrew/rewrite.hpp"

namespace kanrew {

std::string_view roman(OverlapKind kind) {
  switch (kind) {
    case OverlapKind::term_prefix: return "i";
    case OverlapKind::path_factor: return "ii";
    case OverlapKind::path_overlap: return "iii";
    case OverlapKind::term_path_overlap: return "iv";
    case OverlapKind::path_in_term: return "v";
  }
  return "?";
}

namespace {

// Does the length-k suffix of `a` equal the length-k prefix of `b`?
bool suffix_matches_prefix(std::span<const ArrowId> a, std::span<const ArrowId> b,
                           std::size_t k) {
  return std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin());
}

std::vector<ArrowId> slice(std::span<const ArrowId> a, std::size_t from, std::size_t to) {
  return {a.begin() + static_cast<std::ptrdiff_t>(from),
          a.begin() + static_cast<std::ptrdiff_t>(to)};
}

// Overlaps in which at least one rule sits at or beyond the given indices
// of its family. (0, 0) yields every overlap.
std::vector<Overlap> find_overlaps_since(const RewriteSystem& rules, std::size_t term_from,
                                         std::size_t path_from) {
  const auto& trs = rules.term_rules;
  const auto& prs = rules.path_rules;
  std::vector<Overlap> out;

  for (std::size_t i = 0; i < trs.size(); ++i) {
    for (std::size_t j = 0; j < trs.size(); ++j) {
      if (i < term_from && j < term_from) continue;
      const Term& s1 = trs[i].lhs;
      const Term& s2 = trs[j].lhs;
      if (s1.element == s2.element && s2.path.starts_with(s1.path)) {
        out.push_back({OverlapKind::term_prefix, i, j, s1.path.size()});
      }
    }
  }

  for (std::size_t i = 0; i < prs.size(); ++i) {
    for (std::size_t j = 0; j < prs.size(); ++j) {
      if (i < path_from && j < path_from) continue;
      auto l1 = prs[i].lhs.arrows();
      auto l2 = prs[j].lhs.arrows();
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(pos))) {
          out.push_back({OverlapKind::path_factor, i, j, pos});
        }
      }
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (suffix_matches_prefix(l1, l2, k)) {
          out.push_back({OverlapKind::path_overlap, i, j, k});
        }
      }
    }
  }

  for (std::size_t i = 0; i < trs.size(); ++i) {
    for (std::size_t j = 0; j < prs.size(); ++j) {
      if (i < term_from && j < path_from) continue;
      auto w = trs[i].lhs.path.arrows();
      auto l = prs[j].lhs.arrows();
      for (std::size_t k = 1; k <= w.size() && k < l.size(); ++k) {
        if (suffix_matches_prefix(w, l, k)) {
          out.push_back({OverlapKind::term_path_overlap, i, j, k});
        }
      }
      for (std::size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
        if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          out.push_back({OverlapKind::path_in_term, i, j, pos});
        }
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct TermRuleHash {
  std::size_t operator()(const TermRule& r) const noexcept {
    return detail::hash_combine(std::hash<Term>{}(r.lhs), std::hash<Term>{}(r.rhs));
  }
};

struct PathRuleHash {
  std::size_t operator()(const PathRule& r) const noexcept {
    return detail::hash_combine(std::hash<Path>{}(r.lhs), std::hash<Path>{}(r.rhs));
  }
};

bool term_reducible_without(const Term& t, const RewriteSystem& rules,
                            const std::vector<bool>& term_alive, std::size_t skip) {
  for (std::size_t j = 0; j < rules.term_rules.size(); ++j) {
    if (j == skip || !term_alive[j]) continue;
    const Term& s = rules.term_rules[j].lhs;
    if (s.element == t.element && t.path.starts_with(s.path)) return true;
  }
  return false;
}

bool path_reducible_without(const Path& w, const RewriteSystem& rules,
                            const std::vector<bool>& path_alive, std::size_t skip) {
  for (std::size_t j = 0; j < rules.path_rules.size(); ++j) {
    if (j == skip || !path_alive[j]) continue;
    if (w.find(rules.path_rules[j].lhs)) return true;
  }
  return false;
}

}  // namespace

std::vector<Overlap> find_overlaps(const RewriteSystem& rules) {
  return find_overlaps_since(rules, 0, 0);
}

CriticalPair critical_pair(const Overlap& ov, const RewriteSystem& rules) {
  switch (ov.kind) {
    case OverlapKind::term_prefix: {
      const auto& r1 = rules.term_rules.at(ov.first);
      const auto& r2 = rules.term_rules.at(ov.second);
      Path q = r2.lhs.path.drop_prefix(r1.lhs.path);
      return TermPair{act(r1.rhs, q), r2.rhs};
    }
    case OverlapKind::path_factor: {
      const auto& r1 = rules.path_rules.at(ov.first);
      const auto& r2 = rules.path_rules.at(ov.second);
      return PathPair{r1.rhs, r1.lhs.replace(ov.position, r2.lhs, r2.rhs)};
    }
    case OverlapKind::path_overlap: {
      const auto& r1 = rules.path_rules.at(ov.first);
      const auto& r2 = rules.path_rules.at(ov.second);
      auto l1 = r1.lhs.arrows();
      auto l2 = r2.lhs.arrows();
      Path p(r1.lhs.source(), r2.lhs.source(), slice(l1, 0, l1.size() - ov.position));
      Path q(r1.lhs.target(), r2.lhs.target(), slice(l2, ov.position, l2.size()));
      return PathPair{compose_path(r1.rhs, q), compose_path(p, r2.rhs)};
    }
    case OverlapKind::term_path_overlap: {
      const auto& r1 = rules.term_rules.at(ov.first);
      const auto& r2 = rules.path_rules.at(ov.second);
      auto w = r1.lhs.path.arrows();
      auto l = r2.lhs.arrows();
      Path s(r1.lhs.path.source(), r2.lhs.source(), slice(w, 0, w.size() - ov.position));
      Path q(r1.lhs.target(), r2.lhs.target(), slice(l, ov.position, l.size()));
      return TermPair{act(r1.rhs, q), Term{r1.lhs.element, compose_path(s, r2.rhs)}};
    }
    case OverlapKind::path_in_term: {
      const auto& r1 = rules.term_rules.at(ov.first);
      const auto& r2 = rules.path_rules.at(ov.second);
      return TermPair{r1.rhs,
                      Term{r1.lhs.element, r1.lhs.path.replace(ov.position, r2.lhs, r2.rhs)}};
    }
  }
  assert(false);
  return TermPair{};
}

std::optional<Resolution> resolves(const CriticalPair& pair, const RewriteSystem& rules) {
  if (const auto* tp = std::get_if<TermPair>(&pair)) {
    Term a = normal_form(tp->left, rules);
    if (a == normal_form(tp->right, rules)) return Resolution{std::move(a)};
    return std::nullopt;
  }
  const auto& pp = std::get<PathPair>(pair);
  Path a = path_normal_form(pp.left, rules.path_rules);
  if (a == path_normal_form(pp.right, rules.path_rules)) return Resolution{std::move(a)};
  return std::nullopt;
}

bool is_locally_confluent(const RewriteSystem& rules) {
  auto overlaps = find_overlaps(rules);
  return std::all_of(overlaps.begin(), overlaps.end(), [&](const Overlap& ov) {
    return resolves(critical_pair(ov, rules), rules).has_value();
  });
}

CompletionResult complete(RewriteSystem initial, const OrderConfig& cfg,
                          const CompletionLimits& limits, const ProgressHook& progress) {
  CompletionResult result;
  RewriteSystem& rules = result.system;
  rules = std::move(initial);

  std::size_t term_from = 0;
  std::size_t path_from = 0;
  while (true) {
    if (result.passes == limits.max_passes) {
      result.status = CompletionStatus::limit_exceeded;
      return result;
    }
    ++result.passes;

    auto overlaps = find_overlaps_since(rules, term_from, path_from);
    term_from = rules.term_rules.size();
    path_from = rules.path_rules.size();

    std::vector<TermRule> new_terms;
    std::vector<PathRule> new_paths;
    std::unordered_set<TermRule, TermRuleHash> seen_terms;
    std::unordered_set<PathRule, PathRuleHash> seen_paths;
    for (const auto& ov : overlaps) {
      auto pair = critical_pair(ov, rules);
      if (auto* tp = std::get_if<TermPair>(&pair)) {
        auto rule = orient(normal_form(tp->left, rules), normal_form(tp->right, rules), cfg);
        if (rule && seen_terms.insert(*rule).second) new_terms.push_back(std::move(*rule));
      } else {
        auto& pp = std::get<PathPair>(pair);
        auto rule = orient(path_normal_form(pp.left, rules.path_rules),
                           path_normal_form(pp.right, rules.path_rules), cfg);
        if (rule && seen_paths.insert(*rule).second) new_paths.push_back(std::move(*rule));
      }
    }

    std::size_t added = new_terms.size() + new_paths.size();
    std::move(new_terms.begin(), new_terms.end(), std::back_inserter(rules.term_rules));
    std::move(new_paths.begin(), new_paths.end(), std::back_inserter(rules.path_rules));
    result.added += added;
    if (progress) progress(result.passes, rules.size());

    if (added == 0) {
      rules = interreduce(rules, cfg);
      result.status = CompletionStatus::completed;
      return result;
    }
    if (rules.size() > limits.max_rules) {
      result.status = CompletionStatus::limit_exceeded;
      return result;
    }
  }
}

RewriteSystem interreduce(const RewriteSystem& rules, const OrderConfig& cfg) {
  std::vector<bool> term_alive(rules.term_rules.size(), true);
  std::vector<bool> path_alive(rules.path_rules.size(), true);
  for (std::size_t i = 0; i < rules.path_rules.size(); ++i) {
    if (path_reducible_without(rules.path_rules[i].lhs, rules, path_alive, i)) {
      path_alive[i] = false;
    }
  }
  for (std::size_t i = 0; i < rules.term_rules.size(); ++i) {
    const Term& lhs = rules.term_rules[i].lhs;
    if (term_reducible_without(lhs, rules, term_alive, i) ||
        path_reducible_without(lhs.path, rules, path_alive, rules.path_rules.size())) {
      term_alive[i] = false;
    }
  }

  RewriteSystem kept;
  for (std::size_t i = 0; i < rules.path_rules.size(); ++i) {
    if (path_alive[i]) kept.path_rules.push_back(rules.path_rules[i]);
  }
  for (std::size_t i = 0; i < rules.term_rules.size(); ++i) {
    if (term_alive[i]) kept.term_rules.push_back(rules.term_rules[i]);
  }

  RewriteSystem out = kept;
  for (auto& r : out.path_rules) r.rhs = path_normal_form(r.rhs, kept.path_rules);
  for (auto& r : out.term_rules) r.rhs = normal_form(r.rhs, kept);
  sort_rules(out, cfg);
  return out;
}

void sort_rules(RewriteSystem& rules, const OrderConfig& cfg) {
  auto term_less = [&](const TermRule& a, const TermRule& b) {
    if (a.lhs.element != b.lhs.element) return cfg.rank(a.lhs.element) < cfg.rank(b.lhs.element);
    auto c = compare_paths(a.lhs.path, b.lhs.path, cfg);
    if (c != Ordering::equal) return c == Ordering::less;
    return compare_terms(a.rhs, b.rhs, cfg) == Ordering::less;
  };
  auto path_less = [&](const PathRule& a, const PathRule& b) {
    auto c = compare_paths(a.lhs, b.lhs, cfg);
    if (c != Ordering::equal) return c == Ordering::less;
    return compare_paths(a.rhs, b.rhs, cfg) == Ordering::less;
  };
  std::stable_sort(rules.term_rules.begin(), rules.term_rules.end(), term_less);
  std::stable_sort(rules.path_rules.begin(), rules.path_rules.end(), path_less);
}

}  // namespace kanrew
