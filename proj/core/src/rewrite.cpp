#include "kanrew/rewrite.hpp"

#include <string>

namespace kanrew {

RewriteSystem initial_rules(const KanPresentation& p, const OrderConfig& cfg) {
  RewriteSystem out;
  const auto& dom = p.domain();
  for (std::uint32_t i = 0; i < dom.arrow_count(); ++i) {
    DomainArrowId a{i};
    const Path& image = p.arrow_image(a);
    ObjectId at = p.object_image(dom.target(a));
    for (ElementId x : p.elements_of(dom.source(a))) {
      Term lhs{x, image};
      Term rhs{p.apply_generator_action(x, a), Path::identity(at)};
      if (auto rule = orient(lhs, rhs, cfg)) out.term_rules.push_back(std::move(*rule));
    }
  }
  for (const auto& rel : p.relations()) {
    if (auto rule = orient(rel.lhs, rel.rhs, cfg)) {
      out.path_rules.push_back(std::move(*rule));
    }
  }
  return out;
}

namespace {

std::optional<Term> apply_term_rules(const Term& t, std::span<const TermRule> rules,
                                     Strategy strategy) {
  auto try_rule = [&](const TermRule& r) -> std::optional<Term> {
    if (r.lhs.element != t.element || !t.path.starts_with(r.lhs.path)) return std::nullopt;
    return Term{r.rhs.element, compose_path(r.rhs.path, t.path.drop_prefix(r.lhs.path))};
  };
  if (strategy == Strategy::leftmost) {
    for (const auto& r : rules) {
      if (auto out = try_rule(r)) return out;
    }
  } else {
    for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
      if (auto out = try_rule(*it)) return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path> reduce_path_once(const Path& w, std::span<const PathRule> rules,
                                     Strategy strategy) {
  if (strategy == Strategy::leftmost) {
    for (const auto& r : rules) {
      if (auto pos = w.find(r.lhs)) return w.replace(*pos, r.lhs, r.rhs);
    }
  } else {
    for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
      if (auto pos = w.rfind(it->lhs)) return w.replace(*pos, it->lhs, it->rhs);
    }
  }
  return std::nullopt;
}

std::optional<Term> reduce_once(const Term& t, const RewriteSystem& rules,
                                Strategy strategy) {
  auto by_path = [&]() -> std::optional<Term> {
    if (auto w = reduce_path_once(t.path, rules.path_rules, strategy)) {
      return Term{t.element, std::move(*w)};
    }
    return std::nullopt;
  };
  if (strategy == Strategy::leftmost) {
    if (auto out = apply_term_rules(t, rules.term_rules, strategy)) return out;
    return by_path();
  }
  if (auto out = by_path()) return out;
  return apply_term_rules(t, rules.term_rules, strategy);
}

Term normal_form(const Term& t, const RewriteSystem& rules, Strategy strategy,
                 std::size_t step_limit) {
  Term current = t;
  for (std::size_t steps = 0;; ++steps) {
    auto next = reduce_once(current, rules, strategy);
    if (!next) return current;
    if (steps == step_limit) {
      throw ReductionLimitError("normal form not reached after " +
                                std::to_string(step_limit) + " steps");
    }
    current = std::move(*next);
  }
}

Path path_normal_form(const Path& w, std::span<const PathRule> rules, Strategy strategy,
                      std::size_t step_limit) {
  Path current = w;
  for (std::size_t steps = 0;; ++steps) {
    auto next = reduce_path_once(current, rules, strategy);
    if (!next) return current;
    if (steps == step_limit) {
      throw ReductionLimitError("path normal form not reached after " +
                                std::to_string(step_limit) + " steps");
    }
    current = std::move(*next);
  }
}

std::vector<Term> reduction_trace(const Term& t, const RewriteSystem& rules,
                                  Strategy strategy, std::size_t step_limit) {
  std::vector<Term> trace{t};
  while (auto next = reduce_once(trace.back(), rules, strategy)) {
    if (trace.size() > step_limit) {
      throw ReductionLimitError("normal form not reached after " +
                                std::to_string(step_limit) + " steps");
    }
    trace.push_back(std::move(*next));
  }
  return trace;
}

bool equivalent(const Term& s, const Term& t, const RewriteSystem& rules) {
  return normal_form(s, rules) == normal_form(t, rules);
}

void check_oriented(const RewriteSystem& rules, const OrderConfig& cfg) {
  for (std::size_t i = 0; i < rules.term_rules.size(); ++i) {
    const auto& r = rules.term_rules[i];
    if (r.lhs.target() != r.rhs.target()) {
      throw ValidationError("term rule " + std::to_string(i) +
                            " relates terms with different targets");
    }
    if (compare_terms(r.lhs, r.rhs, cfg) != Ordering::greater) {
      throw ValidationError("term rule " + std::to_string(i) + " is not decreasing");
    }
  }
  for (std::size_t i = 0; i < rules.path_rules.size(); ++i) {
    const auto& r = rules.path_rules[i];
    if (r.lhs.source() != r.rhs.source() || r.lhs.target() != r.rhs.target()) {
      throw ValidationError("path rule " + std::to_string(i) + " is not parallel");
    }
    if (r.lhs.empty() || compare_paths(r.lhs, r.rhs, cfg) != Ordering::greater) {
      throw ValidationError("path rule " + std::to_string(i) + " is not decreasing");
    }
  }
}

}  // namespace kanrew
