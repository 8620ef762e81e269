#include "kanrew/tabulate.hpp"

#include <deque>
#include <stdexcept>

#include "kanrew/rewrite.hpp"

namespace kanrew {

std::size_t KanTables::act(std::size_t i, ArrowId b) const {
  const auto& table = action_.at(b.value());
  auto it = table.find(i);
  if (it == table.end()) throw std::out_of_range("arrow does not act on this term");
  return it->second;
}

std::optional<std::size_t> KanTables::find(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

class TableBuilder {
 public:
  TableBuilder(const KanPresentation& p, const RewriteSystem& rules, std::size_t limit)
      : p_(p), rules_(rules), limit_(limit) {
    t_.by_object_.resize(p.codomain().object_count());
    t_.action_.resize(p.codomain().arrow_count());
  }

  EnumerationOutcome run() {
    for (std::uint32_t i = 0; i < p_.element_count(); ++i) {
      ElementId x{i};
      auto idx = insert(normal_form(p_.identity_term(x), rules_));
      if (!idx) return EnumerationExceeded{limit_, rules_};
      t_.epsilon_.push_back(*idx);
    }
    for (std::size_t next = 0; next < t_.terms_.size(); ++next) {
      ObjectId at = t_.terms_[next].target();
      for (ArrowId b : p_.codomain().arrows_from(at)) {
        Term image = normal_form(kanrew::act(t_.terms_[next], Path(at, p_.codomain().target(b), {b})), rules_);
        auto idx = insert(std::move(image));
        if (!idx) return EnumerationExceeded{limit_, rules_};
        t_.action_[b.value()].emplace(next, *idx);
      }
    }
    return std::move(t_);
  }

 private:
  std::optional<std::size_t> insert(Term t) {
    if (auto it = t_.index_.find(t); it != t_.index_.end()) return it->second;
    if (t_.terms_.size() == limit_) return std::nullopt;
    std::size_t idx = t_.terms_.size();
    t_.by_object_[t.target().value()].push_back(idx);
    t_.index_.emplace(t, idx);
    t_.terms_.push_back(std::move(t));
    return idx;
  }

  const KanPresentation& p_;
  const RewriteSystem& rules_;
  std::size_t limit_;
  KanTables t_;
};

EnumerationOutcome tabulate(const KanPresentation& p, const RewriteSystem& complete_rules,
                            std::size_t limit) {
  return TableBuilder(p, complete_rules, limit).run();
}

Term epsilon(ElementId x, const KanPresentation& p, const RewriteSystem& complete_rules) {
  if (x.value() >= p.element_count()) {
    throw ValidationError("unknown element index " + std::to_string(x.value()));
  }
  return normal_form(p.identity_term(x), complete_rules);
}

bool naturality_check(const KanPresentation& p, const RewriteSystem& complete_rules,
                      const KanTables& tables) {
  const auto& dom = p.domain();
  for (std::uint32_t i = 0; i < dom.arrow_count(); ++i) {
    DomainArrowId a{i};
    for (ElementId x : p.elements_of(dom.source(a))) {
      auto start = tables.find(epsilon(x, p, complete_rules));
      if (!start || *start != tables.epsilon(x)) return false;
      std::size_t at = *start;
      for (ArrowId b : p.arrow_image(a).arrows()) at = tables.act(at, b);
      if (at != tables.epsilon(p.apply_generator_action(x, a))) return false;
    }
  }
  return true;
}

std::vector<Term> irreducible_terms(const KanPresentation& p, const RewriteSystem& rules,
                                    std::size_t max_length) {
  std::vector<Term> out;
  for (std::uint32_t i = 0; i < p.element_count(); ++i) {
    Term t = p.identity_term(ElementId{i});
    if (is_irreducible(t, rules)) out.push_back(std::move(t));
  }
  for (std::size_t next = 0; next < out.size(); ++next) {
    if (out[next].path.size() == max_length) continue;
    ObjectId at = out[next].target();
    for (ArrowId b : p.codomain().arrows_from(at)) {
      Term t = kanrew::act(out[next], Path(at, p.codomain().target(b), {b}));
      if (is_irreducible(t, rules)) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace kanrew
