#include "kanrew/ordering.hpp"

#include <stdexcept>
#include <unordered_set>

namespace kanrew {

namespace {

template <typename T>
Ordering compare_values(const T& a, const T& b) {
  if (a < b) return Ordering::less;
  if (b < a) return Ordering::greater;
  return Ordering::equal;
}

// Position i of the result is the rank of the i-th declared identifier.
template <typename Lookup>
std::vector<std::uint32_t> ranks_from_names(std::size_t count,
                                            std::span<const std::string> names,
                                            Lookup lookup, const char* what) {
  if (names.size() != count) {
    throw ValidationError(std::string(what) + " order lists " +
                          std::to_string(names.size()) + " identifiers but " +
                          std::to_string(count) + " are declared");
  }
  std::vector<std::uint32_t> ranks(count);
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t r = 0; r < names.size(); ++r) {
    auto id = lookup(names[r]);
    if (!id) {
      throw ValidationError(std::string(what) + " order names undeclared '" +
                            names[r] + "'");
    }
    if (!seen.insert(id->value()).second) {
      throw ValidationError(std::string(what) + " order repeats '" + names[r] + "'");
    }
    ranks[id->value()] = r;
  }
  return ranks;
}

}  // namespace

OrderConfig OrderConfig::declaration_order(const KanPresentation& p) {
  OrderConfig cfg;
  for (std::uint32_t i = 0; i < p.codomain().arrow_count(); ++i) {
    cfg.arrow_rank_.push_back(i);
  }
  for (std::uint32_t i = 0; i < p.element_count(); ++i) {
    cfg.element_rank_.push_back(i);
  }
  return cfg;
}

OrderConfig OrderConfig::with_arrow_order(const KanPresentation& p,
                                          std::span<const std::string> names) const {
  OrderConfig cfg = *this;
  cfg.arrow_rank_ = ranks_from_names(
      p.codomain().arrow_count(), names,
      [&](const std::string& n) { return p.codomain().find_arrow(n); }, "arrow");
  return cfg;
}

OrderConfig OrderConfig::with_element_order(const KanPresentation& p,
                                            std::span<const std::string> names) const {
  OrderConfig cfg = *this;
  cfg.element_rank_ = ranks_from_names(
      p.element_count(), names, [&](const std::string& n) { return p.find_element(n); },
      "element");
  return cfg;
}

Ordering compare_paths(const Path& p, const Path& q, const OrderConfig& cfg) {
  if (p.size() != q.size()) return compare_values(p.size(), q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) return compare_values(cfg.rank(p[i]), cfg.rank(q[i]));
  }
  return compare_values(p.source(), q.source());
}

Ordering compare_terms(const Term& s, const Term& t, const OrderConfig& cfg) {
  auto by_path = compare_paths(s.path, t.path, cfg);
  if (by_path != Ordering::equal) return by_path;
  if (s.element == t.element) return Ordering::equal;
  return compare_values(cfg.rank(s.element), cfg.rank(t.element));
}

std::optional<TermRule> orient(const Term& a, const Term& b, const OrderConfig& cfg) {
  if (a.target() != b.target()) {
    throw std::invalid_argument("cannot orient terms with different targets");
  }
  switch (compare_terms(a, b, cfg)) {
    case Ordering::greater: return TermRule{a, b};
    case Ordering::less: return TermRule{b, a};
    case Ordering::equal: break;
  }
  return std::nullopt;
}

std::optional<PathRule> orient(const Path& a, const Path& b, const OrderConfig& cfg) {
  if (a.source() != b.source() || a.target() != b.target()) {
    throw std::invalid_argument("cannot orient non-parallel paths");
  }
  switch (compare_paths(a, b, cfg)) {
    case Ordering::greater: return PathRule{a, b};
    case Ordering::less: return PathRule{b, a};
    case Ordering::equal: break;
  }
  return std::nullopt;
}

}  // namespace kanrew
