#include "kanrew/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace kanrew {

// ---------------------------------------------------------------------------
// Path

Path::Path(ObjectId src, ObjectId tgt, std::vector<ArrowId> arrows)
    : src_(src), tgt_(tgt), arrows_(std::move(arrows)) {
  assert(!arrows_.empty() || src_ == tgt_);
}

Path Path::from_arrows(const CodomainGraph& graph,
                       std::span<const ArrowId> arrows) {
  if (arrows.empty()) {
    throw CompositionError("an identity path needs an explicit base object");
  }
  return from_arrows(graph, graph.source(arrows.front()), arrows);
}

Path Path::from_arrows(const CodomainGraph& graph, ObjectId base,
                       std::span<const ArrowId> arrows) {
  ObjectId at = base;
  for (auto a : arrows) {
    if (a.value() >= graph.arrow_count()) {
      throw CompositionError("unknown arrow index " + std::to_string(a.value()));
    }
    if (graph.source(a) != at) {
      throw CompositionError("non-composable path: arrow '" + graph.name(a) +
                             "' does not start at '" + graph.name(at) + "'");
    }
    at = graph.target(a);
  }
  return Path(base, at, {arrows.begin(), arrows.end()});
}

bool Path::starts_with(const Path& prefix) const {
  return prefix.src_ == src_ && prefix.size() <= size() &&
         std::equal(prefix.arrows_.begin(), prefix.arrows_.end(), arrows_.begin());
}

std::optional<std::size_t> Path::find(const Path& factor, std::size_t from) const {
  if (factor.empty() || from > size() || factor.size() > size() - from) return std::nullopt;
  auto it = std::search(arrows_.begin() + static_cast<std::ptrdiff_t>(from),
                        arrows_.end(), factor.arrows_.begin(), factor.arrows_.end());
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::optional<std::size_t> Path::rfind(const Path& factor) const {
  if (factor.empty() || factor.size() > size()) return std::nullopt;
  auto it = std::find_end(arrows_.begin(), arrows_.end(), factor.arrows_.begin(),
                          factor.arrows_.end());
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

Path Path::drop_prefix(const Path& prefix) const {
  assert(starts_with(prefix));
  return Path(prefix.tgt_, tgt_,
              {arrows_.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
               arrows_.end()});
}

Path Path::replace(std::size_t pos, const Path& lhs, const Path& rhs) const {
  assert(pos + lhs.size() <= size());
  assert(lhs.source() == rhs.source() && lhs.target() == rhs.target());
  std::vector<ArrowId> out;
  out.reserve(size() - lhs.size() + rhs.size());
  auto at = arrows_.begin() + static_cast<std::ptrdiff_t>(pos);
  out.insert(out.end(), arrows_.begin(), at);
  out.insert(out.end(), rhs.arrows_.begin(), rhs.arrows_.end());
  out.insert(out.end(), at + static_cast<std::ptrdiff_t>(lhs.size()), arrows_.end());
  return Path(src_, tgt_, std::move(out));
}

Path compose_path(const Path& p, const Path& q) {
  if (p.target() != q.source()) {
    throw CompositionError("non-composable paths: target object " +
                           std::to_string(p.target().value()) +
                           " differs from source object " +
                           std::to_string(q.source().value()));
  }
  std::vector<ArrowId> arrows(p.arrows().begin(), p.arrows().end());
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(p.source(), q.target(), std::move(arrows));
}

Term act(const Term& t, const Path& q) {
  return Term{t.element, compose_path(t.path, q)};
}

// ---------------------------------------------------------------------------
// KanPresentation

std::optional<ElementId> KanPresentation::find_element(std::string_view name) const {
  auto it = element_index_.find(std::string(name));
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

ElementId KanPresentation::apply_generator_action(ElementId x, DomainArrowId a) const {
  const auto& rec = elements_.at(x.value());
  if (rec.owner != domain_.source(a)) {
    throw ValidationError("element '" + rec.name + "' is not in the domain of '" +
                          domain_.name(a) + "'");
  }
  return action_.at(a.value()).at(rec.slot);
}

// ---------------------------------------------------------------------------
// Identifiers and literals

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || name == "id") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.' ||
           c == '|' || c == '+' || c == '*' || c == '(' || c == ')' || c == ',';
  });
}

namespace {

void require_identifier(std::string_view name, std::string_view what) {
  if (!is_valid_identifier(name)) {
    throw ValidationError("invalid " + std::string(what) + " identifier '" +
                          std::string(name) + "'");
  }
}

std::vector<std::string_view> split_dots(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    parts.push_back(text.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

}  // namespace

Path parse_path(const CodomainGraph& graph, std::string_view text) {
  if (text.starts_with("id_")) {
    if (auto obj = graph.find_object(text.substr(3))) return Path::identity(*obj);
  }
  if (text.empty()) throw ValidationError("empty path literal");
  std::vector<ArrowId> arrows;
  for (auto part : split_dots(text)) {
    auto a = graph.find_arrow(part);
    if (!a) {
      throw ValidationError("unknown arrow '" + std::string(part) + "' in path '" +
                            std::string(text) + "'");
    }
    arrows.push_back(*a);
  }
  try {
    return Path::from_arrows(graph, arrows);
  } catch (const CompositionError& e) {
    throw ValidationError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Term parse_term(const KanPresentation& p, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ValidationError("term literal '" + std::string(text) + "' lacks '|'");
  }
  auto x = p.find_element(text.substr(0, bar));
  if (!x) {
    throw ValidationError("unknown element '" + std::string(text.substr(0, bar)) + "'");
  }
  auto rest = text.substr(bar + 1);
  ObjectId base = p.object_image(p.owner(*x));
  if (rest == "id") return Term{*x, Path::identity(base)};
  Path path = parse_path(p.codomain(), rest);
  if (path.source() != base) {
    throw ValidationError("path '" + std::string(rest) + "' does not start at '" +
                          p.codomain().name(base) + "', the image of the owner of '" +
                          p.name(*x) + "'");
  }
  return Term{*x, std::move(path)};
}

std::string format_path(const CodomainGraph& graph, const Path& path) {
  if (path.empty()) return "id_" + graph.name(path.source());
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += graph.name(path[i]);
  }
  return out;
}

std::string format_term(const KanPresentation& p, const Term& t) {
  return p.name(t.element) + "|" + format_path(p.codomain(), t.path);
}

// ---------------------------------------------------------------------------
// PresentationBuilder

DomainObjectId PresentationBuilder::domain_object_id(std::string_view name) const {
  auto id = p_.domain_.find_object(name);
  if (!id) throw ValidationError("unknown domain object '" + std::string(name) + "'");
  return *id;
}

DomainArrowId PresentationBuilder::domain_arrow_id(std::string_view name) const {
  auto id = p_.domain_.find_arrow(name);
  if (!id) throw ValidationError("unknown domain arrow '" + std::string(name) + "'");
  return *id;
}

ElementId PresentationBuilder::element_id(std::string_view name) const {
  auto id = p_.find_element(name);
  if (!id) throw ValidationError("unknown element '" + std::string(name) + "'");
  return *id;
}

PresentationBuilder& PresentationBuilder::domain_object(std::string name) {
  require_identifier(name, "object");
  p_.domain_.add_object(std::move(name));
  p_.elements_by_object_.emplace_back();
  object_image_.emplace_back();
  elements_declared_.push_back(false);
  return *this;
}

PresentationBuilder& PresentationBuilder::domain_arrow(std::string name,
                                                       std::string_view src,
                                                       std::string_view tgt) {
  require_identifier(name, "arrow");
  p_.domain_.add_arrow(std::move(name), domain_object_id(src), domain_object_id(tgt));
  arrow_image_.emplace_back();
  action_.emplace_back();
  return *this;
}

PresentationBuilder& PresentationBuilder::object(std::string name) {
  require_identifier(name, "object");
  if (p_.codomain_.find_arrow("id_" + name)) {
    throw ValidationError("arrow 'id_" + name + "' clashes with the identity at '" +
                          name + "'");
  }
  p_.codomain_.add_object(std::move(name));
  return *this;
}

PresentationBuilder& PresentationBuilder::arrow(std::string name, std::string_view src,
                                                std::string_view tgt) {
  require_identifier(name, "arrow");
  if (name.starts_with("id_") && p_.codomain_.find_object(name.substr(3))) {
    throw ValidationError("arrow '" + name + "' clashes with an identity path");
  }
  auto s = p_.codomain_.find_object(src);
  auto t = p_.codomain_.find_object(tgt);
  if (!s) throw ValidationError("unknown object '" + std::string(src) + "'");
  if (!t) throw ValidationError("unknown object '" + std::string(tgt) + "'");
  p_.codomain_.add_arrow(std::move(name), *s, *t);
  return *this;
}

PresentationBuilder& PresentationBuilder::relation(std::string_view lhs,
                                                   std::string_view rhs) {
  Path l = parse_path(p_.codomain_, lhs);
  Path r = parse_path(p_.codomain_, rhs);
  if (l.source() != r.source() || l.target() != r.target()) {
    throw ValidationError("relation sides '" + std::string(lhs) + "' and '" +
                          std::string(rhs) + "' are not parallel");
  }
  p_.relations_.push_back({std::move(l), std::move(r)});
  return *this;
}

PresentationBuilder& PresentationBuilder::map_object(std::string_view domain_object,
                                                     std::string_view object) {
  auto a = domain_object_id(domain_object);
  auto b = p_.codomain_.find_object(object);
  if (!b) throw ValidationError("unknown object '" + std::string(object) + "'");
  if (object_image_[a.value()]) {
    throw ValidationError("object image of '" + std::string(domain_object) +
                          "' given twice");
  }
  object_image_[a.value()] = *b;
  return *this;
}

PresentationBuilder& PresentationBuilder::map_arrow(std::string_view domain_arrow,
                                                    std::string_view path) {
  auto a = domain_arrow_id(domain_arrow);
  if (arrow_image_[a.value()]) {
    throw ValidationError("arrow image of '" + std::string(domain_arrow) +
                          "' given twice");
  }
  arrow_image_[a.value()] = parse_path(p_.codomain_, path);
  return *this;
}

PresentationBuilder& PresentationBuilder::elements(std::string_view domain_object,
                                                   std::vector<std::string> names) {
  auto a = domain_object_id(domain_object);
  if (elements_declared_[a.value()]) {
    throw ValidationError("elements of '" + std::string(domain_object) +
                          "' declared twice");
  }
  elements_declared_[a.value()] = true;
  for (auto& name : names) {
    require_identifier(name, "element");
    if (p_.element_index_.contains(name)) {
      throw ValidationError("duplicate element identifier '" + name + "'");
    }
    ElementId x{p_.elements_.size()};
    auto& bucket = p_.elements_by_object_[a.value()];
    p_.element_index_.emplace(name, x);
    p_.elements_.push_back({std::move(name), a, bucket.size()});
    bucket.push_back(x);
  }
  return *this;
}

PresentationBuilder& PresentationBuilder::element_action(std::string_view domain_arrow,
                                                         std::string_view from,
                                                         std::string_view to) {
  auto a = domain_arrow_id(domain_arrow);
  auto x = element_id(from);
  auto y = element_id(to);
  const auto& dom = p_.domain_;
  if (p_.owner(x) != dom.source(a)) {
    throw ValidationError("element '" + std::string(from) + "' is not in the set of '" +
                          dom.name(dom.source(a)) + "', the source of '" +
                          std::string(domain_arrow) + "'");
  }
  if (p_.owner(y) != dom.target(a)) {
    throw ValidationError("element '" + std::string(to) + "' is not in the set of '" +
                          dom.name(dom.target(a)) + "', the target of '" +
                          std::string(domain_arrow) + "'");
  }
  if (!action_[a.value()].emplace(x.value(), y).second) {
    throw ValidationError("action of '" + std::string(domain_arrow) + "' on '" +
                          std::string(from) + "' given twice");
  }
  return *this;
}

KanPresentation PresentationBuilder::build() const {
  KanPresentation out = p_;
  const auto& dom = out.domain_;
  for (std::uint32_t i = 0; i < dom.object_count(); ++i) {
    DomainObjectId a{i};
    if (!object_image_[i]) {
      throw ValidationError("object '" + dom.name(a) + "' has no image object");
    }
    if (!elements_declared_[i]) {
      throw ValidationError("object '" + dom.name(a) + "' has no element set");
    }
    out.object_image_.push_back(*object_image_[i]);
  }
  for (std::uint32_t i = 0; i < dom.arrow_count(); ++i) {
    DomainArrowId a{i};
    if (!arrow_image_[i]) {
      throw ValidationError("arrow '" + dom.name(a) + "' has no image path");
    }
    const Path& image = *arrow_image_[i];
    ObjectId want_src = out.object_image_[dom.source(a).value()];
    ObjectId want_tgt = out.object_image_[dom.target(a).value()];
    if (image.source() != want_src || image.target() != want_tgt) {
      throw ValidationError("image path of '" + dom.name(a) + "' runs from '" +
                            out.codomain_.name(image.source()) + "' to '" +
                            out.codomain_.name(image.target()) + "' but must run from '" +
                            out.codomain_.name(want_src) + "' to '" +
                            out.codomain_.name(want_tgt) + "'");
    }
    out.arrow_image_.push_back(image);

    std::vector<ElementId> table;
    for (ElementId x : out.elements_of(dom.source(a))) {
      auto it = action_[i].find(x.value());
      if (it == action_[i].end()) {
        throw ValidationError("action of '" + dom.name(a) + "' is not defined on '" +
                              out.name(x) + "'");
      }
      table.push_back(it->second);
    }
    out.action_.push_back(std::move(table));
  }
  return out;
}

}  // namespace kanrew
