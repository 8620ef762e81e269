#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanrew/errors.hpp"
#include "kanrew/graph.hpp"
#include "kanrew/ids.hpp"

namespace kanrew {

/// A morphism of the free category on the codomain graph: a composable
/// arrow sequence together with its endpoints. Identity paths are empty
/// and remember the object they sit at, so id at B1 and id at B2 differ.
///
/// Endpoints are stored rather than recomputed, which lets the rewriting
/// code split and splice paths without consulting the graph. Use
/// `from_arrows` whenever the arrow sequence comes from untrusted input.
class Path {
 public:
  Path() = default;

  /// Trusted constructor: the caller guarantees `arrows` is a walk from
  /// `src` to `tgt`. An empty sequence requires src == tgt.
  Path(ObjectId src, ObjectId tgt, std::vector<ArrowId> arrows);

  static Path identity(ObjectId at) { return Path(at, at, {}); }
  static Path from_arrows(const CodomainGraph& graph,
                          std::span<const ArrowId> arrows);
  static Path from_arrows(const CodomainGraph& graph, ObjectId base,
                          std::span<const ArrowId> arrows);

  ObjectId source() const noexcept { return src_; }
  ObjectId target() const noexcept { return tgt_; }
  std::span<const ArrowId> arrows() const noexcept { return arrows_; }
  std::size_t size() const noexcept { return arrows_.size(); }
  bool empty() const noexcept { return arrows_.empty(); }
  ArrowId operator[](std::size_t i) const { return arrows_[i]; }

  bool starts_with(const Path& prefix) const;
  /// Position of the first occurrence of `factor` at or after `from`.
  std::optional<std::size_t> find(const Path& factor,
                                  std::size_t from = 0) const;
  /// Position of the last occurrence of `factor`.
  std::optional<std::size_t> rfind(const Path& factor) const;

  /// The path that remains after removing `prefix`; requires starts_with.
  Path drop_prefix(const Path& prefix) const;
  /// Replace the occurrence of `lhs` at `pos` by the parallel path `rhs`.
  Path replace(std::size_t pos, const Path& lhs, const Path& rhs) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  ObjectId src_{};
  ObjectId tgt_{};
  std::vector<ArrowId> arrows_;
};

/// p followed by q. Throws CompositionError unless tgt(p) == src(q).
Path compose_path(const Path& p, const Path& q);

/// An element x|p of the P-set: an action element and a path leaving the
/// image of the element's owning object.
struct Term {
  ElementId element{};
  Path path;

  ObjectId target() const noexcept { return path.target(); }

  friend bool operator==(const Term&, const Term&) = default;
};

/// Right action of paths on terms: x|p acted on by q is x|pq.
Term act(const Term& t, const Path& q);

struct Relation {
  Path lhs;
  Path rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A validated finite presentation of a Kan extension: the generating
/// graph of the acting category, a presented target category, the action
/// on generators and the functor on generators. Build one with
/// PresentationBuilder or parse_presentation.
class KanPresentation {
 public:
  const DomainGraph& domain() const noexcept { return domain_; }
  const CodomainGraph& codomain() const noexcept { return codomain_; }
  std::span<const Relation> relations() const noexcept { return relations_; }

  std::size_t element_count() const noexcept { return elements_.size(); }
  const std::string& name(ElementId x) const { return elements_.at(x.value()).name; }
  DomainObjectId owner(ElementId x) const { return elements_.at(x.value()).owner; }
  std::span<const ElementId> elements_of(DomainObjectId a) const {
    return elements_by_object_.at(a.value());
  }
  std::optional<ElementId> find_element(std::string_view name) const;

  /// Image of a domain object under the functor.
  ObjectId object_image(DomainObjectId a) const { return object_image_.at(a.value()); }
  /// Image of a domain arrow under the functor, a path in the codomain.
  const Path& arrow_image(DomainArrowId a) const { return arrow_image_.at(a.value()); }

  /// x acted on by the generator a. Throws ValidationError when x is not
  /// in the set attached to the arrow's source.
  ElementId apply_generator_action(ElementId x, DomainArrowId a) const;

  /// x|id at the image of x's owning object.
  Term identity_term(ElementId x) const {
    return Term{x, Path::identity(object_image(owner(x)))};
  }

  friend bool operator==(const KanPresentation&, const KanPresentation&) = default;

 private:
  friend class PresentationBuilder;

  struct ElementRecord {
    std::string name;
    DomainObjectId owner;
    std::size_t slot;  // position inside its owner's set
    friend bool operator==(const ElementRecord&, const ElementRecord&) = default;
  };

  DomainGraph domain_;
  CodomainGraph codomain_;
  std::vector<Relation> relations_;
  std::vector<ElementRecord> elements_;
  std::vector<std::vector<ElementId>> elements_by_object_;
  std::vector<ObjectId> object_image_;
  std::vector<Path> arrow_image_;
  // action_[a][slot of x in X(src a)] = x.a
  std::vector<std::vector<ElementId>> action_;
  std::unordered_map<std::string, ElementId> element_index_;
};

/// Incremental, name-based assembly of a KanPresentation. Local checks
/// (duplicates, unknown identifiers, composability) throw immediately;
/// totality checks happen in build().
class PresentationBuilder {
 public:
  PresentationBuilder& domain_object(std::string name);
  PresentationBuilder& domain_arrow(std::string name, std::string_view src,
                                    std::string_view tgt);
  PresentationBuilder& object(std::string name);
  PresentationBuilder& arrow(std::string name, std::string_view src,
                             std::string_view tgt);
  /// Relation between two path literals ("b1.b2.b3", "id_B1").
  PresentationBuilder& relation(std::string_view lhs, std::string_view rhs);
  PresentationBuilder& map_object(std::string_view domain_object,
                                  std::string_view object);
  PresentationBuilder& map_arrow(std::string_view domain_arrow,
                                 std::string_view path);
  /// Declare the set attached to a domain object. Every domain object
  /// needs exactly one declaration, possibly empty.
  PresentationBuilder& elements(std::string_view domain_object,
                                std::vector<std::string> names);
  PresentationBuilder& element_action(std::string_view domain_arrow,
                                      std::string_view from,
                                      std::string_view to);

  KanPresentation build() const;

  /// The codomain graph declared so far.
  const CodomainGraph& codomain() const noexcept { return p_.codomain_; }

 private:
  DomainObjectId domain_object_id(std::string_view name) const;
  DomainArrowId domain_arrow_id(std::string_view name) const;
  ElementId element_id(std::string_view name) const;

  KanPresentation p_;
  std::vector<std::optional<ObjectId>> object_image_;
  std::vector<std::optional<Path>> arrow_image_;
  std::vector<bool> elements_declared_;
  std::vector<std::unordered_map<std::uint32_t, ElementId>> action_;
};

/// Identifiers are opaque but may not be empty, may not contain
/// whitespace or any of ".|+*()," and may not be "id".
bool is_valid_identifier(std::string_view name);

/// Parse "b1.b2.b3" or "id_B1" against the codomain graph.
Path parse_path(const CodomainGraph& graph, std::string_view text);
/// Parse "x|b1.b2", "x|id" or "x|id_B".
Term parse_term(const KanPresentation& p, std::string_view text);

std::string format_path(const CodomainGraph& graph, const Path& path);
std::string format_term(const KanPresentation& p, const Term& t);

}  // namespace kanrew

namespace kanrew::detail {

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 12) + (seed >> 4));
}

}  // namespace kanrew::detail

template <>
struct std::hash<kanrew::Path> {
  std::size_t operator()(const kanrew::Path& p) const noexcept {
    std::size_t h = kanrew::detail::hash_combine(p.size(), p.source().value());
    for (auto a : p.arrows()) h = kanrew::detail::hash_combine(h, a.value());
    return h;
  }
};

template <>
struct std::hash<kanrew::Term> {
  std::size_t operator()(const kanrew::Term& t) const noexcept {
    return kanrew::detail::hash_combine(std::hash<kanrew::Path>{}(t.path), t.element.value());
  }
};
