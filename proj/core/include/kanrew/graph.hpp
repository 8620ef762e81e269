#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanrew/errors.hpp"
#include "kanrew/ids.hpp"

namespace kanrew {

/// A finite directed graph with named objects and arrows.
template <typename ObjectIdT, typename ArrowIdT>
class Graph {
 public:
  using object_id = ObjectIdT;
  using arrow_id = ArrowIdT;

  ObjectIdT add_object(std::string name) {
    if (object_index_.contains(name)) {
      throw ValidationError("duplicate object identifier '" + name + "'");
    }
    ObjectIdT id{objects_.size()};
    object_index_.emplace(name, id);
    objects_.push_back(std::move(name));
    outgoing_.emplace_back();
    return id;
  }

  ArrowIdT add_arrow(std::string name, ObjectIdT src, ObjectIdT tgt) {
    if (arrow_index_.contains(name)) {
      throw ValidationError("duplicate arrow identifier '" + name + "'");
    }
    if (src.value() >= objects_.size() || tgt.value() >= objects_.size()) {
      throw ValidationError("arrow '" + name + "' has an undeclared endpoint");
    }
    ArrowIdT id{arrows_.size()};
    arrow_index_.emplace(name, id);
    arrows_.push_back({std::move(name), src, tgt});
    outgoing_[src.value()].push_back(id);
    return id;
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::string& name(ObjectIdT id) const { return objects_.at(id.value()); }
  const std::string& name(ArrowIdT id) const { return arrows_.at(id.value()).name; }
  ObjectIdT source(ArrowIdT id) const { return arrows_.at(id.value()).src; }
  ObjectIdT target(ArrowIdT id) const { return arrows_.at(id.value()).tgt; }

  std::optional<ObjectIdT> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<ArrowIdT> find_arrow(std::string_view name) const {
    auto it = arrow_index_.find(std::string(name));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Arrows with the given source, in declaration order.
  std::span<const ArrowIdT> arrows_from(ObjectIdT id) const {
    return outgoing_.at(id.value());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.objects_ == b.objects_ && a.arrows_ == b.arrows_;
  }

 private:
  struct ArrowRecord {
    std::string name;
    ObjectIdT src;
    ObjectIdT tgt;
    friend bool operator==(const ArrowRecord&, const ArrowRecord&) = default;
  };

  std::vector<std::string> objects_;
  std::vector<ArrowRecord> arrows_;
  std::vector<std::vector<ArrowIdT>> outgoing_;
  std::unordered_map<std::string, ObjectIdT> object_index_;
  std::unordered_map<std::string, ArrowIdT> arrow_index_;
};

/// Generating graph of the acting category.
using DomainGraph = Graph<DomainObjectId, DomainArrowId>;
/// Generating graph of the category the action is extended to.
using CodomainGraph = Graph<ObjectId, ArrowId>;

}  // namespace kanrew
