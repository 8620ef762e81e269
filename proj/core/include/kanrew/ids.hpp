#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace kanrew {

/// Dense index into one of a presentation's identifier tables. The tag
/// parameter keeps objects, arrows and elements of the two graphs apart.
template <typename Tag>
class Id {
 public:
  using value_type = std::uint32_t;

  constexpr Id() noexcept = default;
  template <std::integral I>
  constexpr explicit Id(I v) noexcept : value_(static_cast<value_type>(v)) {}

  constexpr value_type value() const noexcept { return value_; }

  friend constexpr bool operator==(Id, Id) noexcept = default;
  friend constexpr auto operator<=>(Id, Id) noexcept = default;

 private:
  value_type value_ = 0;
};

// Objects and arrows of the graph presenting the target category.
using ObjectId = Id<struct ObjectTag>;
using ArrowId = Id<struct ArrowTag>;
// Objects and arrows of the graph generating the acting category.
using DomainObjectId = Id<struct DomainObjectTag>;
using DomainArrowId = Id<struct DomainArrowTag>;
// Members of the disjoint union of the action sets.
using ElementId = Id<struct ElementTag>;

}  // namespace kanrew

template <typename Tag>
struct std::hash<kanrew::Id<Tag>> {
  std::size_t operator()(kanrew::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};
