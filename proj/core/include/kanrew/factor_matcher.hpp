#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kanrew/ids.hpp"

namespace kanrew {

/// Aho-Corasick automaton over arrow identifiers. A state is "matched"
/// when the word read so far has some pattern as a suffix, i.e. it
/// contains a pattern as a factor ending at the last letter.
class FactorMatcher {
 public:
  using State = std::uint32_t;
  static constexpr State root = 0;

  FactorMatcher(std::size_t alphabet_size,
                const std::vector<std::span<const ArrowId>>& patterns);

  State next(State s, ArrowId a) const { return delta_[s * alphabet_ + a.value()]; }
  bool matched(State s) const { return matched_[s]; }
  std::size_t state_count() const noexcept { return matched_.size(); }

 private:
  std::size_t alphabet_;
  std::vector<State> delta_;
  std::vector<bool> matched_;
};

}  // namespace kanrew
