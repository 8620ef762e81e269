#include "kanrew/factor_matcher.hpp"

#include <deque>
#include <limits>

namespace kanrew {

FactorMatcher::FactorMatcher(std::size_t alphabet_size,
                             const std::vector<std::span<const ArrowId>>& patterns)
    : alphabet_(alphabet_size) {
  constexpr State none = std::numeric_limits<State>::max();
  std::vector<std::vector<State>> trie{std::vector<State>(alphabet_, none)};
  matched_.assign(1, false);
  for (auto pattern : patterns) {
    State s = root;
    for (ArrowId a : pattern) {
      if (trie[s][a.value()] == none) {
        trie[s][a.value()] = static_cast<State>(trie.size());
        trie.emplace_back(alphabet_, none);
        matched_.push_back(false);
      }
      s = trie[s][a.value()];
    }
    matched_[s] = true;
  }

  // Breadth-first failure links, folded directly into a total transition
  // table.
  std::vector<State> fail(trie.size(), root);
  delta_.assign(trie.size() * alphabet_, root);
  std::deque<State> queue;
  for (std::size_t a = 0; a < alphabet_; ++a) {
    State child = trie[root][a];
    if (child == none) continue;
    delta_[root * alphabet_ + a] = child;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (matched_[fail[s]]) matched_[s] = true;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      State child = trie[s][a];
      State via_fail = delta_[fail[s] * alphabet_ + a];
      if (child == none) {
        delta_[s * alphabet_ + a] = via_fail;
      } else {
        fail[child] = via_fail;
        delta_[s * alphabet_ + a] = child;
        queue.push_back(child);
      }
    }
  }
}

}  // namespace kanrew
