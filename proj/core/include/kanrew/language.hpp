#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kanrew/presentation.hpp"
#include "kanrew/regex.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

/// Deterministic automaton whose accepted words from start(x) are exactly
/// the paths w with x|w irreducible. Every state is accepting; a state
/// counts toward K(B) when its object is B.
class NormalFormAutomaton {
 public:
  static constexpr std::uint32_t escaped = std::numeric_limits<std::uint32_t>::max();

  struct State {
    ObjectId object;       // where the path read so far ends
    std::uint32_t matcher; // factor-matcher state over path-rule left sides
    ElementId element;     // owner of the start state this was reached from
    /// Node in the trie of term-rule left sides for `element`, or
    /// `escaped` once the path has left every such prefix.
    std::uint32_t prefix;
  };

  std::span<const State> states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t element_count() const noexcept { return starts_.size(); }

  /// Start state for x, absent when x|id itself is reducible.
  std::optional<std::size_t> start(ElementId x) const { return starts_.at(x.value()); }
  std::optional<std::size_t> next(std::size_t state, ArrowId a) const;
  /// Outgoing transitions in arrow declaration order.
  std::span<const std::pair<ArrowId, std::size_t>> transitions(std::size_t state) const {
    return transitions_.at(state);
  }

  bool accepts(ElementId x, std::span<const ArrowId> word) const;

 private:
  friend NormalFormAutomaton build_automaton(const KanPresentation&, const RewriteSystem&);

  std::vector<State> states_;
  std::vector<std::vector<std::pair<ArrowId, std::size_t>>> transitions_;
  std::vector<std::optional<std::size_t>> starts_;
};

/// Product of walks in the codomain graph, a factor matcher over the
/// path-rule left sides, and per-element tries of term-rule left sides.
/// Only states reachable from a start state are built; dead
/// configurations are never created.
NormalFormAutomaton build_automaton(const KanPresentation& p, const RewriteSystem& complete_rules);

/// Per element x with irreducible terms at B: a regular expression for
/// { w : x|w irreducible, tgt(w) = B }, by state elimination. Elements
/// with no such terms are omitted.
std::map<ElementId, Regex> regex_for_object(const NormalFormAutomaton& aut, ObjectId b);

/// Accepted paths of length at most `max_length` from start(x), ordered
/// by length, then arrow index.
std::vector<Path> sample_language(const NormalFormAutomaton& aut, ElementId x,
                                  std::size_t max_length);

/// "(x1+x2)|(expr) + y1|expr" style rendering of regex_for_object, with
/// elements sharing an expression grouped. Empty set prints as "0".
std::string format_object_language(const KanPresentation& p, ObjectId b,
                                   const std::map<ElementId, Regex>& by_element);

/// Machine-readable dump of states, transitions and tags, as JSON.
std::string dump_automaton(const KanPresentation& p, const NormalFormAutomaton& aut);

}  // namespace kanrew
