#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "kanrew/graph.hpp"
#include "kanrew/ids.hpp"

namespace kanrew {

/// Regular expression over codomain arrows. Values are immutable and
/// cheap to copy. The combinators apply the obvious unit and zero laws,
/// flatten nested unions and concatenations, and drop duplicate union
/// branches, so equal languages built the same way print the same.
class Regex {
 public:
  enum class Kind { empty, identity, arrow, concat, alt, star };

  /// The empty language.
  Regex();
  static Regex identity();
  static Regex arrow(ArrowId a);
  static Regex concat(const Regex& a, const Regex& b);
  static Regex alt(const Regex& a, const Regex& b);
  static Regex star(const Regex& a);

  Kind kind() const noexcept;
  ArrowId arrow_id() const;
  const std::vector<Regex>& children() const;

  bool is_empty() const noexcept { return kind() == Kind::empty; }

  /// Display form: `+` union, juxtaposition, postfix `*`, and `id_B` for
  /// the identity where B is `identity_object`.
  std::string format(const CodomainGraph& graph, ObjectId identity_object) const;

  /// Every word of the language with at most `max_length` letters.
  std::set<std::vector<ArrowId>> words(std::size_t max_length) const;

  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace kanrew
