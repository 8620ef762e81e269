#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kanrew/ordering.hpp"
#include "kanrew/presentation.hpp"
#include "kanrew/rules.hpp"

namespace kanrew {

/// Interchange documents are JSON objects with the fields
///
///   ObA    ["A1", ...]                       domain objects
///   ArrA   [["a1", "A1", "A2"], ...]         domain arrows
///   ObB    ["B1", ...]                       codomain objects
///   ArrB   [["b1", "B1", "B2"], ...]         codomain arrows
///   RelB   [["b1.b2.b3", "b4"], ...]         relations between paths
///   FObA   {"A1": "B1", ...}                 functor on objects
///   FArrA  {"a1": "b1", ...}                 functor on arrows (paths)
///   XObA   {"A1": ["x1", ...], ...}          action sets
///   XArrA  {"a1": {"x1": "y1", ...}, ...}    action of generators
///
/// FObA, FArrA and XObA may instead be lists aligned with ObA or ArrA,
/// and XArrA a list of image lists aligned with ArrA and the source set.
/// A path is either a dotted string or a list of arrow identifiers;
/// "id_B" denotes the identity at B.
///
/// Optional fields: ArrowOrder and ElementOrder (identifier lists,
/// smallest first) and Rules, which carries a rewrite system:
///
///   Rules  {"Status": "completed", "Passes": 2, "Added": 3,
///           "TermRules": [["x1|b1", "y1|id_B2"], ...],
///           "PathRules": [["b1.b2.b3", "b4"], ...]}
enum class RulesStatus { initial, completed, limit_exceeded };

std::string_view to_string(RulesStatus status);

struct RulesSection {
  RulesStatus status = RulesStatus::initial;
  RewriteSystem system;
  std::size_t passes = 0;
  std::size_t added = 0;
};

struct Document {
  KanPresentation presentation;
  std::vector<std::string> arrow_order;    // empty: declaration order
  std::vector<std::string> element_order;  // empty: declaration order
  std::optional<RulesSection> rules;

  /// Declaration order with the document's overrides applied.
  OrderConfig order() const;
};

/// Throws ParseError for malformed JSON and ValidationError, located by a
/// JSON pointer, for anything that violates the data model.
Document parse_document(std::string_view text);

/// parse_document(text).presentation.
KanPresentation parse_presentation(std::string_view text);

std::string serialize_presentation(const KanPresentation& p);
std::string serialize_document(const Document& doc);

}  // namespace kanrew
