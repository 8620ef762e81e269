#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "kanrew/kanrew.hpp"

namespace fixtures {

inline std::string data_path(std::string_view name) {
  return std::string(KANREW_DATA_DIR) + "/" + std::string(name);
}

inline std::string read_data(std::string_view name) {
  std::ifstream in(data_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline kanrew::KanPresentation load(std::string_view name) {
  return kanrew::parse_presentation(read_data(name));
}

/// The two-object worked example, assembled without the parser.
inline kanrew::KanPresentation example4() {
  kanrew::PresentationBuilder b;
  b.domain_object("A1").domain_object("A2");
  b.domain_arrow("a1", "A1", "A2").domain_arrow("a2", "A2", "A1");
  b.object("B1").object("B2").object("B3");
  b.arrow("b1", "B1", "B2").arrow("b2", "B2", "B3").arrow("b3", "B3", "B1");
  b.arrow("b4", "B1", "B1").arrow("b5", "B1", "B3");
  b.relation("b1.b2.b3", "b4");
  b.map_object("A1", "B1").map_object("A2", "B2");
  b.map_arrow("a1", "b1").map_arrow("a2", "b2.b3");
  b.elements("A1", {"x1", "x2", "x3"}).elements("A2", {"y1", "y2"});
  b.element_action("a1", "x1", "y1").element_action("a1", "x2", "y2");
  b.element_action("a1", "x3", "y1");
  b.element_action("a2", "y1", "x1").element_action("a2", "y2", "x2");
  return b.build();
}

inline kanrew::Term term(const kanrew::KanPresentation& p, std::string_view text) {
  return kanrew::parse_term(p, text);
}

inline kanrew::Path path(const kanrew::KanPresentation& p, std::string_view text) {
  return kanrew::parse_path(p.codomain(), text);
}

inline kanrew::RewriteSystem completed(const kanrew::KanPresentation& p) {
  auto cfg = kanrew::OrderConfig::declaration_order(p);
  return kanrew::complete(kanrew::initial_rules(p, cfg), cfg).system;
}

/// Every sample presentation shipped in data/.
inline const char* const kSamples[] = {"example4.kan", "swap.kan", "commutative.kan",
                                       "cosets.kan", "coequalizer.kan"};

}  // namespace fixtures
