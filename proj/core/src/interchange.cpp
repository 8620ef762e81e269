#include "kanrew/interchange.hpp"

#include <algorithm>
#include <array>

#include <unordered_map>

#include <nlohmann/json.hpp>

#include "kanrew/rewrite.hpp"

namespace kanrew {

using json = nlohmann::ordered_json;

std::string_view to_string(RulesStatus status) {
  switch (status) {
    case RulesStatus::initial: return "initial";
    case RulesStatus::completed: return "completed";
    case RulesStatus::limit_exceeded: return "limit-exceeded";
  }
  return "?";
}

OrderConfig Document::order() const {
  auto cfg = OrderConfig::declaration_order(presentation);
  if (!arrow_order.empty()) cfg = cfg.with_arrow_order(presentation, arrow_order);
  if (!element_order.empty()) cfg = cfg.with_element_order(presentation, element_order);
  return cfg;
}

namespace {

constexpr std::array kRecordFields{"ObA", "ArrA", "ObB", "ArrB", "RelB",
                                   "FObA", "FArrA", "XObA", "XArrA"};
constexpr std::array kOptionalFields{"ArrowOrder", "ElementOrder", "Rules"};

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

// Run `f`, re-labelling any ValidationError it throws with `at`.
template <typename F>
auto located(const std::string& at, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    if (!e.location().empty()) throw;
    throw e.at(at);
  } catch (const CompositionError& e) {
    throw ValidationError(e.what(), at);
  }
}

const json& expect_array(const json& v, const std::string& at) {
  if (!v.is_array()) throw ValidationError("expected a list", at);
  return v;
}

const std::string& expect_string(const json& v, const std::string& at) {
  if (!v.is_string()) throw ValidationError("expected a string", at);
  return v.get_ref<const std::string&>();
}

std::vector<std::string> string_list(const json& v, const std::string& at) {
  expect_array(v, at);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(expect_string(v[i], child(at, i)));
  return out;
}

// A path is a dotted string or a list of identifiers.
std::string path_text(const json& v, const std::string& at) {
  if (v.is_string()) return v.get<std::string>();
  auto parts = string_list(v, at);
  if (parts.empty()) throw ValidationError("empty path list; write id_<object>", at);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '.';
    out += parts[i];
  }
  return out;
}

// Visit FObA-style fields given either as a map keyed by domain
// identifiers or as a list aligned with `keys`.
template <typename F>
void for_each_entry(const json& v, const std::vector<std::string>& keys,
                    const std::string& at, F&& f) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) f(key, value, child(at, key));
  } else if (v.is_array()) {
    if (v.size() != keys.size()) {
      throw ValidationError("list has " + std::to_string(v.size()) + " entries but " +
                                std::to_string(keys.size()) + " are declared",
                            at);
    }
    for (std::size_t i = 0; i < v.size(); ++i) f(keys[i], v[i], child(at, i));
  } else {
    throw ValidationError("expected a map or a list", at);
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

RulesSection parse_rules(const KanPresentation& p, const json& v) {
  const std::string at = "/Rules";
  if (!v.is_object()) throw ValidationError("expected a map", at);
  RulesSection out;
  for (const auto& [key, value] : v.items()) {
    const std::string here = child(at, key);
    if (key == "Status") {
      const auto& s = expect_string(value, here);
      if (s == "initial") {
        out.status = RulesStatus::initial;
      } else if (s == "completed") {
        out.status = RulesStatus::completed;
      } else if (s == "limit-exceeded") {
        out.status = RulesStatus::limit_exceeded;
      } else {
        throw ValidationError("unknown status '" + s + "'", here);
      }
    } else if (key == "Passes" || key == "Added") {
      if (!value.is_number_unsigned()) throw ValidationError("expected a count", here);
      (key == "Passes" ? out.passes : out.added) = value.get<std::size_t>();
    } else if (key == "TermRules") {
      expect_array(value, here);
      for (std::size_t i = 0; i < value.size(); ++i) {
        auto sides = string_list(value[i], child(here, i));
        if (sides.size() != 2) throw ValidationError("expected two terms", child(here, i));
        located(child(here, i), [&] {
          out.system.term_rules.push_back({parse_term(p, sides[0]), parse_term(p, sides[1])});
          return 0;
        });
      }
    } else if (key == "PathRules") {
      expect_array(value, here);
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& pair = expect_array(value[i], child(here, i));
        if (pair.size() != 2) throw ValidationError("expected two paths", child(here, i));
        located(child(here, i), [&] {
          out.system.path_rules.push_back(
              {parse_path(p.codomain(), path_text(pair[0], child(child(here, i), 0))),
               parse_path(p.codomain(), path_text(pair[1], child(child(here, i), 1)))});
          return 0;
        });
      }
    } else {
      throw ValidationError("unknown field", here);
    }
  }
  return out;
}

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...: " prefix.
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(what, line, column);
  }
  if (!root.is_object()) throw ValidationError("document must be a map", "/");

  for (const auto& [key, value] : root.items()) {
    bool known = std::find(kRecordFields.begin(), kRecordFields.end(), key) != kRecordFields.end() ||
                 std::find(kOptionalFields.begin(), kOptionalFields.end(), key) !=
                     kOptionalFields.end();
    if (!known) throw ValidationError("unknown field '" + key + "'", "/" + key);
  }
  for (const char* field : kRecordFields) {
    if (!root.contains(field)) {
      throw ValidationError("missing field '" + std::string(field) + "'", "/");
    }
  }

  PresentationBuilder b;
  auto domain_objects = string_list(root["ObA"], "/ObA");
  for (std::size_t i = 0; i < domain_objects.size(); ++i) {
    located(child("/ObA", i), [&] { return &b.domain_object(domain_objects[i]); });
  }

  std::vector<std::string> domain_arrows;
  const auto& arr_a = expect_array(root["ArrA"], "/ArrA");
  for (std::size_t i = 0; i < arr_a.size(); ++i) {
    auto at = child("/ArrA", i);
    auto triple = string_list(arr_a[i], at);
    if (triple.size() != 3) throw ValidationError("expected [name, source, target]", at);
    located(at, [&] { return &b.domain_arrow(triple[0], triple[1], triple[2]); });
    domain_arrows.push_back(triple[0]);
  }

  auto objects = string_list(root["ObB"], "/ObB");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    located(child("/ObB", i), [&] { return &b.object(objects[i]); });
  }

  const auto& arr_b = expect_array(root["ArrB"], "/ArrB");
  for (std::size_t i = 0; i < arr_b.size(); ++i) {
    auto at = child("/ArrB", i);
    auto triple = string_list(arr_b[i], at);
    if (triple.size() != 3) throw ValidationError("expected [name, source, target]", at);
    located(at, [&] { return &b.arrow(triple[0], triple[1], triple[2]); });
  }

  const auto& rel = expect_array(root["RelB"], "/RelB");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    auto at = child("/RelB", i);
    const auto& pair = expect_array(rel[i], at);
    if (pair.size() != 2) throw ValidationError("expected [lhs, rhs]", at);
    auto lhs = path_text(pair[0], child(at, 0));
    auto rhs = path_text(pair[1], child(at, 1));
    located(child(at, 0), [&] { return parse_path(b.codomain(), lhs); });
    located(child(at, 1), [&] { return parse_path(b.codomain(), rhs); });
    located(at, [&] { return &b.relation(lhs, rhs); });
  }

  for_each_entry(root["FObA"], domain_objects, "/FObA",
                 [&](const std::string& key, const json& v, const std::string& at) {
                   const auto& target = expect_string(v, at);
                   located(at, [&] { return &b.map_object(key, target); });
                 });
  for_each_entry(root["FArrA"], domain_arrows, "/FArrA",
                 [&](const std::string& key, const json& v, const std::string& at) {
                   auto path = path_text(v, at);
                   located(at, [&] { return &b.map_arrow(key, path); });
                 });

  std::unordered_map<std::string, std::vector<std::string>> sets;
  for_each_entry(root["XObA"], domain_objects, "/XObA",
                 [&](const std::string& key, const json& v, const std::string& at) {
                   auto names = string_list(v, at);
                   sets[key] = names;
                   located(at, [&] { return &b.elements(key, std::move(names)); });
                 });

  // The builder validates domain arrows before the action needs them; the
  // source set of each arrow is looked up from the ArrA triples.
  std::unordered_map<std::string, std::string> arrow_source;
  for (std::size_t i = 0; i < arr_a.size(); ++i) {
    arrow_source[arr_a[i][0].get<std::string>()] = arr_a[i][1].get<std::string>();
  }
  for_each_entry(root["XArrA"], domain_arrows, "/XArrA",
                 [&](const std::string& key, const json& v, const std::string& at) {
                   if (v.is_object()) {
                     for (const auto& [from, to] : v.items()) {
                       const auto& image = expect_string(to, child(at, from));
                       located(child(at, from),
                               [&] { return &b.element_action(key, from, image); });
                     }
                     return;
                   }
                   auto images = string_list(v, at);
                   auto src = arrow_source.find(key);
                   if (src == arrow_source.end()) {
                     throw ValidationError("unknown domain arrow '" + key + "'", at);
                   }
                   const auto& domain = sets[src->second];
                   if (images.size() != domain.size()) {
                     throw ValidationError("image list has " + std::to_string(images.size()) +
                                               " entries but the source set has " +
                                               std::to_string(domain.size()),
                                           at);
                   }
                   for (std::size_t i = 0; i < images.size(); ++i) {
                     located(child(at, i),
                             [&] { return &b.element_action(key, domain[i], images[i]); });
                   }
                 });

  Document doc{located("/", [&] { return b.build(); }), {}, {}, {}};
  if (root.contains("ArrowOrder")) doc.arrow_order = string_list(root["ArrowOrder"], "/ArrowOrder");
  if (root.contains("ElementOrder")) {
    doc.element_order = string_list(root["ElementOrder"], "/ElementOrder");
  }
  OrderConfig cfg = located("/ArrowOrder", [&] {
    auto c = OrderConfig::declaration_order(doc.presentation);
    if (!doc.arrow_order.empty()) c = c.with_arrow_order(doc.presentation, doc.arrow_order);
    return c;
  });
  if (!doc.element_order.empty()) {
    cfg = located("/ElementOrder",
                  [&] { return cfg.with_element_order(doc.presentation, doc.element_order); });
  }
  if (root.contains("Rules")) {
    doc.rules = parse_rules(doc.presentation, root["Rules"]);
    located("/Rules", [&] {
      check_oriented(doc.rules->system, cfg);
      return 0;
    });
  }
  return doc;
}

KanPresentation parse_presentation(std::string_view text) {
  return parse_document(text).presentation;
}

namespace {

json presentation_json(const KanPresentation& p) {
  const auto& dom = p.domain();
  const auto& cod = p.codomain();
  json out;
  json ob_a = json::array();
  json arr_a = json::array();
  json ob_b = json::array();
  json arr_b = json::array();
  json rel_b = json::array();
  json f_ob = json::object();
  json f_arr = json::object();
  json x_ob = json::object();
  json x_arr = json::object();
  for (std::uint32_t i = 0; i < dom.object_count(); ++i) {
    DomainObjectId a{i};
    ob_a.push_back(dom.name(a));
    f_ob[dom.name(a)] = cod.name(p.object_image(a));
    json names = json::array();
    for (ElementId x : p.elements_of(a)) names.push_back(p.name(x));
    x_ob[dom.name(a)] = std::move(names);
  }
  for (std::uint32_t i = 0; i < dom.arrow_count(); ++i) {
    DomainArrowId a{i};
    arr_a.push_back({dom.name(a), dom.name(dom.source(a)), dom.name(dom.target(a))});
    f_arr[dom.name(a)] = format_path(cod, p.arrow_image(a));
    json action = json::object();
    for (ElementId x : p.elements_of(dom.source(a))) {
      action[p.name(x)] = p.name(p.apply_generator_action(x, a));
    }
    x_arr[dom.name(a)] = std::move(action);
  }
  for (std::uint32_t i = 0; i < cod.object_count(); ++i) ob_b.push_back(cod.name(ObjectId{i}));
  for (std::uint32_t i = 0; i < cod.arrow_count(); ++i) {
    ArrowId b{i};
    arr_b.push_back({cod.name(b), cod.name(cod.source(b)), cod.name(cod.target(b))});
  }
  for (const auto& r : p.relations()) {
    rel_b.push_back({format_path(cod, r.lhs), format_path(cod, r.rhs)});
  }
  out["ObA"] = std::move(ob_a);
  out["ArrA"] = std::move(arr_a);
  out["ObB"] = std::move(ob_b);
  out["ArrB"] = std::move(arr_b);
  out["RelB"] = std::move(rel_b);
  out["FObA"] = std::move(f_ob);
  out["FArrA"] = std::move(f_arr);
  out["XObA"] = std::move(x_ob);
  out["XArrA"] = std::move(x_arr);
  return out;
}

}  // namespace

std::string serialize_presentation(const KanPresentation& p) {
  return presentation_json(p).dump(2) + "\n";
}

std::string serialize_document(const Document& doc) {
  json out = presentation_json(doc.presentation);
  if (!doc.arrow_order.empty()) out["ArrowOrder"] = doc.arrow_order;
  if (!doc.element_order.empty()) out["ElementOrder"] = doc.element_order;
  if (doc.rules) {
    const auto& p = doc.presentation;
    json rules;
    rules["Status"] = std::string(to_string(doc.rules->status));
    rules["Passes"] = doc.rules->passes;
    rules["Added"] = doc.rules->added;
    json terms = json::array();
    for (const auto& r : doc.rules->system.term_rules) {
      terms.push_back({format_term(p, r.lhs), format_term(p, r.rhs)});
    }
    json paths = json::array();
    for (const auto& r : doc.rules->system.path_rules) {
      paths.push_back({format_path(p.codomain(), r.lhs), format_path(p.codomain(), r.rhs)});
    }
    rules["TermRules"] = std::move(terms);
    rules["PathRules"] = std::move(paths);
    out["Rules"] = std::move(rules);
  }
  return out.dump(2) + "\n";
}

}  // namespace kanrew
