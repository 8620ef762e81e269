#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kanrew/kanrew.hpp"

namespace kanrew::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string input;
  std::string term;
  std::string path;
  std::optional<std::size_t> enum_limit;
  std::size_t max_rules = CompletionLimits{}.max_rules;
  std::size_t max_passes = CompletionLimits{}.max_passes;
  std::vector<std::string> arrow_order;
  std::vector<std::string> element_order;
  std::string format = "text";
  bool verbose = false;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kUsage, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t enumeration_limit(const RunConfig& cfg) {
  if (cfg.enum_limit) return *cfg.enum_limit;
  if (const char* env = std::getenv("KANREW_ENUM_LIMIT")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Failure(kUsage, "KANREW_ENUM_LIMIT must be a positive integer");
  }
  return kDefaultEnumerationLimit;
}

// Loaded document with command-line order overrides applied.
struct Session {
  Document doc;
  OrderConfig order;

  const KanPresentation& p() const { return doc.presentation; }
};

Session load(const RunConfig& cfg) {
  Session s{parse_document(read_file(cfg.input)), {}};
  if (!cfg.arrow_order.empty()) s.doc.arrow_order = cfg.arrow_order;
  if (!cfg.element_order.empty()) s.doc.element_order = cfg.element_order;
  s.order = s.doc.order();
  if (s.doc.rules) check_oriented(s.doc.rules->system, s.order);
  return s;
}

CompletionResult run_completion(const RunConfig& cfg, const Session& s, std::ostream& err) {
  if (s.doc.rules && s.doc.rules->status == RulesStatus::completed) {
    return {CompletionStatus::completed, s.doc.rules->system, s.doc.rules->passes,
            s.doc.rules->added};
  }
  RewriteSystem start = s.doc.rules ? s.doc.rules->system : initial_rules(s.p(), s.order);
  ProgressHook hook;
  if (cfg.verbose) {
    hook = [&err](std::size_t pass, std::size_t rules) {
      err << "pass " << pass << ": " << rules << " rules\n";
    };
  }
  return complete(std::move(start), s.order, {cfg.max_rules, cfg.max_passes}, hook);
}

// Commands other than `complete` need a finished system to be meaningful.
RewriteSystem require_complete(const RunConfig& cfg, const Session& s, std::ostream& err) {
  auto result = run_completion(cfg, s, err);
  if (result.status != CompletionStatus::completed) {
    throw Failure(kCompletionLimit, "completion stopped after " +
                                        std::to_string(result.passes) + " passes with " +
                                        std::to_string(result.system.size()) +
                                        " rules; raise --max-rules or --max-passes");
  }
  return std::move(result.system);
}

std::string count(std::size_t n, const std::string& noun) {
  return std::to_string(n) + ' ' + noun + (n == 1 ? "" : "s");
}

void print_rules(std::ostream& out, const KanPresentation& p, const RewriteSystem& rules) {
  for (const auto& r : rules.term_rules) {
    out << format_term(p, r.lhs) << " -> " << format_term(p, r.rhs) << '\n';
  }
  for (const auto& r : rules.path_rules) {
    out << format_path(p.codomain(), r.lhs) << " -> " << format_path(p.codomain(), r.rhs) << '\n';
  }
}

std::string machine_document(const Session& s, RulesSection rules) {
  Document doc = s.doc;
  doc.rules = std::move(rules);
  return serialize_document(doc);
}

int cmd_validate(const RunConfig&, const Session& s, std::ostream& out) {
  const auto& p = s.p();
  out << "valid: " << count(p.domain().object_count(), "domain object") << ", "
      << count(p.domain().arrow_count(), "domain arrow") << ", "
      << count(p.codomain().object_count(), "object") << ", "
      << count(p.codomain().arrow_count(), "arrow") << ", "
      << count(p.relations().size(), "relation") << ", "
      << count(p.element_count(), "element") << '\n';
  return kOk;
}

int cmd_initial(const RunConfig& cfg, const Session& s, std::ostream& out) {
  auto rules = initial_rules(s.p(), s.order);
  if (cfg.format == "machine") {
    out << machine_document(s, {RulesStatus::initial, rules, 0, 0});
  } else {
    out << "# " << count(rules.term_rules.size(), "term rule") << ", "
        << count(rules.path_rules.size(), "path rule") << '\n';
    print_rules(out, s.p(), rules);
  }
  return kOk;
}

int cmd_complete(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto result = run_completion(cfg, s, err);
  bool done = result.status == CompletionStatus::completed;
  if (cfg.format == "machine") {
    out << machine_document(s, {done ? RulesStatus::completed : RulesStatus::limit_exceeded,
                                result.system, result.passes, result.added});
  } else {
    out << "status: " << (done ? "completed" : "limit-exceeded") << '\n'
        << "passes: " << result.passes << '\n'
        << "added: " << result.added << '\n'
        << "rules: " << result.system.size() << '\n';
    print_rules(out, s.p(), result.system);
  }
  if (!done) err << "completion limit exceeded; the system above is partial\n";
  return done ? kOk : kCompletionLimit;
}

int cmd_tables(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto rules = require_complete(cfg, s, err);
  const auto& p = s.p();
  const auto& cod = p.codomain();
  auto outcome = tabulate(p, rules, enumeration_limit(cfg));

  if (auto* exceeded = std::get_if<EnumerationExceeded>(&outcome)) {
    if (cfg.format == "machine") {
      err << "enumeration limit " << exceeded->limit
          << " exceeded: complete rewrite system emitted instead\n";
      out << machine_document(s, {RulesStatus::completed, exceeded->system, 0, 0});
    } else {
      out << "enumeration limit exceeded: complete rewrite system is:\n";
      print_rules(out, p, exceeded->system);
    }
    return kOk;
  }

  const auto& tables = std::get<KanTables>(outcome);
  auto name = [&](std::size_t i) { return format_term(p, tables.term(i)); };
  if (cfg.format == "machine") {
    json sets = json::object();
    for (std::uint32_t i = 0; i < cod.object_count(); ++i) {
      json members = json::array();
      for (auto t : tables.elements_of(ObjectId{i})) members.push_back(name(t));
      sets[cod.name(ObjectId{i})] = std::move(members);
    }
    json actions = json::object();
    for (std::uint32_t i = 0; i < cod.arrow_count(); ++i) {
      ArrowId b{i};
      json table = json::object();
      for (auto t : tables.elements_of(cod.source(b))) table[name(t)] = name(tables.act(t, b));
      actions[cod.name(b)] = std::move(table);
    }
    json eps = json::object();
    for (std::uint32_t i = 0; i < p.element_count(); ++i) {
      eps[p.name(ElementId{i})] = name(tables.epsilon(ElementId{i}));
    }
    json doc;
    doc["Status"] = "finite";
    doc["Sets"] = std::move(sets);
    doc["Actions"] = std::move(actions);
    doc["Epsilon"] = std::move(eps);
    out << doc.dump(2) << '\n';
    return kOk;
  }

  for (std::uint32_t i = 0; i < cod.object_count(); ++i) {
    ObjectId b{i};
    out << "K(" << cod.name(b) << ") = {";
    bool first = true;
    for (auto t : tables.elements_of(b)) {
      out << (first ? " " : ", ") << name(t);
      first = false;
    }
    out << (first ? "}" : " }") << '\n';
  }
  for (std::uint32_t i = 0; i < cod.arrow_count(); ++i) {
    ArrowId b{i};
    out << "action " << cod.name(b) << ':';
    for (auto t : tables.elements_of(cod.source(b))) {
      out << ' ' << name(t) << " -> " << name(tables.act(t, b)) << ';';
    }
    out << '\n';
  }
  out << "epsilon:";
  for (std::uint32_t i = 0; i < p.element_count(); ++i) {
    out << ' ' << p.name(ElementId{i}) << " -> " << name(tables.epsilon(ElementId{i})) << ';';
  }
  out << '\n';
  return kOk;
}

int cmd_regex(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto rules = require_complete(cfg, s, err);
  const auto& p = s.p();
  const auto& cod = p.codomain();
  auto aut = build_automaton(p, rules);
  json doc = json::object();
  for (std::uint32_t i = 0; i < cod.object_count(); ++i) {
    ObjectId b{i};
    auto by_element = regex_for_object(aut, b);
    auto line = format_object_language(p, b, by_element);
    if (cfg.format == "machine") {
      json elements = json::object();
      for (const auto& [x, r] : by_element) elements[p.name(x)] = r.format(cod, b);
      doc[cod.name(b)] = {{"Expression", line}, {"Elements", std::move(elements)}};
    } else {
      out << "K(" << cod.name(b) << ") := " << line << '\n';
    }
  }
  if (cfg.format == "machine") out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_automaton(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto rules = require_complete(cfg, s, err);
  out << dump_automaton(s.p(), build_automaton(s.p(), rules)) << '\n';
  return kOk;
}

void print_term(const RunConfig& cfg, const KanPresentation& p, const Term& input,
                const Term& result, std::ostream& out) {
  if (cfg.format == "machine") {
    json doc;
    doc["Input"] = format_term(p, input);
    doc["NormalForm"] = format_term(p, result);
    out << doc.dump(2) << '\n';
  } else {
    out << format_term(p, result) << '\n';
  }
}

int cmd_reduce(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto rules = require_complete(cfg, s, err);
  Term t = parse_term(s.p(), cfg.term);
  print_term(cfg, s.p(), t, normal_form(t, rules), out);
  return kOk;
}

int cmd_act(const RunConfig& cfg, const Session& s, std::ostream& out, std::ostream& err) {
  auto rules = require_complete(cfg, s, err);
  Term t = parse_term(s.p(), cfg.term);
  Path q = cfg.path == "id" ? Path::identity(t.target()) : parse_path(s.p().codomain(), cfg.path);
  Term acted = act(normal_form(t, rules), q);
  print_term(cfg, s.p(), acted, normal_form(acted, rules), out);
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Session s = load(cfg);
  if (cfg.command == "validate") return cmd_validate(cfg, s, out);
  if (cfg.command == "initial") return cmd_initial(cfg, s, out);
  if (cfg.command == "complete") return cmd_complete(cfg, s, out, err);
  if (cfg.command == "tables") return cmd_tables(cfg, s, out, err);
  if (cfg.command == "regex") return cmd_regex(cfg, s, out, err);
  if (cfg.command == "automaton") return cmd_automaton(cfg, s, out, err);
  if (cfg.command == "reduce") return cmd_reduce(cfg, s, out, err);
  if (cfg.command == "act") return cmd_act(cfg, s, out, err);
  throw Failure(kUsage, "unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Completion and tabulation of Kan extension presentations", "kanrew"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--enum-limit", cfg.enum_limit,
                    "Stop tabulating after this many terms (default 1000, env KANREW_ENUM_LIMIT)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-rules", cfg.max_rules, "Completion rule budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-passes", cfg.max_passes, "Completion pass budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--arrow-order", cfg.arrow_order, "Arrows, smallest first")->delimiter(',');
    sub->add_option("--element-order", cfg.element_order, "Elements, smallest first")
        ->delimiter(',');
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("-v,--verbose", cfg.verbose, "Report completion progress on stderr");
  };

  struct Spec {
    const char* name;
    const char* help;
    bool term;
    bool path;
  };
  const Spec specs[] = {
      {"validate", "Check a presentation document", false, false},
      {"initial", "Print the initial rewrite system", false, false},
      {"complete", "Run completion and print the resulting system", false, false},
      {"tables", "Tabulate the sets, actions and epsilon", false, false},
      {"regex", "Print a regular expression for each set", false, false},
      {"automaton", "Dump the normal-form automaton as JSON", false, false},
      {"reduce", "Normal form of a term such as x|b1.b2", true, false},
      {"act", "Normal form of a term acted on by a path", true, true},
  };
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.term) sub->add_option("term", cfg.term, "Term literal x|w")->required();
    if (spec.path) sub->add_option("path", cfg.path, "Path literal b1.b2 or id_B")->required();
    sub->add_option("input", cfg.input, "Presentation document")->required();
    add_common(sub);
    sub->callback([&cfg, name = std::string(spec.name)] { cfg.command = name; });
  }

  std::vector<const char*> argv{"kanrew"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(cfg, out, err);
  } catch (const Failure& f) {
    err << "kanrew: " << f.message() << '\n';
    return f.code();
  } catch (const ParseError& e) {
    err << "kanrew: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "kanrew: " << e.what() << '\n';
    return kValidationError;
  } catch (const CompositionError& e) {
    err << "kanrew: " << e.what() << '\n';
    return kValidationError;
  } catch (const ReductionLimitError& e) {
    err << "kanrew: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace kanrew::cli
