#include "kanrew/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "kanrew/factor_matcher.hpp"

namespace kanrew {

namespace {

// Trie of the term-rule left-side paths belonging to one element.
struct PrefixTrie {
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> children{{}};
  std::vector<bool> terminal{false};

  void insert(std::span<const ArrowId> word) {
    std::uint32_t node = 0;
    for (ArrowId a : word) {
      auto [it, fresh] = children[node].try_emplace(a.value(), 0);
      if (fresh) {
        it->second = static_cast<std::uint32_t>(children.size());
        children.emplace_back();
        terminal.push_back(false);
      }
      node = it->second;
    }
    terminal[node] = true;
  }
};

}  // namespace

std::optional<std::size_t> NormalFormAutomaton::next(std::size_t state, ArrowId a) const {
  for (const auto& [arrow, target] : transitions_.at(state)) {
    if (arrow == a) return target;
  }
  return std::nullopt;
}

bool NormalFormAutomaton::accepts(ElementId x, std::span<const ArrowId> word) const {
  auto s = start(x);
  for (ArrowId a : word) {
    if (!s) return false;
    s = next(*s, a);
  }
  return s.has_value();
}

NormalFormAutomaton build_automaton(const KanPresentation& p, const RewriteSystem& rules) {
  const auto& graph = p.codomain();
  std::vector<std::span<const ArrowId>> patterns;
  for (const auto& r : rules.path_rules) patterns.push_back(r.lhs.arrows());
  FactorMatcher matcher(graph.arrow_count(), patterns);

  std::vector<PrefixTrie> tries(p.element_count());
  for (const auto& r : rules.term_rules) tries[r.lhs.element.value()].insert(r.lhs.path.arrows());

  NormalFormAutomaton aut;
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;
  std::map<Key, std::size_t> index;
  std::deque<std::size_t> queue;
  auto intern = [&](const NormalFormAutomaton::State& s) {
    Key key{s.object.value(), s.matcher, s.element.value(), s.prefix};
    auto [it, fresh] = index.try_emplace(key, aut.states_.size());
    if (fresh) {
      aut.states_.push_back(s);
      aut.transitions_.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };

  for (std::uint32_t i = 0; i < p.element_count(); ++i) {
    ElementId x{i};
    if (tries[i].terminal[0]) {
      aut.starts_.push_back(std::nullopt);
      continue;
    }
    std::uint32_t prefix = tries[i].children[0].empty() ? NormalFormAutomaton::escaped : 0;
    aut.starts_.push_back(intern({p.object_image(p.owner(x)), FactorMatcher::root, x, prefix}));
  }

  while (!queue.empty()) {
    std::size_t from = queue.front();
    queue.pop_front();
    const auto state = aut.states_[from];
    const auto& trie = tries[state.element.value()];
    for (ArrowId b : graph.arrows_from(state.object)) {
      auto m = matcher.next(state.matcher, b);
      if (matcher.matched(m)) continue;
      std::uint32_t prefix = NormalFormAutomaton::escaped;
      if (state.prefix != NormalFormAutomaton::escaped) {
        const auto& kids = trie.children[state.prefix];
        if (auto it = kids.find(b.value()); it != kids.end()) {
          if (trie.terminal[it->second]) continue;
          prefix = it->second;
        }
      }
      std::size_t to = intern({graph.target(b), m, state.element, prefix});
      aut.transitions_[from].emplace_back(b, to);
    }
  }
  return aut;
}

namespace {

// Generalized automaton for state elimination; node ids are dense.
class EliminationGraph {
 public:
  explicit EliminationGraph(std::size_t nodes) : out_(nodes), in_(nodes) {}

  void add(std::size_t from, std::size_t to, const Regex& r) {
    auto [it, fresh] = out_[from].try_emplace(to, r);
    if (!fresh) it->second = Regex::alt(it->second, r);
    in_[to].insert(from);
  }

  Regex edge(std::size_t from, std::size_t to) const {
    auto it = out_[from].find(to);
    return it == out_[from].end() ? Regex() : it->second;
  }

  void eliminate(std::size_t k) {
    Regex loop = Regex::star(edge(k, k));
    std::vector<std::size_t> preds(in_[k].begin(), in_[k].end());
    std::vector<std::pair<std::size_t, Regex>> succs(out_[k].begin(), out_[k].end());
    for (std::size_t i : preds) {
      if (i == k) continue;
      Regex head = Regex::concat(edge(i, k), loop);
      for (const auto& [j, tail] : succs) {
        if (j == k) continue;
        add(i, j, Regex::concat(head, tail));
      }
      out_[i].erase(k);
    }
    for (const auto& [j, tail] : succs) in_[j].erase(k);
    out_[k].clear();
    in_[k].clear();
  }

  // In-degree times out-degree, ignoring self-loops.
  std::size_t weight(std::size_t k) const {
    std::size_t in = in_[k].size() - (in_[k].contains(k) ? 1 : 0);
    std::size_t out = out_[k].size() - (out_[k].contains(k) ? 1 : 0);
    return in * out;
  }

 private:
  std::vector<std::map<std::size_t, Regex>> out_;
  std::vector<std::set<std::size_t>> in_;
};

std::vector<std::size_t> reachable_from(const NormalFormAutomaton& aut, std::size_t start) {
  std::vector<bool> seen(aut.size(), false);
  std::vector<std::size_t> order{start};
  seen[start] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [a, to] : aut.transitions(order[i])) {
      if (!seen[to]) {
        seen[to] = true;
        order.push_back(to);
      }
    }
  }
  return order;
}

}  // namespace

std::map<ElementId, Regex> regex_for_object(const NormalFormAutomaton& aut, ObjectId b) {
  std::map<ElementId, Regex> out;
  const auto states = aut.states();
  for (std::uint32_t xi = 0; xi < aut.element_count(); ++xi) {
    ElementId x{xi};
    auto start = aut.start(x);
    if (!start) continue;
    auto forward = reachable_from(aut, *start);

    // Keep only states from which some state at b is reachable.
    std::unordered_map<std::size_t, std::vector<std::size_t>> preds;
    for (std::size_t s : forward) {
      for (const auto& [a, to] : aut.transitions(s)) preds[to].push_back(s);
    }
    std::set<std::size_t> live;
    std::deque<std::size_t> queue;
    for (std::size_t s : forward) {
      if (states[s].object == b && live.insert(s).second) queue.push_back(s);
    }
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (std::size_t pr : preds[s]) {
        if (live.insert(pr).second) queue.push_back(pr);
      }
    }
    if (!live.contains(*start)) continue;

    std::vector<std::size_t> nodes(live.begin(), live.end());
    std::unordered_map<std::size_t, std::size_t> dense;
    for (std::size_t i = 0; i < nodes.size(); ++i) dense[nodes[i]] = i;
    const std::size_t initial = nodes.size();
    const std::size_t final = nodes.size() + 1;
    EliminationGraph g(nodes.size() + 2);
    g.add(initial, dense[*start], Regex::identity());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (states[nodes[i]].object == b) g.add(i, final, Regex::identity());
      for (const auto& [a, to] : aut.transitions(nodes[i])) {
        if (auto it = dense.find(to); it != dense.end()) g.add(i, it->second, Regex::arrow(a));
      }
    }

    std::vector<bool> gone(nodes.size(), false);
    for (std::size_t round = 0; round < nodes.size(); ++round) {
      std::size_t best = nodes.size();
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (gone[k]) continue;
        if (best == nodes.size() || g.weight(k) < g.weight(best)) best = k;
      }
      g.eliminate(best);
      gone[best] = true;
    }
    Regex r = g.edge(initial, final);
    if (!r.is_empty()) out.emplace(x, std::move(r));
  }
  return out;
}

std::vector<Path> sample_language(const NormalFormAutomaton& aut, ElementId x,
                                  std::size_t max_length) {
  std::vector<Path> out;
  auto start = aut.start(x);
  if (!start) return out;
  ObjectId base = aut.states()[*start].object;

  std::vector<ArrowId> word;
  auto visit = [&](auto&& self, std::size_t s) -> void {
    out.emplace_back(base, aut.states()[s].object, word);
    if (word.size() == max_length) return;
    for (const auto& [a, to] : aut.transitions(s)) {
      word.push_back(a);
      self(self, to);
      word.pop_back();
    }
  };
  visit(visit, *start);

  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.arrows().begin(), a.arrows().end(),
                                        b.arrows().begin(), b.arrows().end());
  });
  return out;
}

std::string format_object_language(const KanPresentation& p, ObjectId b,
                                   const std::map<ElementId, Regex>& by_element) {
  std::vector<std::pair<Regex, std::vector<ElementId>>> groups;
  for (const auto& [x, r] : by_element) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == r; });
    if (it == groups.end()) {
      groups.push_back({r, {x}});
    } else {
      it->second.push_back(x);
    }
  }
  if (groups.empty()) return "0";

  std::string out;
  for (const auto& [r, xs] : groups) {
    if (!out.empty()) out += " + ";
    if (xs.size() == 1) {
      out += p.name(xs.front());
    } else {
      out += '(';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += '+';
        out += p.name(xs[i]);
      }
      out += ')';
    }
    out += '|';
    std::string body = r.format(p.codomain(), b);
    out += r.kind() == Regex::Kind::alt ? "(" + body + ")" : body;
  }
  return out;
}

std::string dump_automaton(const KanPresentation& p, const NormalFormAutomaton& aut) {
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < aut.size(); ++i) {
    const auto& s = aut.states()[i];
    nlohmann::ordered_json transitions = nlohmann::ordered_json::object();
    for (const auto& [a, to] : aut.transitions(i)) transitions[p.codomain().name(a)] = to;
    nlohmann::ordered_json st;
    st["id"] = i;
    st["object"] = p.codomain().name(s.object);
    st["element"] = p.name(s.element);
    st["matcher"] = s.matcher;
    if (s.prefix == NormalFormAutomaton::escaped) {
      st["prefix"] = nullptr;
    } else {
      st["prefix"] = s.prefix;
    }
    st["transitions"] = std::move(transitions);
    states.push_back(std::move(st));
  }
  nlohmann::ordered_json starts = nlohmann::ordered_json::object();
  for (std::uint32_t i = 0; i < p.element_count(); ++i) {
    auto s = aut.start(ElementId{i});
    if (s) {
      starts[p.name(ElementId{i})] = *s;
    } else {
      starts[p.name(ElementId{i})] = nullptr;
    }
  }
  nlohmann::ordered_json doc;
  doc["Start"] = std::move(starts);
  doc["States"] = std::move(states);
  return doc.dump(2);
}

}  // namespace kanrew
