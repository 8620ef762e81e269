#include "kanrew/regex.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kanrew {

struct Regex::Node {
  Kind kind = Kind::empty;
  ArrowId arrow{};
  std::vector<Regex> children;
};

Regex::Regex() : node_(std::make_shared<const Node>()) {}

Regex::Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Regex Regex::identity() {
  return Regex(std::make_shared<const Node>(Node{Kind::identity, {}, {}}));
}

Regex Regex::arrow(ArrowId a) {
  return Regex(std::make_shared<const Node>(Node{Kind::arrow, a, {}}));
}

Regex Regex::concat(const Regex& a, const Regex& b) {
  if (a.is_empty() || b.is_empty()) return Regex();
  std::vector<Regex> parts;
  for (const Regex* r : {&a, &b}) {
    if (r->kind() == Kind::identity) continue;
    if (r->kind() == Kind::concat) {
      parts.insert(parts.end(), r->children().begin(), r->children().end());
    } else {
      parts.push_back(*r);
    }
  }
  if (parts.empty()) return identity();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Kind::concat, {}, std::move(parts)}));
}

namespace {

// r r* or r* r, returned as r*.
std::optional<Regex> as_plus(const Regex& r) {
  if (r.kind() != Regex::Kind::concat) return std::nullopt;
  const auto& parts = r.children();
  std::vector<Regex> body;
  if (parts.back().kind() == Regex::Kind::star) {
    body.assign(parts.begin(), parts.end() - 1);
  } else if (parts.front().kind() == Regex::Kind::star) {
    body.assign(parts.begin() + 1, parts.end());
  } else {
    return std::nullopt;
  }
  const Regex& starred = parts.back().kind() == Regex::Kind::star ? parts.back() : parts.front();
  Regex joined = Regex::identity();
  for (const auto& c : body) joined = Regex::concat(joined, c);
  if (joined == starred.children().front()) return starred;
  return std::nullopt;
}

}  // namespace

Regex Regex::alt(const Regex& a, const Regex& b) {
  std::vector<Regex> parts;
  for (const Regex* r : {&a, &b}) {
    if (r->is_empty()) continue;
    const std::vector<Regex> single{*r};
    const auto& branch = r->kind() == Kind::alt ? r->children() : single;
    for (const auto& c : branch) {
      if (std::find(parts.begin(), parts.end(), c) == parts.end()) parts.push_back(c);
    }
  }
  // id + r r* = r*
  auto id = std::find(parts.begin(), parts.end(), identity());
  if (id != parts.end()) {
    for (auto& c : parts) {
      if (auto starred = as_plus(c)) {
        c = *starred;
        parts.erase(std::find(parts.begin(), parts.end(), identity()));
        break;
      }
    }
  }
  if (parts.empty()) return Regex();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Kind::alt, {}, std::move(parts)}));
}

Regex Regex::star(const Regex& a) {
  switch (a.kind()) {
    case Kind::empty:
    case Kind::identity: return identity();
    case Kind::star: return a;
    case Kind::alt: {
      // (id + r)* = r*
      Regex rest;
      bool had_identity = false;
      for (const auto& c : a.children()) {
        if (c.kind() == Kind::identity) {
          had_identity = true;
        } else {
          rest = alt(rest, c);
        }
      }
      if (had_identity) return star(rest);
      break;
    }
    default: break;
  }
  return Regex(std::make_shared<const Node>(Node{Kind::star, {}, {a}}));
}

Regex::Kind Regex::kind() const noexcept { return node_->kind; }

ArrowId Regex::arrow_id() const {
  if (kind() != Kind::arrow) throw std::logic_error("not an arrow literal");
  return node_->arrow;
}

const std::vector<Regex>& Regex::children() const { return node_->children; }

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Regex::Kind::arrow) return a.node_->arrow == b.node_->arrow;
  return a.children() == b.children();
}

namespace {

// 0 union, 1 concatenation, 2 star, 3 atom
int precedence(Regex::Kind kind) {
  switch (kind) {
    case Regex::Kind::alt: return 0;
    case Regex::Kind::concat: return 1;
    case Regex::Kind::star: return 2;
    default: return 3;
  }
}

std::string format_at(const Regex& r, const CodomainGraph& g, ObjectId id_obj, int level) {
  std::string out;
  switch (r.kind()) {
    case Regex::Kind::empty: out = "0"; break;
    case Regex::Kind::identity: out = "id_" + g.name(id_obj); break;
    case Regex::Kind::arrow: out = g.name(r.arrow_id()); break;
    case Regex::Kind::concat:
      for (const auto& c : r.children()) out += format_at(c, g, id_obj, 2);
      break;
    case Regex::Kind::alt:
      for (std::size_t i = 0; i < r.children().size(); ++i) {
        if (i) out += '+';
        out += format_at(r.children()[i], g, id_obj, 1);
      }
      break;
    case Regex::Kind::star:
      out = format_at(r.children().front(), g, id_obj, 3) + "*";
      break;
  }
  if (precedence(r.kind()) < level) return "(" + out + ")";
  return out;
}

using WordSet = std::set<std::vector<ArrowId>>;

WordSet product(const WordSet& a, const WordSet& b, std::size_t max_length) {
  WordSet out;
  for (const auto& u : a) {
    for (const auto& v : b) {
      if (u.size() + v.size() > max_length) continue;
      auto w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.insert(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::string Regex::format(const CodomainGraph& graph, ObjectId identity_object) const {
  return format_at(*this, graph, identity_object, 0);
}

std::set<std::vector<ArrowId>> Regex::words(std::size_t max_length) const {
  switch (kind()) {
    case Kind::empty: return {};
    case Kind::identity: return {{}};
    case Kind::arrow:
      if (max_length == 0) return {};
      return {{node_->arrow}};
    case Kind::concat: {
      WordSet acc{{}};
      for (const auto& c : children()) acc = product(acc, c.words(max_length), max_length);
      return acc;
    }
    case Kind::alt: {
      WordSet acc;
      for (const auto& c : children()) acc.merge(c.words(max_length));
      return acc;
    }
    case Kind::star: {
      WordSet step = children().front().words(max_length);
      step.erase(std::vector<ArrowId>{});
      WordSet acc{{}};
      WordSet frontier{{}};
      while (!frontier.empty()) {
        WordSet fresh;
        for (auto& w : product(frontier, step, max_length)) {
          if (!acc.contains(w)) fresh.insert(w);
        }
        acc.insert(fresh.begin(), fresh.end());
        frontier = std::move(fresh);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace kanrew
