#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mathlod/rdf/term.hpp"

namespace mathlod::rdf {

namespace detail {

/// Colour refinement over blank nodes: start from the multiset of
/// (position, predicate, ground neighbour) facts, then mix in neighbour
/// colours for a few rounds. Equal colours are necessary for a match.
inline std::map<BlankNode, std::size_t> blank_colours(const RdfGraph& g) {
  std::map<BlankNode, std::size_t> colour;
  for (const auto& b : g.blank_nodes()) colour[b] = 0;
  auto term_hash = [&](const Term& t, bool use_colour) -> std::size_t {
    if (auto* b = std::get_if<BlankNode>(&t))
      return use_colour ? colour.at(*b) * 31 + 7 : 7;
    return std::hash<std::string>{}(to_string(t));
  };
  const std::size_t rounds = std::min<std::size_t>(colour.size() + 1, 6);
  for (std::size_t round = 0; round <= rounds; ++round) {
    std::map<BlankNode, std::vector<std::size_t>> facts;
    for (const auto& t : g.triples()) {
      std::size_t ph = std::hash<std::string>{}(t.predicate.str());
      if (auto* b = std::get_if<BlankNode>(&t.subject))
        facts[*b].push_back(ph * 3 + 1 + term_hash(t.object, round > 0) * 1000003);
      if (auto* b = std::get_if<BlankNode>(&t.object))
        facts[*b].push_back(ph * 3 + 2 + term_hash(t.subject, round > 0) * 1000003);
    }
    std::map<BlankNode, std::size_t> next;
    for (auto& [b, list] : facts) {
      std::sort(list.begin(), list.end());
      std::size_t h = colour.at(b);
      for (std::size_t f : list) h = h * 1099511628211ULL ^ f;
      next[b] = h;
    }
    colour = std::move(next);
  }
  return colour;
}

class IsoMatcher {
 public:
  IsoMatcher(const RdfGraph& a, const RdfGraph& b) : a_(a), b_(b) {}

  bool run() {
    if (a_.size() != b_.size()) return false;
    auto blanks_a = a_.blank_nodes();
    auto blanks_b = b_.blank_nodes();
    if (blanks_a.size() != blanks_b.size()) return false;
    for (const auto& t : a_.triples())
      if (!is_blank(t.subject) && !is_blank(t.object) && !b_.contains(t)) return false;

    auto ca = blank_colours(a_);
    auto cb = blank_colours(b_);
    std::map<std::size_t, std::size_t> hist_a, hist_b;
    for (auto& [n, c] : ca) ++hist_a[c];
    for (auto& [n, c] : cb) ++hist_b[c];
    if (hist_a != hist_b) return false;

    // Assign rarest colour classes first.
    order_ = blanks_a;
    std::stable_sort(order_.begin(), order_.end(), [&](const BlankNode& x, const BlankNode& y) {
      return hist_a[ca.at(x)] < hist_a[ca.at(y)];
    });
    for (const auto& x : order_) {
      std::vector<BlankNode> cands;
      for (const auto& y : blanks_b)
        if (cb.at(y) == ca.at(x)) cands.push_back(y);
      candidates_[x] = std::move(cands);
    }
    for (const auto& t : a_.triples()) {
      if (auto* s = std::get_if<BlankNode>(&t.subject)) touching_[*s].push_back(&t);
      if (auto* o = std::get_if<BlankNode>(&t.object))
        if (!(is_blank(t.subject) && std::get<BlankNode>(t.subject) == *o))
          touching_[*o].push_back(&t);
    }
    return search(0);
  }

 private:
  std::optional<Term> image(const Term& t) const {
    if (auto* bn = std::get_if<BlankNode>(&t)) {
      auto it = map_.find(*bn);
      if (it == map_.end()) return std::nullopt;
      return Term(it->second);
    }
    return t;
  }

  bool consistent(const BlankNode& x) const {
    auto it = touching_.find(x);
    if (it == touching_.end()) return true;
    for (const Triple* t : it->second) {
      auto s = image(t->subject);
      auto o = image(t->object);
      if (!s || !o) continue;
      if (!b_.contains(Triple(*s, t->predicate, *o))) return false;
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == order_.size()) return true;
    const BlankNode& x = order_[k];
    for (const auto& y : candidates_.at(x)) {
      if (used_.count(y)) continue;
      map_.emplace(x, y);
      used_.insert(y);
      if (consistent(x) && search(k + 1)) return true;
      map_.erase(x);
      used_.erase(y);
    }
    return false;
  }

  const RdfGraph& a_;
  const RdfGraph& b_;
  std::vector<BlankNode> order_;
  std::map<BlankNode, std::vector<BlankNode>> candidates_;
  std::map<BlankNode, std::vector<const Triple*>> touching_;
  std::map<BlankNode, BlankNode> map_;
  std::set<BlankNode> used_;
};

}  // namespace detail

/// True iff some bijection between blank nodes makes the triple sets equal.
/// Prefix maps are ignored.
inline bool graphs_isomorphic(const RdfGraph& a, const RdfGraph& b) {
  return detail::IsoMatcher(a, b).run();
}

}  // namespace mathlod::rdf
