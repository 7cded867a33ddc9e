#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/fol/fol.hpp"

namespace mathlod::fol {

using Element = int;
using Tuple = std::vector<Element>;

struct FolInterpretation {
  std::set<Element> domain;
  std::map<std::string, Element> const_map;
  std::map<std::string, std::set<Tuple>> pred_map;

  std::string dump(std::string_view indent = "") const {
    std::ostringstream out;
    out << indent << "domain: {";
    bool first = true;
    for (Element e : domain) {
      out << (first ? "" : ", ") << e;
      first = false;
    }
    out << "}\n" << indent << "constants:";
    for (const auto& [c, e] : const_map) out << " " << c << "->" << e;
    out << "\n";
    for (const auto& [p, ext] : pred_map) {
      out << indent << p << ": {";
      bool first_tuple = true;
      for (const auto& t : ext) {
        out << (first_tuple ? "(" : ", (");
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
        out << ")";
        first_tuple = false;
      }
      out << "}\n";
    }
    return out.str();
  }

  auto operator<=>(const FolInterpretation&) const = default;
};

/// Throws ContractError when the interpretation does not cover `s`.
inline bool fol_satisfies(const FolInterpretation& interp, const AtomicSentence& s) {
  auto ext = interp.pred_map.find(s.predicate);
  if (ext == interp.pred_map.end())
    throw ContractError("interpretation has no extension for " + s.predicate);
  Tuple values;
  for (const auto& c : s.args) {
    auto it = interp.const_map.find(c);
    if (it == interp.const_map.end()) throw ContractError("interpretation has no value for " + c);
    if (!interp.domain.count(it->second))
      throw ContractError("constant " + c + " denotes an element outside the domain");
    values.push_back(it->second);
  }
  for (const auto& t : ext->second)
    if (t.size() != values.size())
      throw ContractError("tuple length does not match arity of " + s.predicate);
  return ext->second.count(values) != 0;
}

struct FolEnumerationCaps {
  std::size_t max_domain_size = 3;
  std::size_t max_constants = 4;
  std::size_t max_atom_slots = 64;
};

/// Lazily enumerates the interpretations over {0..d-1} that satisfy a set
/// of ground atoms.
///
/// Constant maps are visited in odometer order (first constant most
/// significant). For each, the atoms fix some predicate tuples to "true";
/// the remaining tuples are free and are enumerated as a binary counter, so
/// only models are ever built.
class FolModelEnumerator {
 public:
  FolModelEnumerator(Signature signature, std::vector<AtomicSentence> required,
                     std::size_t domain_size, FolEnumerationCaps caps = {})
      : sig_(std::move(signature)), required_(std::move(required)), d_(domain_size) {
    if (d_ < 1) throw SizeError("domain size must be positive");
    if (d_ > caps.max_domain_size)
      throw SizeError("domain size " + std::to_string(d_) + " exceeds cap " +
                      std::to_string(caps.max_domain_size));
    if (sig_.constants.size() > caps.max_constants)
      throw SizeError(std::to_string(sig_.constants.size()) + " constants exceed cap " +
                      std::to_string(caps.max_constants));
    for (const auto& s : required_) check_well_formed(s, sig_);

    std::size_t offset = 0;
    for (const auto& [name, arity] : sig_.predicates) {
      std::size_t count = 1;
      for (int k = 0; k < arity; ++k) {
        count *= d_;
        if (count > caps.max_atom_slots) break;
      }
      layout_.push_back({name, arity, offset, count});
      offset += count;
      if (offset > caps.max_atom_slots)
        throw SizeError("predicate tuples exceed cap of " + std::to_string(caps.max_atom_slots));
    }
    total_bits_ = offset;
    constants_.assign(sig_.constants.begin(), sig_.constants.end());
    const_values_.assign(constants_.size(), 0);
    start_constant_map();
  }

  /// Every interpretation of the signature (no sentence required).
  static FolModelEnumerator all_interpretations(const Signature& sig, std::size_t domain_size,
                                                FolEnumerationCaps caps = {}) {
    return FolModelEnumerator(sig, {}, domain_size, caps);
  }

  void reset() {
    std::fill(const_values_.begin(), const_values_.end(), 0);
    done_ = false;
    start_constant_map();
  }

  std::optional<FolInterpretation> next() {
    if (done_) return std::nullopt;
    FolInterpretation out = build();
    advance();
    return out;
  }

  std::size_t domain_size() const noexcept { return d_; }
  const Signature& signature() const noexcept { return sig_; }

 private:
  struct PredicateLayout {
    std::string name;
    int arity;
    std::size_t offset;
    std::size_t count;
  };

  std::size_t tuple_bit(const std::string& pred, const Tuple& t) const {
    for (const auto& p : layout_) {
      if (p.name != pred) continue;
      std::size_t rank = 0;
      for (Element e : t) rank = rank * d_ + static_cast<std::size_t>(e);
      return p.offset + rank;
    }
    throw ContractError("unknown predicate " + pred);
  }

  void start_constant_map() {
    std::set<std::size_t> forced;
    for (const auto& s : required_) {
      Tuple t;
      for (const auto& c : s.args) t.push_back(value_of(c));
      forced.insert(tuple_bit(s.predicate, t));
    }
    forced_.assign(forced.begin(), forced.end());
    free_.clear();
    for (std::size_t b = 0; b < total_bits_; ++b)
      if (!forced.count(b)) free_.push_back(b);
    counter_ = 0;
  }

  Element value_of(const std::string& constant) const {
    for (std::size_t k = 0; k < constants_.size(); ++k)
      if (constants_[k] == constant) return const_values_[k];
    throw ContractError("unknown constant " + constant);
  }

  FolInterpretation build() const {
    FolInterpretation out;
    for (std::size_t e = 0; e < d_; ++e) out.domain.insert(static_cast<Element>(e));
    for (std::size_t k = 0; k < constants_.size(); ++k) out.const_map[constants_[k]] = const_values_[k];
    std::vector<bool> bits(total_bits_, false);
    for (std::size_t b : forced_) bits[b] = true;
    for (std::size_t j = 0; j < free_.size(); ++j)
      if ((counter_ >> j) & 1U) bits[free_[j]] = true;
    for (const auto& p : layout_) {
      auto& ext = out.pred_map[p.name];
      for (std::size_t rank = 0; rank < p.count; ++rank) {
        if (!bits[p.offset + rank]) continue;
        Tuple t(static_cast<std::size_t>(p.arity));
        std::size_t r = rank;
        for (int k = p.arity - 1; k >= 0; --k) {
          t[static_cast<std::size_t>(k)] = static_cast<Element>(r % d_);
          r /= d_;
        }
        ext.insert(std::move(t));
      }
    }
    return out;
  }

  void advance() {
    const std::size_t n = free_.size();
    bool exhausted = n == 0 || (n < 64 ? counter_ + 1 == (std::uint64_t{1} << n)
                                       : counter_ == UINT64_MAX);
    if (!exhausted) {
      ++counter_;
      return;
    }
    // Next constant map.
    for (std::size_t k = constants_.size(); k-- > 0;) {
      if (static_cast<std::size_t>(++const_values_[k]) < d_) {
        start_constant_map();
        return;
      }
      const_values_[k] = 0;
    }
    done_ = true;
  }

  Signature sig_;
  std::vector<AtomicSentence> required_;
  std::size_t d_;
  std::vector<PredicateLayout> layout_;
  std::size_t total_bits_ = 0;
  std::vector<std::string> constants_;
  std::vector<Element> const_values_;
  std::vector<std::size_t> forced_;
  std::vector<std::size_t> free_;
  std::uint64_t counter_ = 0;
  bool done_ = false;
};

/// Models of T ∪ {extra} over {0..domain_size-1}.
inline FolModelEnumerator enumerate_fol_models(const Theory& theory, const AtomicSentence& extra,
                                               std::size_t domain_size,
                                               FolEnumerationCaps caps = {}) {
  std::vector<AtomicSentence> required(theory.axioms.begin(), theory.axioms.end());
  required.push_back(extra);
  return FolModelEnumerator(theory.signature, std::move(required), domain_size, caps);
}

/// Models of T alone.
inline FolModelEnumerator enumerate_fol_models(const Theory& theory, std::size_t domain_size,
                                               FolEnumerationCaps caps = {}) {
  return FolModelEnumerator(theory.signature,
                            std::vector<AtomicSentence>(theory.axioms.begin(), theory.axioms.end()),
                            domain_size, caps);
}

}  // namespace mathlod::fol
