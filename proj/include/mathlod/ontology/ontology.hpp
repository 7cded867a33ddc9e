#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"

namespace mathlod::ontology {

using rdf::Iri;
using ConceptId = Iri;

enum class MetaType { kind, role };

inline std::string_view to_string(MetaType m) { return m == MetaType::kind ? "Kind" : "Role"; }

/// Labels keyed by language code; "" holds untagged labels.
using LabelMap = std::map<std::string, std::vector<std::string>>;

struct Concept {
  ConceptId id;
  LabelMap labels;
  MetaType meta = MetaType::kind;
  std::set<ConceptId> parents;
  std::optional<std::string> definition;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// One participant slot of a reified relationship.
struct ArgumentRole {
  Iri property;
  ConceptId role_concept;
  int position = 1;
  std::string label;

  friend bool operator==(const ArgumentRole&, const ArgumentRole&) = default;
};

struct ReifiedRelationshipClass {
  ConceptId id;
  std::vector<ArgumentRole> arguments;
  std::set<ConceptId> parents;
  LabelMap labels;

  /// Arguments sorted by position.
  std::vector<ArgumentRole> ordered_arguments() const {
    auto out = arguments;
    std::stable_sort(out.begin(), out.end(),
                     [](const ArgumentRole& a, const ArgumentRole& b) { return a.position < b.position; });
    return out;
  }

  const ArgumentRole* find_argument(const Iri& property) const {
    for (const auto& a : arguments)
      if (a.property == property) return &a;
    return nullptr;
  }

  friend bool operator==(const ReifiedRelationshipClass&, const ReifiedRelationshipClass&) = default;
};

class OntologyBuilder;

/// Immutable once built. Concepts and relationships keep insertion order.
class OntologyGraph {
 public:
  explicit OntologyGraph(Iri base_namespace = vocab::omp(""))
      : base_namespace_(std::move(base_namespace)) {}

  const Iri& base_namespace() const noexcept { return base_namespace_; }
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  const std::vector<ReifiedRelationshipClass>& relationships() const noexcept {
    return relationships_;
  }
  /// Triples that were not recognized when lifting from RDF.
  const std::vector<rdf::Triple>& extras() const noexcept { return extras_; }
  /// Prefixes beyond the four defaults, kept from a loaded file.
  const rdf::RdfGraph::PrefixMap& extra_prefixes() const noexcept { return extra_prefixes_; }

  const Concept* find_concept(const ConceptId& id) const {
    for (const auto& c : concepts_)
      if (c.id == id) return &c;
    return nullptr;
  }
  const ReifiedRelationshipClass* find_relationship(const ConceptId& id) const {
    for (const auto& r : relationships_)
      if (r.id == id) return &r;
    return nullptr;
  }

  bool empty() const noexcept { return concepts_.empty() && relationships_.empty(); }

  friend bool operator==(const OntologyGraph&, const OntologyGraph&) = default;

 private:
  friend class OntologyBuilder;

  Iri base_namespace_;
  std::vector<Concept> concepts_;
  std::vector<ReifiedRelationshipClass> relationships_;
  std::vector<rdf::Triple> extras_;
  rdf::RdfGraph::PrefixMap extra_prefixes_;
};

class OntologyBuilder {
 public:
  explicit OntologyBuilder(Iri base_namespace = vocab::omp("")) : graph_(std::move(base_namespace)) {}
  explicit OntologyBuilder(OntologyGraph from) : graph_(std::move(from)) {}

  /// Throws ContractError when a concept with the same id already exists.
  OntologyBuilder& add_concept(Concept c) {
    if (graph_.find_concept(c.id)) throw ContractError("duplicate concept " + c.id.str());
    graph_.concepts_.push_back(std::move(c));
    return *this;
  }

  OntologyBuilder& kind(const Iri& id, std::string en_label = {}, std::set<ConceptId> parents = {}) {
    return add_concept(make(id, MetaType::kind, std::move(en_label), std::move(parents)));
  }
  OntologyBuilder& role(const Iri& id, std::string en_label = {}, std::set<ConceptId> parents = {}) {
    return add_concept(make(id, MetaType::role, std::move(en_label), std::move(parents)));
  }

  OntologyBuilder& add_relationship(ReifiedRelationshipClass r) {
    if (graph_.find_relationship(r.id))
      throw ContractError("duplicate relationship " + r.id.str());
    graph_.relationships_.push_back(std::move(r));
    return *this;
  }

  OntologyBuilder& add_extra(rdf::Triple t) {
    graph_.extras_.push_back(std::move(t));
    return *this;
  }

  OntologyBuilder& add_prefix(std::string prefix, std::string ns) {
    graph_.extra_prefixes_.emplace_back(std::move(prefix), std::move(ns));
    return *this;
  }

  /// Removes a concept or relationship; returns false if absent.
  bool remove(const ConceptId& id) {
    auto& cs = graph_.concepts_;
    auto& rs = graph_.relationships_;
    auto before = cs.size() + rs.size();
    cs.erase(std::remove_if(cs.begin(), cs.end(), [&](const Concept& c) { return c.id == id; }),
             cs.end());
    rs.erase(std::remove_if(rs.begin(), rs.end(),
                            [&](const ReifiedRelationshipClass& r) { return r.id == id; }),
             rs.end());
    return cs.size() + rs.size() != before;
  }

  OntologyGraph build() const { return graph_; }

 private:
  static Concept make(const Iri& id, MetaType meta, std::string en_label,
                      std::set<ConceptId> parents) {
    Concept c{id, {}, meta, std::move(parents), std::nullopt};
    if (!en_label.empty()) c.labels["en"].push_back(std::move(en_label));
    return c;
  }

  OntologyGraph graph_;
};

/// Returns a copy of the relationship class, or nullopt when absent.
inline std::optional<ReifiedRelationshipClass> lookup_relationship(const OntologyGraph& onto,
                                                                   const ConceptId& id) {
  if (const auto* r = onto.find_relationship(id)) return *r;
  return std::nullopt;
}

// --- validation -----------------------------------------------------------

enum class Severity { warning, error };

enum class ViolationKind {
  SubclassCycle,
  RoleWithoutKindAncestor,
  DanglingParent,
  ArgumentRoleNotRole,
  DuplicateArgumentProperty,
  ArgumentPositionGap,
  SharedArgumentProperty,
  EmptyArguments,
  FewArguments,
  HierarchyOverlap,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::SubclassCycle: return "SubclassCycle";
    case ViolationKind::RoleWithoutKindAncestor: return "RoleWithoutKindAncestor";
    case ViolationKind::DanglingParent: return "DanglingParent";
    case ViolationKind::ArgumentRoleNotRole: return "ArgumentRoleNotRole";
    case ViolationKind::DuplicateArgumentProperty: return "DuplicateArgumentProperty";
    case ViolationKind::ArgumentPositionGap: return "ArgumentPositionGap";
    case ViolationKind::SharedArgumentProperty: return "SharedArgumentProperty";
    case ViolationKind::EmptyArguments: return "EmptyArguments";
    case ViolationKind::FewArguments: return "FewArguments";
    case ViolationKind::HierarchyOverlap: return "HierarchyOverlap";
  }
  return "?";
}

inline std::string_view to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

struct Violation {
  ViolationKind kind;
  Severity severity;
  ConceptId subject;
  std::string detail;

  /// e.g. `RoleWithoutKindAncestor(Dividend)`
  std::string to_string() const {
    return std::string(ontology::to_string(kind)) + "(" + std::string(subject.local_name()) + ")";
  }

  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {

template <typename Parents>
std::set<ConceptId> ancestors(const ConceptId& start, const Parents& parents_of) {
  std::set<ConceptId> seen;
  std::vector<ConceptId> stack;
  for (const auto& p : parents_of(start)) stack.push_back(p);
  while (!stack.empty()) {
    ConceptId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const auto& p : parents_of(cur)) stack.push_back(p);
  }
  return seen;
}

}  // namespace detail

/// All violations, errors and warnings, in a deterministic order.
inline std::vector<Violation> validate(const OntologyGraph& onto) {
  std::vector<Violation> out;
  auto error = [&](ViolationKind k, const ConceptId& id, std::string detail) {
    out.push_back({k, Severity::error, id, std::move(detail)});
  };

  auto concept_parents = [&](const ConceptId& id) -> std::set<ConceptId> {
    const auto* c = onto.find_concept(id);
    return c ? c->parents : std::set<ConceptId>{};
  };
  auto relationship_parents = [&](const ConceptId& id) -> std::set<ConceptId> {
    const auto* r = onto.find_relationship(id);
    return r ? r->parents : std::set<ConceptId>{};
  };

  for (const auto& c : onto.concepts()) {
    if (onto.find_relationship(c.id))
      error(ViolationKind::HierarchyOverlap, c.id, "id used in both hierarchies");
    for (const auto& p : c.parents)
      if (!onto.find_concept(p))
        error(ViolationKind::DanglingParent, c.id, "unknown parent " + p.str());
    auto anc = detail::ancestors(c.id, concept_parents);
    if (anc.count(c.id)) error(ViolationKind::SubclassCycle, c.id, "concept is its own ancestor");
    if (c.meta == MetaType::role) {
      bool has_kind = std::any_of(anc.begin(), anc.end(), [&](const ConceptId& a) {
        const auto* ac = onto.find_concept(a);
        return ac && ac->meta == MetaType::kind;
      });
      if (!has_kind)
        error(ViolationKind::RoleWithoutKindAncestor, c.id, "role has no kind ancestor");
    }
  }

  std::map<Iri, ConceptId> property_owner;
  for (const auto& r : onto.relationships()) {
    for (const auto& p : r.parents)
      if (!onto.find_relationship(p))
        error(ViolationKind::DanglingParent, r.id, "unknown parent " + p.str());
    if (detail::ancestors(r.id, relationship_parents).count(r.id))
      error(ViolationKind::SubclassCycle, r.id, "relationship is its own ancestor");

    if (r.arguments.empty()) {
      error(ViolationKind::EmptyArguments, r.id, "relationship has no arguments");
    } else if (r.arguments.size() < 2) {
      out.push_back({ViolationKind::FewArguments, Severity::warning, r.id,
                     "relationship has a single argument"});
    }

    std::set<Iri> props;
    std::vector<int> positions;
    for (const auto& a : r.arguments) {
      if (!props.insert(a.property).second)
        error(ViolationKind::DuplicateArgumentProperty, r.id, "duplicate " + a.property.str());
      auto [it, inserted] = property_owner.emplace(a.property, r.id);
      if (!inserted && it->second != r.id)
        error(ViolationKind::SharedArgumentProperty, r.id,
              a.property.str() + " also belongs to " + it->second.str());
      const auto* rc = onto.find_concept(a.role_concept);
      if (!rc || rc->meta != MetaType::role)
        error(ViolationKind::ArgumentRoleNotRole, r.id,
              a.role_concept.str() + (rc ? " is not a role" : " is not a known concept"));
      positions.push_back(a.position);
    }
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] != static_cast<int>(i + 1)) {
        error(ViolationKind::ArgumentPositionGap, r.id, "positions must be 1..n without gaps");
        break;
      }
    }
  }
  return out;
}

inline bool has_errors(const std::vector<Violation>& vs) {
  return std::any_of(vs.begin(), vs.end(),
                     [](const Violation& v) { return v.severity == Severity::error; });
}

}  // namespace mathlod::ontology
