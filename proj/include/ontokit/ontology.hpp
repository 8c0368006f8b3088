#ifndef ONTOKIT_ONTOLOGY_HPP
#define ONTOKIT_ONTOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontokit/axiom.hpp"

namespace ontokit {

// In-memory ontology: a prefix table, a four-part signature and an
// ordered, duplicate-free list of logical/annotation axioms.
//
// Declarations are folded into the signature rather than stored as
// axioms; adding any logical axiom declares the entities it uses, so
// the signature always covers the axioms.  Annotation subjects are the
// one exception (their entity kind is unknowable from the axiom) and
// only enter the signature through an explicit declaration.  Removing
// an axiom never undeclares anything.
class Ontology {
public:
    Ontology();

    const std::optional<Iri>& ontology_iri() const noexcept { return ontology_iri_; }
    void set_ontology_iri(Iri iri) { ontology_iri_ = std::move(iri); }

    // Prefix name ("owl") to expansion; owl/rdf/rdfs/xsd are pre-registered.
    const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }
    void set_prefix(const std::string& name, const std::string& expansion);

    // True when the axiom was new.  Declarations only touch the signature.
    bool add_axiom(const Axiom& axiom);
    // True when an equal axiom was present; the signature is untouched.
    bool remove_axiom(const Axiom& axiom);
    bool contains_axiom(const Axiom& axiom) const;

    // Insertion order, declarations excluded.
    const std::vector<Axiom>& axioms() const noexcept { return axioms_; }

    // True when the entity was not declared before.  owl:Thing and
    // owl:Nothing are builtin and never enter the signature.
    bool declare(EntityKind kind, const Iri& iri);

    const std::set<Iri>& concepts() const noexcept { return concepts_; }
    const std::set<Iri>& roles() const noexcept { return roles_; }
    const std::set<Iri>& individuals() const noexcept { return individuals_; }
    const std::set<Iri>& annotation_properties() const noexcept { return annotation_properties_; }

    bool contains_concept(const Iri& iri) const { return concepts_.count(iri) != 0; }
    bool contains_role(const Iri& iri) const { return roles_.count(iri) != 0; }
    bool contains_individual(const Iri& iri) const { return individuals_.count(iri) != 0; }

    // Annotation values on a subject, insertion order; the first form
    // filters by property.
    std::vector<Literal> annotations(const Iri& subject, const Iri& property) const;
    const std::vector<std::pair<Iri, Literal>>& annotations(const Iri& subject) const;

    // Parents of a named concept as asserted: superclass expressions of
    // SubClassOf(C, D) plus, for each EquivalentClasses axiom naming C,
    // the other members (a conjunction contributes its top-level
    // conjuncts).  Deduplicated, deterministically ordered.
    std::vector<ConceptPtr> asserted_parents(const Iri& concept_iri) const;
    // Mirror image, restricted to named concepts: E is a child of C iff
    // C appears among asserted_parents(E).
    std::vector<Iri> asserted_children(const Iri& concept_iri) const;

    // Bumped by every successful add/remove; lets derived structures
    // detect staleness.
    std::uint64_t revision() const noexcept { return revision_; }

private:
    std::optional<Iri> ontology_iri_;
    std::map<std::string, std::string> prefixes_;
    std::vector<Axiom> axioms_;
    std::unordered_multimap<std::size_t, std::size_t> axiom_index_; // hash -> position
    std::set<Iri> concepts_;
    std::set<Iri> roles_;
    std::set<Iri> individuals_;
    std::set<Iri> annotation_properties_;
    std::unordered_map<Iri, std::vector<std::pair<Iri, Literal>>> annotation_index_;
    std::uint64_t revision_ = 0;

    std::size_t find_axiom(const Axiom& axiom) const; // npos when absent
    void register_signature(const Axiom& axiom);
};

} // namespace ontokit

#endif
