#ifndef ONTOKIT_AXIOM_HPP
#define ONTOKIT_AXIOM_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ontokit/expression.hpp"
#include "ontokit/iri.hpp"

namespace ontokit {

enum class EntityKind { Class, ObjectProperty, NamedIndividual, AnnotationProperty };

enum class AxiomKind {
    Declaration,
    SubClassOf,
    EquivalentClasses,
    SubObjectPropertyOf,   // named sub-property
    SubPropertyChainOf,    // two-step chain on the left
    ClassAssertion,
    ObjectPropertyAssertion,
    AnnotationAssertion,
};

struct Literal {
    std::string text;
    std::string lang; // empty when untagged

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.text == b.text && a.lang == b.lang;
    }
    friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
};

// One axiom, built via the factories below.  Equality is structural;
// EquivalentClasses keeps its member order (only And/Or operand order
// is normalised away, inside the expressions themselves).
class Axiom {
public:
    static Axiom declaration(EntityKind entity, Iri iri);
    static Axiom subclass_of(ConceptPtr sub, ConceptPtr sup);
    static Axiom equivalent_classes(std::vector<ConceptPtr> members); // needs >= 2
    static Axiom sub_property_of(Iri sub, Iri sup);
    static Axiom sub_property_chain_of(Iri first, Iri second, Iri sup);
    static Axiom class_assertion(ConceptPtr type, Iri individual);
    static Axiom property_assertion(Iri role, Iri subject, Iri object);
    static Axiom annotation(Iri property, Iri subject, Literal value);

    AxiomKind kind() const noexcept { return kind_; }

    // Declaration
    EntityKind entity_kind() const;
    const Iri& entity() const;

    // SubClassOf
    const ConceptPtr& sub_class() const;
    const ConceptPtr& super_class() const;

    // EquivalentClasses
    const std::vector<ConceptPtr>& members() const;

    // SubObjectPropertyOf / SubPropertyChainOf
    const Iri& sub_role() const;          // simple form only
    const Iri& chain_first() const;       // chain form only
    const Iri& chain_second() const;      // chain form only
    const Iri& super_role() const;

    // ClassAssertion
    const ConceptPtr& class_expr() const;
    const Iri& individual() const;

    // ObjectPropertyAssertion
    const Iri& role() const;
    const Iri& subject_individual() const;
    const Iri& object_individual() const;

    // AnnotationAssertion
    const Iri& annotation_property() const;
    const Iri& annotation_subject() const;
    const Literal& value() const;

    // True when the IRI occurs anywhere in the axiom: as an entity, a
    // role (also inside restrictions) or an annotation subject/property.
    bool mentions(const Iri& iri) const;

    // Named concepts and roles used by the axiom's class expressions
    // plus its explicit IRIs, sorted into the given sets.
    void collect_signature(std::set<Iri>& concepts, std::set<Iri>& roles,
                           std::set<Iri>& individuals) const;

    std::size_t hash() const noexcept { return hash_; }

    friend bool operator==(const Axiom& a, const Axiom& b);
    friend bool operator!=(const Axiom& a, const Axiom& b) { return !(a == b); }

private:
    Axiom(AxiomKind kind, std::vector<ConceptPtr> exprs, std::vector<Iri> iris, Literal literal,
          EntityKind entity);
    void compute_hash();
    const Iri& iri_at(std::size_t index, const char* what) const;

    AxiomKind kind_;
    std::vector<ConceptPtr> exprs_;
    std::vector<Iri> iris_;
    Literal literal_;
    EntityKind entity_ = EntityKind::Class;
    std::size_t hash_ = 0;
};

// Named concepts and roles occurring in one expression.
void collect_signature(const ConceptExpr& expr, std::set<Iri>& concepts, std::set<Iri>& roles);

} // namespace ontokit

#endif
