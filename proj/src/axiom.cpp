#include "ontokit/axiom.hpp"

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool expr_mentions(const ConceptExpr& e, const Iri& iri) {
    switch (e.kind()) {
    case ExprKind::Top:
    case ExprKind::Bottom:
        return false;
    case ExprKind::Named:
        return e.iri() == iri;
    case ExprKind::Not:
        return expr_mentions(*e.filler(), iri);
    case ExprKind::Some:
    case ExprKind::Only:
        return e.role() == iri || expr_mentions(*e.filler(), iri);
    case ExprKind::And:
    case ExprKind::Or:
        for (const auto& op : e.operands())
            if (expr_mentions(*op, iri))
                return true;
        return false;
    }
    return false;
}

} // namespace

void collect_signature(const ConceptExpr& expr, std::set<Iri>& concepts, std::set<Iri>& roles) {
    switch (expr.kind()) {
    case ExprKind::Top:
    case ExprKind::Bottom:
        return;
    case ExprKind::Named:
        concepts.insert(expr.iri());
        return;
    case ExprKind::Not:
        collect_signature(*expr.filler(), concepts, roles);
        return;
    case ExprKind::Some:
    case ExprKind::Only:
        roles.insert(expr.role());
        collect_signature(*expr.filler(), concepts, roles);
        return;
    case ExprKind::And:
    case ExprKind::Or:
        for (const auto& op : expr.operands())
            collect_signature(*op, concepts, roles);
        return;
    }
}

Axiom::Axiom(AxiomKind kind, std::vector<ConceptPtr> exprs, std::vector<Iri> iris, Literal literal,
             EntityKind entity)
    : kind_(kind), exprs_(std::move(exprs)), iris_(std::move(iris)),
      literal_(std::move(literal)), entity_(entity) {
    compute_hash();
}

void Axiom::compute_hash() {
    std::size_t h = static_cast<std::size_t>(kind_) + 0x811c9dc5;
    if (kind_ == AxiomKind::Declaration)
        h = mix(h, static_cast<std::size_t>(entity_));
    for (const auto& e : exprs_)
        h = mix(h, e->hash());
    for (const auto& i : iris_)
        h = mix(h, std::hash<Iri>{}(i));
    h = mix(h, std::hash<std::string>{}(literal_.text));
    h = mix(h, std::hash<std::string>{}(literal_.lang));
    hash_ = h;
}

Axiom Axiom::declaration(EntityKind entity, Iri iri) {
    return Axiom(AxiomKind::Declaration, {}, {std::move(iri)}, {}, entity);
}

Axiom Axiom::subclass_of(ConceptPtr sub, ConceptPtr sup) {
    if (!sub || !sup)
        throw ValidationError("SubClassOf needs two class expressions");
    return Axiom(AxiomKind::SubClassOf, {std::move(sub), std::move(sup)}, {}, {},
                 EntityKind::Class);
}

Axiom Axiom::equivalent_classes(std::vector<ConceptPtr> members) {
    if (members.size() < 2)
        throw ValidationError("EquivalentClasses needs at least two class expressions");
    for (const auto& m : members)
        if (!m)
            throw ValidationError("EquivalentClasses has a null member");
    return Axiom(AxiomKind::EquivalentClasses, std::move(members), {}, {}, EntityKind::Class);
}

Axiom Axiom::sub_property_of(Iri sub, Iri sup) {
    return Axiom(AxiomKind::SubObjectPropertyOf, {}, {std::move(sub), std::move(sup)}, {},
                 EntityKind::ObjectProperty);
}

Axiom Axiom::sub_property_chain_of(Iri first, Iri second, Iri sup) {
    return Axiom(AxiomKind::SubPropertyChainOf, {},
                 {std::move(first), std::move(second), std::move(sup)}, {},
                 EntityKind::ObjectProperty);
}

Axiom Axiom::class_assertion(ConceptPtr type, Iri individual) {
    if (!type)
        throw ValidationError("ClassAssertion needs a class expression");
    return Axiom(AxiomKind::ClassAssertion, {std::move(type)}, {std::move(individual)}, {},
                 EntityKind::NamedIndividual);
}

Axiom Axiom::property_assertion(Iri role, Iri subject, Iri object) {
    return Axiom(AxiomKind::ObjectPropertyAssertion, {},
                 {std::move(role), std::move(subject), std::move(object)}, {},
                 EntityKind::NamedIndividual);
}

Axiom Axiom::annotation(Iri property, Iri subject, Literal value) {
    return Axiom(AxiomKind::AnnotationAssertion, {}, {std::move(property), std::move(subject)},
                 std::move(value), EntityKind::AnnotationProperty);
}

const Iri& Axiom::iri_at(std::size_t index, const char* what) const {
    if (index >= iris_.size())
        throw ValidationError(std::string(what) + " is not defined for this axiom kind");
    return iris_[index];
}

EntityKind Axiom::entity_kind() const {
    if (kind_ != AxiomKind::Declaration)
        throw ValidationError("entity_kind() is only defined for declarations");
    return entity_;
}

const Iri& Axiom::entity() const {
    if (kind_ != AxiomKind::Declaration)
        throw ValidationError("entity() is only defined for declarations");
    return iris_[0];
}

const ConceptPtr& Axiom::sub_class() const {
    if (kind_ != AxiomKind::SubClassOf)
        throw ValidationError("sub_class() is only defined for SubClassOf");
    return exprs_[0];
}

const ConceptPtr& Axiom::super_class() const {
    if (kind_ != AxiomKind::SubClassOf)
        throw ValidationError("super_class() is only defined for SubClassOf");
    return exprs_[1];
}

const std::vector<ConceptPtr>& Axiom::members() const {
    if (kind_ != AxiomKind::EquivalentClasses)
        throw ValidationError("members() is only defined for EquivalentClasses");
    return exprs_;
}

const Iri& Axiom::sub_role() const {
    if (kind_ != AxiomKind::SubObjectPropertyOf)
        throw ValidationError("sub_role() is only defined for SubObjectPropertyOf");
    return iris_[0];
}

const Iri& Axiom::chain_first() const {
    if (kind_ != AxiomKind::SubPropertyChainOf)
        throw ValidationError("chain_first() is only defined for property chains");
    return iris_[0];
}

const Iri& Axiom::chain_second() const {
    if (kind_ != AxiomKind::SubPropertyChainOf)
        throw ValidationError("chain_second() is only defined for property chains");
    return iris_[1];
}

const Iri& Axiom::super_role() const {
    if (kind_ == AxiomKind::SubObjectPropertyOf)
        return iris_[1];
    if (kind_ == AxiomKind::SubPropertyChainOf)
        return iris_[2];
    throw ValidationError("super_role() is only defined for property axioms");
}

const ConceptPtr& Axiom::class_expr() const {
    if (kind_ != AxiomKind::ClassAssertion)
        throw ValidationError("class_expr() is only defined for ClassAssertion");
    return exprs_[0];
}

const Iri& Axiom::individual() const {
    if (kind_ != AxiomKind::ClassAssertion)
        throw ValidationError("individual() is only defined for ClassAssertion");
    return iris_[0];
}

const Iri& Axiom::role() const {
    if (kind_ != AxiomKind::ObjectPropertyAssertion)
        throw ValidationError("role() is only defined for ObjectPropertyAssertion");
    return iris_[0];
}

const Iri& Axiom::subject_individual() const {
    if (kind_ != AxiomKind::ObjectPropertyAssertion)
        throw ValidationError("subject_individual() is only defined for ObjectPropertyAssertion");
    return iris_[1];
}

const Iri& Axiom::object_individual() const {
    if (kind_ != AxiomKind::ObjectPropertyAssertion)
        throw ValidationError("object_individual() is only defined for ObjectPropertyAssertion");
    return iris_[2];
}

const Iri& Axiom::annotation_property() const {
    if (kind_ != AxiomKind::AnnotationAssertion)
        throw ValidationError("annotation_property() is only defined for AnnotationAssertion");
    return iris_[0];
}

const Iri& Axiom::annotation_subject() const {
    if (kind_ != AxiomKind::AnnotationAssertion)
        throw ValidationError("annotation_subject() is only defined for AnnotationAssertion");
    return iris_[1];
}

const Literal& Axiom::value() const {
    if (kind_ != AxiomKind::AnnotationAssertion)
        throw ValidationError("value() is only defined for AnnotationAssertion");
    return literal_;
}

bool Axiom::mentions(const Iri& iri) const {
    for (const auto& i : iris_)
        if (i == iri)
            return true;
    for (const auto& e : exprs_)
        if (expr_mentions(*e, iri))
            return true;
    return false;
}

void Axiom::collect_signature(std::set<Iri>& concepts, std::set<Iri>& roles,
                              std::set<Iri>& individuals) const {
    switch (kind_) {
    case AxiomKind::Declaration:
    case AxiomKind::AnnotationAssertion:
        // Declarations are handled by the ontology; annotation subjects
        // have no known entity kind and stay out of the logical signature.
        return;
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
        for (const auto& e : exprs_)
            ontokit::collect_signature(*e, concepts, roles);
        return;
    case AxiomKind::SubObjectPropertyOf:
    case AxiomKind::SubPropertyChainOf:
        for (const auto& i : iris_)
            roles.insert(i);
        return;
    case AxiomKind::ClassAssertion:
        ontokit::collect_signature(*exprs_[0], concepts, roles);
        individuals.insert(iris_[0]);
        return;
    case AxiomKind::ObjectPropertyAssertion:
        roles.insert(iris_[0]);
        individuals.insert(iris_[1]);
        individuals.insert(iris_[2]);
        return;
    }
}

bool operator==(const Axiom& a, const Axiom& b) {
    if (a.kind_ != b.kind_ || a.hash_ != b.hash_)
        return false;
    if (a.kind_ == AxiomKind::Declaration && a.entity_ != b.entity_)
        return false;
    if (a.iris_ != b.iris_ || a.literal_ != b.literal_)
        return false;
    if (a.exprs_.size() != b.exprs_.size())
        return false;
    for (std::size_t i = 0; i < a.exprs_.size(); ++i)
        if (*a.exprs_[i] != *b.exprs_[i])
            return false;
    return true;
}

} // namespace ontokit
