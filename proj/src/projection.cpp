#include "ontokit/projection.hpp"

#include <set>

namespace ontokit {

namespace {

void project_subclass(const ConceptPtr& sub, const ConceptPtr& sup, std::set<Triple>& out) {
    if (sub->kind() != ExprKind::Named)
        return;
    if (sup->kind() == ExprKind::Named) {
        out.insert({sub->iri(), vocab::rdfs_subclassof(), sup->iri()});
        return;
    }
    if ((sup->kind() == ExprKind::Some || sup->kind() == ExprKind::Only) &&
        sup->filler()->kind() == ExprKind::Named)
        out.insert({sub->iri(), sup->role(), sup->filler()->iri()});
}

} // namespace

std::vector<Triple> project(const Ontology& onto) {
    std::set<Triple> out;
    for (const Axiom& ax : onto.axioms()) {
        switch (ax.kind()) {
        case AxiomKind::SubClassOf:
            project_subclass(ax.sub_class(), ax.super_class(), out);
            break;
        case AxiomKind::EquivalentClasses: {
            const auto& members = ax.members();
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j)
                    if (i != j)
                        project_subclass(members[i], members[j], out);
            break;
        }
        case AxiomKind::ClassAssertion:
            if (ax.class_expr()->kind() == ExprKind::Named)
                out.insert({ax.individual(), vocab::rdf_type(), ax.class_expr()->iri()});
            break;
        case AxiomKind::ObjectPropertyAssertion:
            out.insert({ax.subject_individual(), ax.role(), ax.object_individual()});
            break;
        default:
            break;
        }
    }
    return {out.begin(), out.end()};
}

std::string to_ntriples(const std::vector<Triple>& triples) {
    std::string out;
    for (const Triple& t : triples) {
        out += '<';
        out += t.subject.str();
        out += "> <";
        out += t.predicate.str();
        out += "> <";
        out += t.object.str();
        out += "> .\n";
    }
    return out;
}

} // namespace ontokit
