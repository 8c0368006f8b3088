#include "ontokit/serializer.hpp"

#include <sstream>

namespace ontokit {

namespace {

void render_iri(std::ostream& out, const Iri& iri) {
    if (iri == vocab::thing())
        out << "owl:Thing";
    else if (iri == vocab::nothing())
        out << "owl:Nothing";
    else
        out << '<' << iri.str() << '>';
}

void render_expr(std::ostream& out, const ConceptExpr& e) {
    switch (e.kind()) {
    case ExprKind::Top:
        out << "owl:Thing";
        return;
    case ExprKind::Bottom:
        out << "owl:Nothing";
        return;
    case ExprKind::Named:
        render_iri(out, e.iri());
        return;
    case ExprKind::Not:
        out << "ObjectComplementOf(";
        render_expr(out, *e.filler());
        out << ')';
        return;
    case ExprKind::Some:
    case ExprKind::Only:
        out << (e.kind() == ExprKind::Some ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(");
        render_iri(out, e.role());
        out << ' ';
        render_expr(out, *e.filler());
        out << ')';
        return;
    case ExprKind::And:
    case ExprKind::Or: {
        out << (e.kind() == ExprKind::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(");
        bool first = true;
        for (const auto& op : e.operands()) {
            if (!first)
                out << ' ';
            first = false;
            render_expr(out, *op);
        }
        out << ')';
        return;
    }
    }
}

void render_literal(std::ostream& out, const Literal& lit) {
    out << '"';
    for (char c : lit.text) {
        if (c == '"' || c == '\\')
            out << '\\';
        out << c;
    }
    out << '"';
    if (!lit.lang.empty())
        out << '@' << lit.lang;
}

void render_axiom(std::ostream& out, const Axiom& ax) {
    switch (ax.kind()) {
    case AxiomKind::Declaration: {
        const char* kind = nullptr;
        switch (ax.entity_kind()) {
        case EntityKind::Class: kind = "Class"; break;
        case EntityKind::ObjectProperty: kind = "ObjectProperty"; break;
        case EntityKind::NamedIndividual: kind = "NamedIndividual"; break;
        case EntityKind::AnnotationProperty: kind = "AnnotationProperty"; break;
        }
        out << "Declaration(" << kind << '(';
        render_iri(out, ax.entity());
        out << "))";
        return;
    }
    case AxiomKind::SubClassOf:
        out << "SubClassOf(";
        render_expr(out, *ax.sub_class());
        out << ' ';
        render_expr(out, *ax.super_class());
        out << ')';
        return;
    case AxiomKind::EquivalentClasses: {
        out << "EquivalentClasses(";
        bool first = true;
        for (const auto& m : ax.members()) {
            if (!first)
                out << ' ';
            first = false;
            render_expr(out, *m);
        }
        out << ')';
        return;
    }
    case AxiomKind::SubObjectPropertyOf:
        out << "SubObjectPropertyOf(";
        render_iri(out, ax.sub_role());
        out << ' ';
        render_iri(out, ax.super_role());
        out << ')';
        return;
    case AxiomKind::SubPropertyChainOf:
        out << "SubObjectPropertyOf(ObjectPropertyChain(";
        render_iri(out, ax.chain_first());
        out << ' ';
        render_iri(out, ax.chain_second());
        out << ") ";
        render_iri(out, ax.super_role());
        out << ')';
        return;
    case AxiomKind::ClassAssertion:
        out << "ClassAssertion(";
        render_expr(out, *ax.class_expr());
        out << ' ';
        render_iri(out, ax.individual());
        out << ')';
        return;
    case AxiomKind::ObjectPropertyAssertion:
        out << "ObjectPropertyAssertion(";
        render_iri(out, ax.role());
        out << ' ';
        render_iri(out, ax.subject_individual());
        out << ' ';
        render_iri(out, ax.object_individual());
        out << ')';
        return;
    case AxiomKind::AnnotationAssertion:
        out << "AnnotationAssertion(";
        render_iri(out, ax.annotation_property());
        out << ' ';
        render_iri(out, ax.annotation_subject());
        out << ' ';
        render_literal(out, ax.value());
        out << ')';
        return;
    }
}

} // namespace

std::string to_functional(const ConceptExpr& expr) {
    std::ostringstream out;
    render_expr(out, expr);
    return out.str();
}

std::string to_functional(const Axiom& axiom) {
    std::ostringstream out;
    render_axiom(out, axiom);
    return out.str();
}

std::string serialise(const Ontology& onto) {
    std::ostringstream out;
    for (const auto& [name, expansion] : onto.prefixes())
        out << "Prefix(" << name << ":=<" << expansion << ">)\n";
    out << "\nOntology(";
    if (onto.ontology_iri())
        out << '<' << onto.ontology_iri()->str() << '>';
    out << '\n';
    auto declare_all = [&](const char* kind, const std::set<Iri>& iris) {
        for (const auto& iri : iris) {
            out << "Declaration(" << kind << '(';
            render_iri(out, iri);
            out << "))\n";
        }
    };
    declare_all("Class", onto.concepts());
    declare_all("ObjectProperty", onto.roles());
    declare_all("NamedIndividual", onto.individuals());
    declare_all("AnnotationProperty", onto.annotation_properties());
    for (const auto& ax : onto.axioms()) {
        render_axiom(out, ax);
        out << '\n';
    }
    out << ")\n";
    return out.str();
}

} // namespace ontokit
