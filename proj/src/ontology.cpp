#include "ontokit/ontology.hpp"

#include <algorithm>
#include <limits>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
} // namespace

Ontology::Ontology() {
    prefixes_["owl"] = "http://www.w3.org/2002/07/owl#";
    prefixes_["rdf"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    prefixes_["rdfs"] = "http://www.w3.org/2000/01/rdf-schema#";
    prefixes_["xsd"] = "http://www.w3.org/2001/XMLSchema#";
}

void Ontology::set_prefix(const std::string& name, const std::string& expansion) {
    if (expansion.empty())
        throw ValidationError("prefix '" + name + "' has an empty expansion");
    prefixes_[name] = expansion;
}

std::size_t Ontology::find_axiom(const Axiom& axiom) const {
    auto [lo, hi] = axiom_index_.equal_range(axiom.hash());
    for (auto it = lo; it != hi; ++it)
        if (axioms_[it->second] == axiom)
            return it->second;
    return npos;
}

bool Ontology::contains_axiom(const Axiom& axiom) const {
    if (axiom.kind() == AxiomKind::Declaration) {
        const Iri& iri = axiom.entity();
        switch (axiom.entity_kind()) {
        case EntityKind::Class: return contains_concept(iri);
        case EntityKind::ObjectProperty: return contains_role(iri);
        case EntityKind::NamedIndividual: return contains_individual(iri);
        case EntityKind::AnnotationProperty: return annotation_properties_.count(iri) != 0;
        }
    }
    return find_axiom(axiom) != npos;
}

bool Ontology::declare(EntityKind kind, const Iri& iri) {
    if (iri == vocab::thing() || iri == vocab::nothing())
        return false;
    bool added = false;
    switch (kind) {
    case EntityKind::Class: added = concepts_.insert(iri).second; break;
    case EntityKind::ObjectProperty: added = roles_.insert(iri).second; break;
    case EntityKind::NamedIndividual: added = individuals_.insert(iri).second; break;
    case EntityKind::AnnotationProperty: added = annotation_properties_.insert(iri).second; break;
    }
    if (added)
        ++revision_;
    return added;
}

void Ontology::register_signature(const Axiom& axiom) {
    std::set<Iri> cs, rs, is;
    axiom.collect_signature(cs, rs, is);
    for (const auto& c : cs)
        declare(EntityKind::Class, c);
    for (const auto& r : rs)
        declare(EntityKind::ObjectProperty, r);
    for (const auto& i : is)
        declare(EntityKind::NamedIndividual, i);
    if (axiom.kind() == AxiomKind::AnnotationAssertion)
        declare(EntityKind::AnnotationProperty, axiom.annotation_property());
}

bool Ontology::add_axiom(const Axiom& axiom) {
    if (axiom.kind() == AxiomKind::Declaration)
        return declare(axiom.entity_kind(), axiom.entity());
    if (find_axiom(axiom) != npos)
        return false;
    register_signature(axiom);
    axiom_index_.emplace(axiom.hash(), axioms_.size());
    axioms_.push_back(axiom);
    if (axiom.kind() == AxiomKind::AnnotationAssertion)
        annotation_index_[axiom.annotation_subject()].emplace_back(axiom.annotation_property(),
                                                                   axiom.value());
    ++revision_;
    return true;
}

bool Ontology::remove_axiom(const Axiom& axiom) {
    std::size_t pos = find_axiom(axiom);
    if (pos == npos)
        return false;
    if (axiom.kind() == AxiomKind::AnnotationAssertion) {
        auto it = annotation_index_.find(axiom.annotation_subject());
        if (it != annotation_index_.end()) {
            auto& entries = it->second;
            auto hit = std::find(entries.begin(), entries.end(),
                                 std::make_pair(axiom.annotation_property(), axiom.value()));
            if (hit != entries.end())
                entries.erase(hit);
            if (entries.empty())
                annotation_index_.erase(it);
        }
    }
    axioms_.erase(axioms_.begin() + static_cast<std::ptrdiff_t>(pos));
    axiom_index_.clear();
    for (std::size_t i = 0; i < axioms_.size(); ++i)
        axiom_index_.emplace(axioms_[i].hash(), i);
    ++revision_;
    return true;
}

std::vector<Literal> Ontology::annotations(const Iri& subject, const Iri& property) const {
    std::vector<Literal> out;
    auto it = annotation_index_.find(subject);
    if (it == annotation_index_.end())
        return out;
    for (const auto& [prop, value] : it->second)
        if (prop == property)
            out.push_back(value);
    return out;
}

const std::vector<std::pair<Iri, Literal>>& Ontology::annotations(const Iri& subject) const {
    static const std::vector<std::pair<Iri, Literal>> empty;
    auto it = annotation_index_.find(subject);
    return it == annotation_index_.end() ? empty : it->second;
}

std::vector<ConceptPtr> Ontology::asserted_parents(const Iri& concept_iri) const {
    const ConceptPtr self = ConceptExpr::named(concept_iri);
    std::vector<ConceptPtr> out;
    auto push = [&](const ConceptPtr& parent) {
        for (const auto& seen : out)
            if (*seen == *parent)
                return;
        out.push_back(parent);
    };
    for (const auto& ax : axioms_) {
        if (ax.kind() == AxiomKind::SubClassOf) {
            if (*ax.sub_class() == *self)
                push(ax.super_class());
        } else if (ax.kind() == AxiomKind::EquivalentClasses) {
            bool names_self = false;
            for (const auto& m : ax.members())
                if (*m == *self) {
                    names_self = true;
                    break;
                }
            if (!names_self)
                continue;
            for (const auto& m : ax.members()) {
                if (*m == *self)
                    continue;
                if (m->kind() == ExprKind::And) {
                    for (const auto& conjunct : m->operands())
                        push(conjunct);
                } else {
                    push(m);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), ConceptPtrLess{});
    return out;
}

std::vector<Iri> Ontology::asserted_children(const Iri& concept_iri) const {
    const ConceptPtr self = ConceptExpr::named(concept_iri);
    std::set<Iri> out;
    for (const auto& ax : axioms_) {
        if (ax.kind() == AxiomKind::SubClassOf) {
            if (ax.sub_class()->is_named() && *ax.super_class() == *self)
                out.insert(ax.sub_class()->iri());
        } else if (ax.kind() == AxiomKind::EquivalentClasses) {
            // Named member E gains parent C when another member is C
            // itself or a conjunction with conjunct C.
            for (const auto& m : ax.members()) {
                if (!m->is_named())
                    continue;
                for (const auto& other : ax.members()) {
                    if (*other == *m)
                        continue;
                    bool hit = *other == *self;
                    if (!hit && other->kind() == ExprKind::And)
                        for (const auto& conjunct : other->operands())
                            if (*conjunct == *self) {
                                hit = true;
                                break;
                            }
                    if (hit)
                        out.insert(m->iri());
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

} // namespace ontokit
