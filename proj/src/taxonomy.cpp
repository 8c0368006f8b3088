#include "ontokit/taxonomy.hpp"

#include <algorithm>

#include "ontokit/errors.hpp"
#include "ontokit/ontology.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

const std::vector<Iri>& Taxonomy::parents(const Iri& node) const {
    auto it = parents_.find(node);
    if (it == parents_.end())
        throw NotFoundError(node.str(), "taxonomy node");
    return it->second;
}

const std::vector<Iri>& Taxonomy::children(const Iri& node) const {
    auto it = children_.find(node);
    if (it == children_.end())
        throw NotFoundError(node.str(), "taxonomy node");
    return it->second;
}

const Iri& Taxonomy::resolve(const Iri& concept_iri) const {
    auto it = resolve_.find(concept_iri);
    if (it == resolve_.end())
        throw NotFoundError(concept_iri.str(), "taxonomy concept");
    return it->second;
}

const std::vector<Iri>& Taxonomy::members(const Iri& node) const {
    auto it = members_.find(node);
    if (it == members_.end())
        throw NotFoundError(node.str(), "taxonomy node");
    return it->second;
}

Taxonomy build_taxonomy(const Reasoner& reasoner) {
    const Ontology& onto = reasoner.ontology();

    Taxonomy t;
    t.resolve_.emplace(vocab::thing(), vocab::thing());
    t.resolve_.emplace(vocab::nothing(), vocab::nothing());
    t.members_[vocab::thing()].push_back(vocab::thing());

    for (const Iri& c : onto.concepts()) {
        const Iri rep = reasoner.representative(c);
        t.resolve_.emplace(c, rep);
        if (rep != vocab::nothing())
            t.members_[rep].push_back(c);
    }

    t.nodes_.push_back(vocab::thing());
    for (auto& [node, members] : t.members_) {
        std::sort(members.begin(), members.end());
        if (node != vocab::thing())
            t.nodes_.push_back(node);
    }
    std::sort(t.nodes_.begin(), t.nodes_.end());

    for (const Iri& node : t.nodes_) {
        t.parents_[node]; // every node answers queries, root included
        t.children_[node];
        if (node == vocab::thing())
            continue;
        for (const Iri& parent : reasoner.direct_subsumers(node)) {
            t.edges_.emplace_back(node, parent);
            t.parents_[node].push_back(parent);
            t.children_[parent].push_back(node);
        }
    }
    std::sort(t.edges_.begin(), t.edges_.end());
    for (auto& [node, ps] : t.parents_)
        std::sort(ps.begin(), ps.end());
    for (auto& [node, cs] : t.children_)
        std::sort(cs.begin(), cs.end());
    return t;
}

std::string to_tsv(const Taxonomy& taxonomy) {
    std::string out;
    for (const auto& [child, parent] : taxonomy.edges()) {
        out += child.str();
        out += '\t';
        out += parent.str();
        out += '\n';
    }
    return out;
}

} // namespace ontokit
