#ifndef ONTOKIT_TAXONOMY_HPP
#define ONTOKIT_TAXONOMY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ontokit/iri.hpp"

namespace ontokit {

class Reasoner;

// The entailed subsumption hierarchy as a rooted directed acyclic
// graph.  Nodes are the satisfiable named concepts - each class of
// mutually subsuming concepts collapsed onto its representative - plus
// the root owl:Thing; there is an edge (child, parent) for every
// direct subsumer of a node.  Unsatisfiable concepts collapse into
// owl:Nothing, which is not a node, so they stay out of the graph
// entirely (resolve still reports them).
//
// Invariants: acyclic, every non-root node has at least one parent
// edge, every node reaches the root.
class Taxonomy {
public:
    const Iri& root() const noexcept { return root_; }

    // Every node, root included, sorted.
    const std::vector<Iri>& nodes() const noexcept { return nodes_; }
    bool contains(const Iri& node) const { return parents_.count(node) != 0; }

    // Edge list (child, parent), sorted.
    const std::vector<std::pair<Iri, Iri>>& edges() const noexcept { return edges_; }

    // Direct parents / children of a node, sorted; NotFoundError when
    // the IRI is not a node.
    const std::vector<Iri>& parents(const Iri& node) const;
    const std::vector<Iri>& children(const Iri& node) const;

    // The node standing for a named concept: the representative of its
    // mutual-subsumption class, owl:Nothing for unsatisfiable concepts
    // (then not a node).  owl:Thing resolves to itself; NotFoundError
    // for anything undeclared.
    const Iri& resolve(const Iri& concept_iri) const;

    // Every concept a node stands for, the node itself included, sorted.
    const std::vector<Iri>& members(const Iri& node) const;

private:
    friend Taxonomy build_taxonomy(const Reasoner& reasoner);

    Iri root_ = vocab::thing();
    std::vector<Iri> nodes_;
    std::vector<std::pair<Iri, Iri>> edges_;
    std::map<Iri, std::vector<Iri>> parents_;
    std::map<Iri, std::vector<Iri>> children_;
    std::map<Iri, Iri> resolve_;
    std::map<Iri, std::vector<Iri>> members_;
};

// Builds the taxonomy from the reasoner's entailed direct subsumers.
Taxonomy build_taxonomy(const Reasoner& reasoner);

// Edge list as TSV, one "child<TAB>parent" line per edge, sorted.
std::string to_tsv(const Taxonomy& taxonomy);

} // namespace ontokit

#endif
