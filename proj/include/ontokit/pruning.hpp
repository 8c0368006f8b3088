#ifndef ONTOKIT_PRUNING_HPP
#define ONTOKIT_PRUNING_HPP

#include <set>

#include "ontokit/ontology.hpp"

namespace ontokit {

// Removes a set of named concepts while preserving the subsumption
// hierarchy among the survivors.  Before a concept disappears, a
// SubClassOf(child, parent) bridge is added for every pair drawn from
// its asserted children and asserted parents - complex parents
// included verbatim; then every axiom mentioning the concept is
// dropped, annotations with it.  Concepts are processed children
// before parents (ties and cyclic remainders broken lexicographically)
// so a bridge never leans on an already-removed name.  Axioms whose
// expressions merely contain a removed concept (say a foreign
// restriction over it) are deleted outright, never rewritten.
//
// The result is a fresh ontology: same prefixes and ontology IRI, the
// surviving axioms in their original order followed by the bridges,
// and the input signature minus the removed IRIs.
//
// Throws ValidationError when the set contains owl:Thing or
// owl:Nothing, NotFoundError when an IRI is not a declared concept.
Ontology prune(const Ontology& onto, const std::set<Iri>& remove);

} // namespace ontokit

#endif
