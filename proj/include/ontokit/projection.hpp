#ifndef ONTOKIT_PROJECTION_HPP
#define ONTOKIT_PROJECTION_HPP

#include <string>
#include <tuple>
#include <vector>

#include "ontokit/ontology.hpp"

namespace ontokit {

// One projected RDF triple; all three components are named IRIs, so a
// projection never contains a blank node.
struct Triple {
    Iri subject;
    Iri predicate;
    Iri object;

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
    }
    friend bool operator<(const Triple& a, const Triple& b) {
        return std::tie(a.subject, a.predicate, a.object) <
               std::tie(b.subject, b.predicate, b.object);
    }
};

// Projects the ontology onto a simple triple graph:
//
//   SubClassOf(C, D), both named            -> (C, rdfs:subClassOf, D)
//   SubClassOf(C, Some/Only(r, D)), C and D
//   named                                   -> (C, r, D)
//   ClassAssertion(D, d), D named           -> (d, rdf:type, D)
//   ObjectPropertyAssertion(r, a, b)        -> (a, r, b)
//
// EquivalentClasses axioms are first expanded into SubClassOf over all
// ordered member pairs; owl:Thing and owl:Nothing are builtins, not
// names, and never yield a triple; every other axiom shape contributes
// nothing.  The result is sorted and duplicate-free.
std::vector<Triple> project(const Ontology& onto);

// One "<s> <p> <o> ." line per triple, in order.
std::string to_ntriples(const std::vector<Triple>& triples);

} // namespace ontokit

#endif
