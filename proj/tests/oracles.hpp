// Independent reference implementations used to check the library.
// Everything here is deliberately written with different algorithms and
// data layouts than the code under test: a fact-database fixpoint for
// subsumption, a definitorial normaliser that names every subexpression,
// and plain matrix algorithms for graph questions.
#ifndef ONTOKIT_TESTS_ORACLES_HPP
#define ONTOKIT_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "ontokit/ontology.hpp"

namespace oracle {

using ontokit::Iri;
using ontokit::Ontology;

// Deductive closure of an ontology whose class axioms are all in the
// six normal forms (asserts otherwise).  Basic concepts are the named
// concepts plus owl:Thing; owl:Nothing may appear as a target.
class ElClosure {
public:
    explicit ElClosure(const Ontology& normalised);

    // sub/sup drawn from the named signature, owl:Thing or owl:Nothing.
    bool subsumes(const Iri& sub, const Iri& sup) const;
    bool satisfiable(const Iri& concept_iri) const;

private:
    std::set<Iri> basics_;
    std::set<std::pair<Iri, Iri>> sub_;
    std::set<std::tuple<Iri, Iri, Iri>> rel_; // (x, role, y)
};

// Brute-force normaliser: every complex subexpression is given a fresh
// name made equivalent to it in both directions.  No sharing games, no
// polarity analysis; output is in the six normal forms.
Ontology definitorial_normalise(const Ontology& onto);

// True when the axiom matches one of the six normal forms.
bool is_normal_form(const ontokit::Axiom& axiom);

// Reachability matrix closure over an adjacency list (reflexive).
std::map<Iri, std::set<Iri>> reach(const std::map<Iri, std::set<Iri>>& edges);

// Transitive reduction of a DAG given its full reachability; returns
// the kept edges.  Classic cubic algorithm.
std::map<Iri, std::set<Iri>> transitive_reduction(const std::map<Iri, std::set<Iri>>& edges);

// Levenshtein distance, plain dynamic programming.
std::size_t edit_distance(const std::string& a, const std::string& b);

} // namespace oracle

#endif
