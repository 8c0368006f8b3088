#ifndef ONTOKIT_NORMALISE_HPP
#define ONTOKIT_NORMALISE_HPP

#include <utility>
#include <vector>

#include "ontokit/expression.hpp"
#include "ontokit/ontology.hpp"

namespace ontokit {

// Namespace for the concept names invented during normalisation.
inline constexpr const char* kFreshNamespace = "urn:normal#";

// Rewrite the class/role axioms of an ontology into the six normal
// forms
//     C [= D        C1 n C2 [= D      C [= Er.D
//     Er.C [= D     r [= s            r1 o r2 [= s
// where C, Ci are concept names or owl:Thing, D is a concept name or
// owl:Nothing, and the filler of a right-hand existential is a concept
// name.  Complex subexpressions are replaced by fresh, hash-consed
// names under urn:normal#; the result entails exactly the same
// subsumptions between names of the input ontology.
//
// Assertions and annotations have no counterpart among the six forms
// and are dropped; the named class/role signature of the input is kept
// even when an entity no longer occurs in any axiom.
//
// Throws NormalisationError (listing every offending axiom) when a
// class axiom uses union, complement or universal restriction.
//
// When `definitions` is given it receives, in minting order, one
// (fresh name, abbreviated expression) pair per invented concept.
Ontology normalise(const Ontology& onto,
                   std::vector<std::pair<Iri, ConceptPtr>>* definitions = nullptr);

} // namespace ontokit

#endif
