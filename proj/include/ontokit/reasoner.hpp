#ifndef ONTOKIT_REASONER_HPP
#define ONTOKIT_REASONER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "ontokit/ontology.hpp"

namespace ontokit {

// Subsumption services over one ontology.  Two independent relations
// are offered:
//
//  * the told closure - the reflexive-transitive closure of the
//    directly asserted edges between concept NAMES: SubClassOf between
//    two names, plus the pairwise member edges of EquivalentClasses
//    (a named member gains an edge to a named partner, or to each
//    named top-level conjunct when the partner is a conjunction).
//    A complex right-hand side of SubClassOf contributes nothing.
//    The told closure never fails, whatever fragment the ontology
//    lives in.
//
//  * entailed subsumption - sound and complete for ontologies inside
//    the supported fragment (conjunction, existential restriction,
//    role hierarchies, two-step role chains).  The ontology is
//    normalised internally and saturated with the completion rules;
//    the published relation is restricted to the input's own names.
//
// Queries take concept names of the ontology, owl:Thing or
// owl:Nothing; anything else raises NotFoundError.  Results are
// recomputed automatically when the ontology's revision changes.
class Reasoner {
public:
    explicit Reasoner(const Ontology& onto);
    ~Reasoner();

    const Ontology& ontology() const noexcept { return onto_; }

    // --- told closure -------------------------------------------------
    bool told_subsumption(const Iri& sub, const Iri& sup) const;
    // All told subsumers including the concept itself, sorted.
    std::vector<Iri> told_ancestors(const Iri& concept_iri) const;
    std::vector<Iri> told_descendants(const Iri& concept_iri) const;
    // Neither told-subsumes the other and no named concept told-descends
    // from both.
    bool told_assumed_disjoint(const Iri& a, const Iri& b) const;

    // --- entailed subsumption ------------------------------------------
    bool entails_subsumption(const Iri& sub, const Iri& sup) const;
    bool is_satisfiable(const Iri& concept_iri) const;
    // Named subsumers within the input signature, the concept itself
    // included; owl:Thing / owl:Nothing never appear here.
    std::vector<Iri> subsumers(const Iri& concept_iri) const;
    std::vector<Iri> subsumees(const Iri& concept_iri) const;
    // Subsumers with nothing strictly in between, after collapsing
    // mutually subsuming concepts onto one representative (⊤/⊥ when the
    // class contains them, else the smallest IRI).  The result holds
    // representatives only; a concept whose only subsumer is owl:Thing
    // reports exactly {owl:Thing}.
    std::vector<Iri> direct_subsumers(const Iri& concept_iri) const;
    Iri representative(const Iri& concept_iri) const;
    // Incomparable and without any common satisfiable named subsumee.
    bool assumed_disjoint(const Iri& a, const Iri& b) const;

    // Every entailed pair (sub, sup) over named concepts with sub != sup,
    // sup != owl:Thing; an unsatisfiable sub contributes (sub, owl:Nothing)
    // as well.  Sorted.
    std::vector<std::pair<Iri, Iri>> classify() const;

private:
    struct State;
    const Ontology& onto_;
    mutable std::unique_ptr<State> state_;
    State& state() const;
};

} // namespace ontokit

#endif
