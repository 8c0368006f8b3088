#include "ontokit/pruning.hpp"

#include <map>
#include <vector>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

// Children-before-parents order over the removal set, following the
// asserted named subsumption edges of the input; lexicographic
// tie-breaking, any cyclic remainder appended lexicographically.
std::vector<Iri> removal_order(const Ontology& onto, const std::set<Iri>& remove) {
    // in_degree[p] = number of distinct removal-set children of p.
    std::map<Iri, std::set<Iri>> children_in_set;
    std::map<Iri, std::set<Iri>> parents_in_set;
    for (const Iri& x : remove) {
        for (const Iri& c : onto.asserted_children(x))
            if (c != x && remove.count(c)) {
                children_in_set[x].insert(c);
                parents_in_set[c].insert(x);
            }
    }

    std::set<Iri> ready;
    std::map<Iri, std::size_t> pending;
    for (const Iri& x : remove) {
        pending[x] = children_in_set[x].size();
        if (pending[x] == 0)
            ready.insert(x);
    }

    std::vector<Iri> order;
    order.reserve(remove.size());
    std::set<Iri> done;
    while (!ready.empty()) {
        Iri x = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(x);
        done.insert(x);
        for (const Iri& p : parents_in_set[x])
            if (--pending[p] == 0)
                ready.insert(p);
    }
    // Cycles never drain; take the leftovers in IRI order (remove is
    // already sorted).
    for (const Iri& x : remove)
        if (!done.count(x))
            order.push_back(x);
    return order;
}

void delete_mentions(Ontology& work, const Iri& x) {
    std::vector<Axiom> doomed;
    for (const Axiom& ax : work.axioms())
        if (ax.mentions(x))
            doomed.push_back(ax);
    for (const Axiom& ax : doomed)
        work.remove_axiom(ax);
}

} // namespace

Ontology prune(const Ontology& onto, const std::set<Iri>& remove) {
    for (const Iri& iri : remove) {
        if (iri == vocab::thing() || iri == vocab::nothing())
            throw ValidationError("cannot prune builtin concept " + iri.str());
        if (!onto.contains_concept(iri))
            throw NotFoundError(iri.str(), "prune");
    }

    Ontology work = onto;
    for (const Iri& x : removal_order(onto, remove)) {
        // Bridge every asserted child to every asserted parent first; a
        // bridge that itself mentions x is swept with the rest below.
        const std::vector<Iri> children = work.asserted_children(x);
        const std::vector<ConceptPtr> parents = work.asserted_parents(x);
        for (const Iri& child : children)
            for (const ConceptPtr& parent : parents)
                work.add_axiom(Axiom::subclass_of(ConceptExpr::named(child), parent));
        delete_mentions(work, x);
    }

    // Deleting axioms cannot surface new mentions, but the contract is
    // "no removed IRI remains referenced", so sweep until stable.
    bool dirty;
    do {
        dirty = false;
        for (const Iri& x : remove) {
            for (const Axiom& ax : work.axioms())
                if (ax.mentions(x)) {
                    dirty = true;
                    break;
                }
            if (dirty) {
                delete_mentions(work, x);
                break;
            }
        }
    } while (dirty);

    // Rebuild so the signature forgets the removed concepts while every
    // other declaration - used by the survivors or not - persists.
    Ontology out;
    for (const auto& [name, expansion] : onto.prefixes())
        out.set_prefix(name, expansion);
    if (onto.ontology_iri())
        out.set_ontology_iri(*onto.ontology_iri());
    for (const Iri& c : onto.concepts())
        if (!remove.count(c))
            out.declare(EntityKind::Class, c);
    for (const Iri& r : onto.roles())
        if (!remove.count(r))
            out.declare(EntityKind::ObjectProperty, r);
    for (const Iri& i : onto.individuals())
        if (!remove.count(i))
            out.declare(EntityKind::NamedIndividual, i);
    for (const Iri& a : onto.annotation_properties())
        if (!remove.count(a))
            out.declare(EntityKind::AnnotationProperty, a);
    for (const Axiom& ax : work.axioms())
        out.add_axiom(ax);
    return out;
}

} // namespace ontokit
