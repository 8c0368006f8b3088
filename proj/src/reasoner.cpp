#include "ontokit/reasoner.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "ontokit/errors.hpp"
#include "ontokit/normalise.hpp"

namespace ontokit {

namespace {

// Named top-level conjuncts of an equivalence partner; nested
// conjunctions flatten, anything complex is passed over.
void named_conjuncts(const ConceptPtr& e, std::vector<Iri>& out) {
    if (e->is_named()) {
        out.push_back(e->iri());
    } else if (e->kind() == ExprKind::And) {
        for (const auto& op : e->operands())
            named_conjuncts(op, out);
    }
}

// ---- told closure ----
struct ToldData {
    std::uint64_t revision = 0;
    std::map<Iri, std::set<Iri>> up;   // ancestors incl. self
    std::map<Iri, std::set<Iri>> down; // descendants incl. self
};

// ---- entailed subsumption ----
struct ElData {
    std::uint64_t revision = 0;
    std::map<Iri, std::set<Iri>> subs; // named subsumers incl. self
    std::map<Iri, std::set<Iri>> subsumees;
    std::set<Iri> unsat;
    std::set<Iri> top_subs; // names entailed to subsume owl:Thing
    bool top_unsat = false;
    std::map<Iri, Iri> rep;
};

} // namespace

struct Reasoner::State {
    std::unique_ptr<ToldData> told;
    std::unique_ptr<ElData> el;
};

Reasoner::Reasoner(const Ontology& onto) : onto_(onto), state_(new State) {}
Reasoner::~Reasoner() = default;

Reasoner::State& Reasoner::state() const { return *state_; }

namespace {

void check_known(const Ontology& onto, const Iri& iri, const char* who) {
    if (iri == vocab::thing() || iri == vocab::nothing())
        return;
    if (!onto.contains_concept(iri))
        throw NotFoundError(iri.str(), who);
}

ToldData build_told(const Ontology& onto) {
    ToldData told;
    told.revision = onto.revision();
    std::map<Iri, std::set<Iri>> edges;
    for (const auto& c : onto.concepts())
        edges[c]; // reflexive node, even when isolated
    for (const auto& ax : onto.axioms()) {
        if (ax.kind() == AxiomKind::SubClassOf) {
            if (ax.sub_class()->is_named() && ax.super_class()->is_named())
                edges[ax.sub_class()->iri()].insert(ax.super_class()->iri());
        } else if (ax.kind() == AxiomKind::EquivalentClasses) {
            for (const auto& m : ax.members()) {
                if (!m->is_named())
                    continue;
                for (const auto& partner : ax.members()) {
                    if (*partner == *m)
                        continue;
                    std::vector<Iri> names;
                    named_conjuncts(partner, names);
                    for (const auto& n : names)
                        edges[m->iri()].insert(n);
                }
            }
        }
    }
    // Reflexive-transitive closure, one BFS per concept.
    for (const auto& [start, _] : edges) {
        auto& up = told.up[start];
        std::vector<Iri> queue{start};
        up.insert(start);
        while (!queue.empty()) {
            Iri cur = queue.back();
            queue.pop_back();
            auto it = edges.find(cur);
            if (it == edges.end())
                continue;
            for (const auto& next : it->second)
                if (up.insert(next).second)
                    queue.push_back(next);
        }
        for (const auto& anc : up)
            told.down[anc].insert(start);
    }
    return told;
}

ElData build_el(const Ontology& onto) {
    ElData el;
    el.revision = onto.revision();
    Ontology norm = normalise(onto);

    // Intern the normalised signature; TOP sits one past the names.
    std::vector<Iri> names(norm.concepts().begin(), norm.concepts().end());
    std::unordered_map<Iri, int> id;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        id[names[i]] = i;
    const int TOP = static_cast<int>(names.size());
    const int BOT = TOP + 1;
    std::vector<Iri> role_names(norm.roles().begin(), norm.roles().end());
    std::unordered_map<Iri, int> role_id;
    for (int i = 0; i < static_cast<int>(role_names.size()); ++i)
        role_id[role_names[i]] = i;

    auto concept_id = [&](const ConceptPtr& e) {
        if (e->kind() == ExprKind::Top)
            return TOP;
        if (e->kind() == ExprKind::Bottom)
            return BOT;
        return id.at(e->iri());
    };

    // Axioms bucketed by normal form.
    std::vector<std::vector<int>> form1(TOP + 1);                           // C -> D list
    std::vector<std::vector<std::pair<int, int>>> form2(TOP + 1);           // C1 -> (C2, D)
    std::vector<std::vector<std::pair<int, int>>> form3(TOP + 1);           // C -> (r, D)
    std::vector<std::map<int, std::vector<int>>> form4(role_names.size());  // r -> filler -> D
    std::vector<std::vector<int>> role_subs(role_names.size());             // r -> s list
    std::vector<std::array<int, 3>> chains;                                 // (r, s, t)

    for (const auto& ax : norm.axioms()) {
        if (ax.kind() == AxiomKind::SubObjectPropertyOf) {
            role_subs[role_id.at(ax.sub_role())].push_back(role_id.at(ax.super_role()));
            continue;
        }
        if (ax.kind() == AxiomKind::SubPropertyChainOf) {
            chains.push_back({role_id.at(ax.chain_first()), role_id.at(ax.chain_second()),
                              role_id.at(ax.super_role())});
            continue;
        }
        if (ax.kind() != AxiomKind::SubClassOf)
            continue;
        const auto& L = ax.sub_class();
        const auto& R = ax.super_class();
        if (L->kind() == ExprKind::And) {
            int c1 = concept_id(L->operands()[0]);
            int c2 = concept_id(L->operands()[1]);
            int d = concept_id(R);
            form2[c1].push_back({c2, d});
            form2[c2].push_back({c1, d});
        } else if (L->kind() == ExprKind::Some) {
            form4[role_id.at(L->role())][concept_id(L->filler())].push_back(concept_id(R));
        } else if (R->kind() == ExprKind::Some) {
            form3[concept_id(L)].push_back({role_id.at(R->role()), concept_id(R->filler())});
        } else {
            form1[concept_id(L)].push_back(concept_id(R));
        }
    }

    // Saturation: S(C) = {C, TOP}; R(r) = {}.
    std::vector<std::set<int>> S(TOP + 1);
    for (int c = 0; c <= TOP; ++c)
        S[c] = {c, TOP};
    std::vector<std::set<std::pair<int, int>>> R(role_names.size());

    bool changed = true;
    while (changed) {
        changed = false;
        auto put = [&](std::set<int>& row, int v) {
            if (row.insert(v).second)
                changed = true;
        };
        for (int c = 0; c <= TOP; ++c) {
            const std::vector<int> snapshot(S[c].begin(), S[c].end());
            for (int d : snapshot) {
                if (d == BOT)
                    continue;
                for (int e : form1[d])
                    put(S[c], e);
                for (const auto& [partner, e] : form2[d])
                    if (S[c].count(partner))
                        put(S[c], e);
                for (const auto& [r, filler] : form3[d])
                    if (R[r].insert({c, filler}).second)
                        changed = true;
            }
        }
        for (std::size_t r = 0; r < R.size(); ++r) {
            const std::vector<std::pair<int, int>> pairs(R[r].begin(), R[r].end());
            for (const auto& [c, d] : pairs) {
                for (int dsub : S[d]) {
                    auto hit = form4[r].find(dsub);
                    if (hit != form4[r].end())
                        for (int e : hit->second)
                            put(S[c], e);
                }
                if (S[d].count(BOT))
                    put(S[c], BOT);
                for (int s : role_subs[r])
                    if (R[s].insert({c, d}).second)
                        changed = true;
            }
        }
        for (const auto& [r, s, t] : chains) {
            const std::vector<std::pair<int, int>> left(R[r].begin(), R[r].end());
            const std::vector<std::pair<int, int>> right(R[s].begin(), R[s].end());
            for (const auto& [c, d] : left)
                for (const auto& [d2, e] : right)
                    if (d2 == d && R[t].insert({c, e}).second)
                        changed = true;
        }
    }

    // owl:Thing unsatisfiable forces everything under owl:Nothing.
    if (S[TOP].count(BOT))
        for (int c = 0; c <= TOP; ++c)
            S[c].insert(BOT);

    // Publish, restricted to the input ontology's own names.  A row
    // containing owl:Nothing subsumes under everything.
    const std::set<Iri>& original = onto.concepts();
    el.top_unsat = S[TOP].count(BOT) != 0;
    for (int c = 0; c < TOP; ++c) {
        if (!original.count(names[c]))
            continue;
        if (S[c].count(BOT))
            el.unsat.insert(names[c]);
    }
    for (int c = 0; c < TOP; ++c) {
        if (!original.count(names[c]))
            continue;
        auto& row = el.subs[names[c]];
        if (el.unsat.count(names[c])) {
            for (const auto& o : original)
                row.insert(o);
        } else {
            for (int d : S[c])
                if (d < TOP && original.count(names[d]))
                    row.insert(names[d]);
        }
    }
    for (int d : S[TOP])
        if (d < TOP && original.count(names[d]))
            el.top_subs.insert(names[d]);
    if (el.top_unsat)
        el.top_subs = original;

    for (const auto& [a, row] : el.subs)
        for (const auto& b : row)
            el.subsumees[b].insert(a);

    // Representatives of the mutual-subsumption classes.
    for (const auto& a : original) {
        if (el.top_subs.count(a) && !el.unsat.count(a)) {
            el.rep[a] = vocab::thing();
            continue;
        }
        if (el.unsat.count(a)) {
            el.rep[a] = vocab::nothing();
            continue;
        }
        Iri best = a;
        for (const auto& b : el.subs[a])
            if (el.subs.at(b).count(a) && b < best)
                best = b;
        el.rep[a] = best;
    }
    return el;
}

} // namespace

#define TOLD_STATE()                                                                              \
    ([&]() -> const ToldData& {                                                                \
        if (!state_->told || state_->told->revision != onto_.revision())                          \
            state_->told = std::make_unique<ToldData>(build_told(onto_));                      \
        return *state_->told;                                                                     \
    })()

#define EL_STATE()                                                                                \
    ([&]() -> const ElData& {                                                                  \
        if (!state_->el || state_->el->revision != onto_.revision())                              \
            state_->el = std::make_unique<ElData>(build_el(onto_));                            \
        return *state_->el;                                                                       \
    })()

bool Reasoner::told_subsumption(const Iri& sub, const Iri& sup) const {
    check_known(onto_, sub, "told_subsumption");
    check_known(onto_, sup, "told_subsumption");
    if (sub == sup)
        return true;
    const auto& told = TOLD_STATE();
    auto it = told.up.find(sub);
    return it != told.up.end() && it->second.count(sup) != 0;
}

std::vector<Iri> Reasoner::told_ancestors(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "told_ancestors");
    const auto& told = TOLD_STATE();
    auto it = told.up.find(concept_iri);
    if (it == told.up.end())
        return {concept_iri};
    return {it->second.begin(), it->second.end()};
}

std::vector<Iri> Reasoner::told_descendants(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "told_descendants");
    const auto& told = TOLD_STATE();
    auto it = told.down.find(concept_iri);
    if (it == told.down.end())
        return {concept_iri};
    return {it->second.begin(), it->second.end()};
}

bool Reasoner::told_assumed_disjoint(const Iri& a, const Iri& b) const {
    if (told_subsumption(a, b) || told_subsumption(b, a))
        return false;
    const auto& told = TOLD_STATE();
    auto ia = told.down.find(a);
    auto ib = told.down.find(b);
    if (ia == told.down.end() || ib == told.down.end())
        return true;
    for (const auto& e : ia->second)
        if (ib->second.count(e))
            return false;
    return true;
}

bool Reasoner::entails_subsumption(const Iri& sub, const Iri& sup) const {
    check_known(onto_, sub, "entails_subsumption");
    check_known(onto_, sup, "entails_subsumption");
    if (sub == sup || sup == vocab::thing() || sub == vocab::nothing())
        return true;
    const auto& el = EL_STATE();
    if (sub == vocab::thing()) {
        if (sup == vocab::nothing())
            return el.top_unsat;
        return el.top_subs.count(sup) != 0;
    }
    if (sup == vocab::nothing())
        return el.unsat.count(sub) != 0;
    if (el.unsat.count(sub))
        return true;
    return el.subs.at(sub).count(sup) != 0;
}

bool Reasoner::is_satisfiable(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "is_satisfiable");
    if (concept_iri == vocab::nothing())
        return false;
    const auto& el = EL_STATE();
    if (concept_iri == vocab::thing())
        return !el.top_unsat;
    return el.unsat.count(concept_iri) == 0;
}

std::vector<Iri> Reasoner::subsumers(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "subsumers");
    const auto& el = EL_STATE();
    if (concept_iri == vocab::thing())
        return {el.top_subs.begin(), el.top_subs.end()};
    if (concept_iri == vocab::nothing()) {
        std::vector<Iri> all(onto_.concepts().begin(), onto_.concepts().end());
        return all;
    }
    const auto& row = el.subs.at(concept_iri);
    return {row.begin(), row.end()};
}

std::vector<Iri> Reasoner::subsumees(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "subsumees");
    const auto& el = EL_STATE();
    if (concept_iri == vocab::thing())
        return {onto_.concepts().begin(), onto_.concepts().end()};
    if (concept_iri == vocab::nothing())
        return {el.unsat.begin(), el.unsat.end()};
    auto it = el.subsumees.find(concept_iri);
    if (it == el.subsumees.end())
        return {};
    return {it->second.begin(), it->second.end()};
}

Iri Reasoner::representative(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "representative");
    if (concept_iri == vocab::thing() || concept_iri == vocab::nothing())
        return concept_iri;
    return EL_STATE().rep.at(concept_iri);
}

std::vector<Iri> Reasoner::direct_subsumers(const Iri& concept_iri) const {
    check_known(onto_, concept_iri, "direct_subsumers");
    const auto& el = EL_STATE();
    auto leq = [&](const Iri& a, const Iri& b) { return entails_subsumption(a, b); };

    // Strict subsumer representatives of the query's class.
    std::set<Iri> strict;
    auto consider = [&](const Iri& candidate, const Iri& rep) {
        if (leq(concept_iri, candidate) && !leq(candidate, concept_iri))
            strict.insert(rep);
    };
    for (const auto& [name, rep] : el.rep)
        consider(name, rep);
    consider(vocab::thing(), vocab::thing());

    std::vector<Iri> direct;
    for (const auto& p : strict) {
        bool intermediate = false;
        for (const auto& q : strict)
            if (q != p && leq(q, p)) {
                intermediate = true;
                break;
            }
        if (!intermediate)
            direct.push_back(p);
    }
    if (direct.empty() && !leq(vocab::thing(), concept_iri))
        direct.push_back(vocab::thing());
    std::sort(direct.begin(), direct.end());
    return direct;
}

bool Reasoner::assumed_disjoint(const Iri& a, const Iri& b) const {
    if (entails_subsumption(a, b) || entails_subsumption(b, a))
        return false;
    const auto& el = EL_STATE();
    auto ia = el.subsumees.find(a);
    auto ib = el.subsumees.find(b);
    if (ia == el.subsumees.end() || ib == el.subsumees.end())
        return true;
    for (const auto& e : ia->second)
        if (ib->second.count(e) && !el.unsat.count(e))
            return false;
    return true;
}

std::vector<std::pair<Iri, Iri>> Reasoner::classify() const {
    const auto& el = EL_STATE();
    std::vector<std::pair<Iri, Iri>> out;
    for (const auto& [a, row] : el.subs) {
        if (el.unsat.count(a))
            out.emplace_back(a, vocab::nothing());
        for (const auto& b : row)
            if (b != a)
                out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

#undef TOLD_STATE
#undef EL_STATE

} // namespace ontokit
