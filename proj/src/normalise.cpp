#include "ontokit/normalise.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "ontokit/errors.hpp"
#include "ontokit/serializer.hpp"

namespace ontokit {

namespace {

bool uses_non_el(const ConceptExpr& e) {
    switch (e.kind()) {
    case ExprKind::Top:
    case ExprKind::Bottom:
    case ExprKind::Named:
        return false;
    case ExprKind::Not:
    case ExprKind::Only:
    case ExprKind::Or:
        return true;
    case ExprKind::Some:
        return uses_non_el(*e.filler());
    case ExprKind::And:
        for (const auto& op : e.operands())
            if (uses_non_el(*op))
                return true;
        return false;
    }
    return false;
}

bool is_basic(const ConceptExpr& e) {
    return e.kind() == ExprKind::Named || e.kind() == ExprKind::Top;
}

class Normaliser {
public:
    explicit Normaliser(const Ontology& in) : in_(in) {
        out_.set_prefix("normal", kFreshNamespace);
        for (const auto& [name, expansion] : in.prefixes())
            out_.set_prefix(name, expansion);
        if (in.ontology_iri())
            out_.set_ontology_iri(*in.ontology_iri());
        // The named signature survives even for entities whose axioms
        // all dissolve (tautologies, assertions).
        for (const auto& c : in.concepts())
            out_.declare(EntityKind::Class, c);
        for (const auto& r : in.roles())
            out_.declare(EntityKind::ObjectProperty, r);
    }

    std::vector<std::pair<Iri, ConceptPtr>>& take_definitions() { return defs_; }

    Ontology run() {
        reject_non_el();
        for (const auto& ax : in_.axioms()) {
            switch (ax.kind()) {
            case AxiomKind::SubClassOf:
                emit(ax.sub_class(), ax.super_class());
                break;
            case AxiomKind::EquivalentClasses: {
                // Star decomposition around the first member.
                const auto& ms = ax.members();
                for (std::size_t i = 1; i < ms.size(); ++i) {
                    emit(ms[0], ms[i]);
                    emit(ms[i], ms[0]);
                }
                break;
            }
            case AxiomKind::SubObjectPropertyOf:
            case AxiomKind::SubPropertyChainOf:
                out_.add_axiom(ax); // forms 5 and 6 as they stand
                break;
            default:
                break; // assertions/annotations are not expressible here
            }
        }
        return std::move(out_);
    }

private:
    void reject_non_el() {
        std::vector<std::string> offending;
        for (const auto& ax : in_.axioms()) {
            bool bad = false;
            if (ax.kind() == AxiomKind::SubClassOf)
                bad = uses_non_el(*ax.sub_class()) || uses_non_el(*ax.super_class());
            else if (ax.kind() == AxiomKind::EquivalentClasses)
                for (const auto& m : ax.members())
                    bad = bad || uses_non_el(*m);
            if (bad)
                offending.push_back(to_functional(ax));
        }
        if (!offending.empty())
            throw NormalisationError("ontology uses constructs outside the supported fragment (" +
                                         std::to_string(offending.size()) + " axiom(s))",
                                     offending);
    }

    // owl:Thing conjuncts vanish, owl:Nothing poisons, nested
    // conjunctions flatten, Er.owl:Nothing collapses to owl:Nothing,
    // duplicates fold away.
    ConceptPtr simplify(const ConceptPtr& e) {
        switch (e->kind()) {
        case ExprKind::Top:
        case ExprKind::Bottom:
        case ExprKind::Named:
            return e;
        case ExprKind::Some: {
            auto f = simplify(e->filler());
            if (f->kind() == ExprKind::Bottom)
                return ConceptExpr::bottom();
            if (f == e->filler())
                return e;
            return ConceptExpr::some(e->role(), f);
        }
        case ExprKind::And: {
            std::vector<ConceptPtr> flat;
            for (const auto& op : e->operands()) {
                auto s = simplify(op);
                if (s->kind() == ExprKind::Bottom)
                    return ConceptExpr::bottom();
                if (s->kind() == ExprKind::Top)
                    continue;
                if (s->kind() == ExprKind::And) {
                    for (const auto& inner : s->operands())
                        flat.push_back(inner);
                } else {
                    flat.push_back(s);
                }
            }
            std::vector<ConceptPtr> unique;
            for (const auto& op : flat) {
                bool seen = false;
                for (const auto& u : unique)
                    if (*u == *op) {
                        seen = true;
                        break;
                    }
                if (!seen)
                    unique.push_back(op);
            }
            if (unique.empty())
                return ConceptExpr::top();
            if (unique.size() == 1)
                return unique[0];
            return ConceptExpr::intersection(std::move(unique));
        }
        default:
            throw ValidationError("simplify reached a non-EL expression");
        }
    }

    // One fresh name per distinct complex expression; numbering skips
    // anything already taken by the input signature.
    ConceptPtr fresh_for(const ConceptPtr& expr) {
        auto it = fresh_.find(expr);
        if (it != fresh_.end())
            return it->second;
        Iri iri = [&] {
            for (;;) {
                Iri candidate(std::string(kFreshNamespace) + "N" + std::to_string(counter_++));
                if (!in_.contains_concept(candidate) && !in_.contains_role(candidate) &&
                    !in_.contains_individual(candidate))
                    return candidate;
            }
        }();
        auto name = ConceptExpr::named(iri);
        fresh_.emplace(expr, name);
        defs_.emplace_back(iri, expr);
        return name;
    }

    void add(Axiom ax) { out_.add_axiom(ax); }

    void emit(const ConceptPtr& rawL, const ConceptPtr& rawR) {
        emit_simplified(simplify(rawL), simplify(rawR));
    }

    void emit_simplified(ConceptPtr L, ConceptPtr R) {
        if (L->kind() == ExprKind::Bottom || R->kind() == ExprKind::Top)
            return; // tautology
        // Conjunctive right-hand sides split before anything else.
        if (R->kind() == ExprKind::And) {
            for (const auto& conjunct : R->operands())
                emit_simplified(L, conjunct);
            return;
        }
        if (is_basic(*L)) {
            if (is_basic(*R) || R->kind() == ExprKind::Bottom) {
                add(Axiom::subclass_of(L, R));
                return;
            }
            // R is an existential.  Its filler must end up named.
            const auto& F = R->filler();
            if (F->is_named()) {
                add(Axiom::subclass_of(L, R));
                return;
            }
            auto N = fresh_for(F);
            add(Axiom::subclass_of(L, ConceptExpr::some(R->role(), N)));
            if (F->kind() != ExprKind::Top)
                emit_simplified(N, F);
            return;
        }
        if (L->kind() == ExprKind::Some) {
            if (is_basic(*R) || R->kind() == ExprKind::Bottom) {
                const auto& F = L->filler();
                if (is_basic(*F)) {
                    add(Axiom::subclass_of(L, R));
                } else {
                    auto A = fresh_for(F);
                    emit_simplified(F, A);
                    add(Axiom::subclass_of(ConceptExpr::some(L->role(), A), R));
                }
                return;
            }
            // Complex on both sides: route through a middle name.
            auto A = fresh_for(L);
            emit_simplified(L, A);
            emit_simplified(A, R);
            return;
        }
        // L is a conjunction (simplify() leaves nothing else).
        std::vector<ConceptPtr> conjuncts;
        for (const auto& op : L->operands()) {
            if (is_basic(*op)) {
                conjuncts.push_back(op);
            } else {
                auto B = fresh_for(op);
                emit_simplified(op, B);
                conjuncts.push_back(B);
            }
        }
        if (!(is_basic(*R) || R->kind() == ExprKind::Bottom)) {
            auto A = fresh_for(R);
            fold(conjuncts, A);
            emit_simplified(A, R);
            return;
        }
        fold(conjuncts, R);
    }

    // B1 n ... n Bn [= target, all basic: left-fold through fresh names
    // so every emitted conjunction is binary.
    void fold(const std::vector<ConceptPtr>& conjuncts, const ConceptPtr& target) {
        ConceptPtr acc = conjuncts[0];
        for (std::size_t i = 1; i + 1 < conjuncts.size(); ++i) {
            auto prefix = ConceptExpr::intersection({acc, conjuncts[i]});
            auto N = fresh_for(prefix);
            add(Axiom::subclass_of(prefix, N));
            acc = N;
        }
        if (conjuncts.size() == 1)
            add(Axiom::subclass_of(acc, target));
        else
            add(Axiom::subclass_of(
                ConceptExpr::intersection({acc, conjuncts.back()}), target));
    }

    const Ontology& in_;
    Ontology out_;
    std::unordered_map<ConceptPtr, ConceptPtr, ConceptPtrHash, ConceptPtrEqual> fresh_;
    std::vector<std::pair<Iri, ConceptPtr>> defs_;
    unsigned counter_ = 0;
};

} // namespace

Ontology normalise(const Ontology& onto, std::vector<std::pair<Iri, ConceptPtr>>* definitions) {
    Normaliser n(onto);
    Ontology out = n.run();
    if (definitions)
        *definitions = std::move(n.take_definitions());
    return out;
}

} // namespace ontokit
