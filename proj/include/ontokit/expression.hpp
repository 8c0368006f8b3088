#ifndef ONTOKIT_EXPRESSION_HPP
#define ONTOKIT_EXPRESSION_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "ontokit/iri.hpp"

namespace ontokit {

enum class ExprKind { Top, Bottom, Named, Not, Some, Only, And, Or };

class ConceptExpr;
using ConceptPtr = std::shared_ptr<const ConceptExpr>;

// Immutable concept expression.  Nodes are built through the static
// factories and shared freely; equality is structural with And/Or
// treated as order-insensitive (comparison runs over a canonically
// sorted copy of the operand list, the insertion order is kept for
// printing).  The structural hash is precomputed at construction.
class ConceptExpr {
public:
    // Factories.  named() canonicalises owl:Thing / owl:Nothing to the
    // Top / Bottom singletons so the two spellings compare equal.
    static ConceptPtr top();
    static ConceptPtr bottom();
    static ConceptPtr named(Iri iri);
    static ConceptPtr complement(ConceptPtr operand);
    static ConceptPtr some(Iri role, ConceptPtr filler);
    static ConceptPtr only(Iri role, ConceptPtr filler);
    static ConceptPtr intersection(std::vector<ConceptPtr> operands); // needs >= 2
    static ConceptPtr union_of(std::vector<ConceptPtr> operands);     // needs >= 2

    ExprKind kind() const noexcept { return kind_; }
    bool is_named() const noexcept { return kind_ == ExprKind::Named; }

    // Defined for Top, Bottom and Named (vocabulary IRIs for the first two).
    const Iri& iri() const;
    // Defined for Some and Only.
    const Iri& role() const;
    // Defined for Not, Some and Only.
    const ConceptPtr& filler() const;
    // Defined for And and Or; insertion order.
    const std::vector<ConceptPtr>& operands() const;
    // Defined for And and Or; sorted by compare(), used for equality.
    const std::vector<ConceptPtr>& canonical_operands() const;

    std::size_t hash() const noexcept { return hash_; }

    // Total order over expressions: kind first, then payload, with
    // And/Or compared over their canonical operand lists.  Consistent
    // with operator== (compare()==0 iff equal).
    static int compare(const ConceptExpr& a, const ConceptExpr& b);

    friend bool operator==(const ConceptExpr& a, const ConceptExpr& b) {
        return a.hash_ == b.hash_ && compare(a, b) == 0;
    }
    friend bool operator!=(const ConceptExpr& a, const ConceptExpr& b) { return !(a == b); }

private:
    struct Key {};

public:
    // Public so make_shared can reach it; Key keeps callers on the factories.
    ConceptExpr(Key, ExprKind kind, Iri iri, ConceptPtr filler, std::vector<ConceptPtr> operands);

private:
    ExprKind kind_;
    Iri iri_;      // Named: the concept IRI; Some/Only: the role IRI
    ConceptPtr filler_;
    std::vector<ConceptPtr> operands_;
    std::vector<ConceptPtr> canonical_;
    std::size_t hash_ = 0;
};

// Heterogeneous helpers for containers of shared expressions.
struct ConceptPtrLess {
    bool operator()(const ConceptPtr& a, const ConceptPtr& b) const {
        return ConceptExpr::compare(*a, *b) < 0;
    }
};
struct ConceptPtrEqual {
    bool operator()(const ConceptPtr& a, const ConceptPtr& b) const { return *a == *b; }
};
struct ConceptPtrHash {
    std::size_t operator()(const ConceptPtr& p) const noexcept { return p->hash(); }
};

} // namespace ontokit

#endif
