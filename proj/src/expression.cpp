#include "ontokit/expression.hpp"

#include <algorithm>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    // boost::hash_combine flavour; good enough for bucketing.
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

ConceptExpr::ConceptExpr(Key, ExprKind kind, Iri iri, ConceptPtr filler,
                         std::vector<ConceptPtr> operands)
    : kind_(kind), iri_(std::move(iri)), filler_(std::move(filler)), operands_(std::move(operands)) {
    if (kind_ == ExprKind::And || kind_ == ExprKind::Or) {
        canonical_ = operands_;
        std::sort(canonical_.begin(), canonical_.end(), ConceptPtrLess{});
    }
    std::size_t h = static_cast<std::size_t>(kind_) + 0x51ed270b;
    if (!iri_.empty())
        h = mix(h, std::hash<Iri>{}(iri_));
    if (filler_)
        h = mix(h, filler_->hash());
    for (const auto& op : canonical_)
        h = mix(h, op->hash());
    hash_ = h;
}

ConceptPtr ConceptExpr::top() {
    static const ConceptPtr instance =
        std::make_shared<ConceptExpr>(Key{}, ExprKind::Top, vocab::thing(), nullptr,
                                      std::vector<ConceptPtr>{});
    return instance;
}

ConceptPtr ConceptExpr::bottom() {
    static const ConceptPtr instance =
        std::make_shared<ConceptExpr>(Key{}, ExprKind::Bottom, vocab::nothing(), nullptr,
                                      std::vector<ConceptPtr>{});
    return instance;
}

ConceptPtr ConceptExpr::named(Iri iri) {
    if (iri == vocab::thing())
        return top();
    if (iri == vocab::nothing())
        return bottom();
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::Named, std::move(iri), nullptr,
                                         std::vector<ConceptPtr>{});
}

ConceptPtr ConceptExpr::complement(ConceptPtr operand) {
    if (!operand)
        throw ValidationError("ObjectComplementOf needs an operand");
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::Not, Iri{}, std::move(operand),
                                         std::vector<ConceptPtr>{});
}

ConceptPtr ConceptExpr::some(Iri role, ConceptPtr filler) {
    if (!filler)
        throw ValidationError("ObjectSomeValuesFrom needs a filler");
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::Some, std::move(role), std::move(filler),
                                         std::vector<ConceptPtr>{});
}

ConceptPtr ConceptExpr::only(Iri role, ConceptPtr filler) {
    if (!filler)
        throw ValidationError("ObjectAllValuesFrom needs a filler");
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::Only, std::move(role), std::move(filler),
                                         std::vector<ConceptPtr>{});
}

ConceptPtr ConceptExpr::intersection(std::vector<ConceptPtr> operands) {
    if (operands.size() < 2)
        throw ValidationError("ObjectIntersectionOf needs at least two operands");
    for (const auto& op : operands)
        if (!op)
            throw ValidationError("ObjectIntersectionOf has a null operand");
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::And, Iri{}, nullptr, std::move(operands));
}

ConceptPtr ConceptExpr::union_of(std::vector<ConceptPtr> operands) {
    if (operands.size() < 2)
        throw ValidationError("ObjectUnionOf needs at least two operands");
    for (const auto& op : operands)
        if (!op)
            throw ValidationError("ObjectUnionOf has a null operand");
    return std::make_shared<ConceptExpr>(Key{}, ExprKind::Or, Iri{}, nullptr, std::move(operands));
}

const Iri& ConceptExpr::iri() const {
    if (kind_ != ExprKind::Named && kind_ != ExprKind::Top && kind_ != ExprKind::Bottom)
        throw ValidationError("iri() called on a composite expression");
    return iri_;
}

const Iri& ConceptExpr::role() const {
    if (kind_ != ExprKind::Some && kind_ != ExprKind::Only)
        throw ValidationError("role() called on a non-restriction expression");
    return iri_;
}

const ConceptPtr& ConceptExpr::filler() const {
    if (kind_ != ExprKind::Not && kind_ != ExprKind::Some && kind_ != ExprKind::Only)
        throw ValidationError("filler() called on an expression without one");
    return filler_;
}

const std::vector<ConceptPtr>& ConceptExpr::operands() const {
    if (kind_ != ExprKind::And && kind_ != ExprKind::Or)
        throw ValidationError("operands() called on a non-boolean expression");
    return operands_;
}

const std::vector<ConceptPtr>& ConceptExpr::canonical_operands() const {
    if (kind_ != ExprKind::And && kind_ != ExprKind::Or)
        throw ValidationError("canonical_operands() called on a non-boolean expression");
    return canonical_;
}

int ConceptExpr::compare(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.kind_ != b.kind_)
        return a.kind_ < b.kind_ ? -1 : 1;
    switch (a.kind_) {
    case ExprKind::Top:
    case ExprKind::Bottom:
        return 0;
    case ExprKind::Named:
        return a.iri_.str().compare(b.iri_.str()) < 0   ? -1
               : a.iri_.str().compare(b.iri_.str()) > 0 ? 1
                                                        : 0;
    case ExprKind::Not:
        return compare(*a.filler_, *b.filler_);
    case ExprKind::Some:
    case ExprKind::Only: {
        int r = a.iri_.str().compare(b.iri_.str());
        if (r != 0)
            return r < 0 ? -1 : 1;
        return compare(*a.filler_, *b.filler_);
    }
    case ExprKind::And:
    case ExprKind::Or: {
        if (a.canonical_.size() != b.canonical_.size())
            return a.canonical_.size() < b.canonical_.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.canonical_.size(); ++i) {
            int r = compare(*a.canonical_[i], *b.canonical_[i]);
            if (r != 0)
                return r;
        }
        return 0;
    }
    }
    return 0; // unreachable
}

} // namespace ontokit
