#ifndef ONTOKIT_SERIALIZER_HPP
#define ONTOKIT_SERIALIZER_HPP

#include <string>

#include "ontokit/ontology.hpp"

namespace ontokit {

// Functional-style rendering.  IRIs are written in full angle-bracket
// form except owl:Thing / owl:Nothing, which keep their short names.
std::string to_functional(const ConceptExpr& expr);
std::string to_functional(const Axiom& axiom);

// Whole document: prefix table, ontology header, declarations derived
// from the signature (sorted), then the axioms in insertion order.
// parse_functional(serialise(o)) reproduces o's signature and axioms,
// and a second serialise round is byte-identical.
std::string serialise(const Ontology& onto);

} // namespace ontokit

#endif
