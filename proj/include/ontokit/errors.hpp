#ifndef ONTOKIT_ERRORS_HPP
#define ONTOKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ontokit {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition or invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A lookup by IRI failed against the relevant signature.
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& iri, const std::string& context)
        : Error(context + ": unknown IRI <" + iri + ">"), iri_(iri) {}
    const std::string& iri() const noexcept { return iri_; }

private:
    std::string iri_;
};

// Raised when an ontology leaves the EL fragment; carries every
// offending axiom rendered in functional-style syntax.
class NormalisationError : public ValidationError {
public:
    NormalisationError(const std::string& message, std::vector<std::string> offending)
        : ValidationError(message), offending_(std::move(offending)) {}
    const std::vector<std::string>& offending_axioms() const noexcept { return offending_; }

private:
    std::vector<std::string> offending_;
};

// Concept-expression or document text failed to parse; position is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace ontokit

#endif
