#ifndef ONTOKIT_PARSER_HPP
#define ONTOKIT_PARSER_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontokit/ontology.hpp"

namespace ontokit {

// A non-fatal observation made while parsing (currently always a
// recognised-but-unsupported construct that was skipped).
struct Diagnostic {
    std::string message;
    int line = 0;
    int column = 0;

    std::string render() const {
        return "warning: " + message + " (line " + std::to_string(line) + ", column " +
               std::to_string(column) + ")";
    }
};

struct ParseResult {
    Ontology ontology;
    std::vector<Diagnostic> warnings;
};

// Parse a functional-style-syntax document.  Constructs outside the
// supported subset but inside the official grammar are skipped with a
// warning; malformed or unknown input throws ParseError.
ParseResult parse_functional(std::string_view text);

// Parse one standalone class expression, e.g. from a command line.
// Prefix names are resolved against the given table; here unsupported
// constructs are errors, since there is nothing to skip to.
ConceptPtr parse_concept_expression(std::string_view text,
                                    const std::map<std::string, std::string>& prefixes);

} // namespace ontokit

#endif
