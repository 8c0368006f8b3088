#ifndef ONTOKIT_VERBALISER_HPP
#define ONTOKIT_VERBALISER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontokit/ontology.hpp"
#include "ontokit/taxonomy.hpp"

namespace ontokit {

// Looks up entity wordings.  A concept's wording is the first
// annotation value found walking the configured properties in order
// (assertion order within one property), lowercased with its
// whitespace collapsed.  Concepts without any label cannot be worded;
// roles fall back to splitting the IRI fragment on camelCase bumps,
// underscores and hyphens ("derivesFrom" -> "derives from").
class Labeller {
public:
    explicit Labeller(const Ontology& onto,
                      std::vector<Iri> properties = {vocab::rdfs_label()});

    std::optional<std::string> concept_label(const Iri& iri) const;
    // Every normalised label in property-then-assertion order, duplicates
    // and empty strings dropped.
    std::vector<std::string> concept_labels(const Iri& iri) const;
    // Throws ValidationError naming the IRI when no label exists.
    std::string require_concept_label(const Iri& iri) const;
    std::string role_label(const Iri& iri) const;

private:
    const Ontology& onto_;
    std::vector<Iri> properties_;
};

// Lowercase, trim, and collapse internal whitespace runs to one space.
std::string normalise_label(const std::string& raw);

// Recursively words a concept expression as one sentence fragment:
// named leaves use their label, And joins named heads with " and " and
// hangs every other operand behind " that " (a direct existential there
// loses its "some"), Or joins with " or ", Not prefixes "not ",
// standalone restrictions read "<role> some <filler>" / "<role> only
// <filler>", and the builtins read "thing" / "nothing".  Unlabelled
// concepts raise ValidationError.
std::string verbalise(const ConceptPtr& expr, const Labeller& labels);

enum class ContextMode { Isolated, Path, Breadth };
enum class ContextDirection { Up, Down };

struct ContextOptions {
    ContextMode mode = ContextMode::Isolated;
    ContextDirection direction = ContextDirection::Up;
    std::size_t limit = 8;  // labels emitted, the concept's own included
    bool strict = false;    // unlabelled: false = skip with warning, true = error
};

// Textual context of a named concept over the taxonomy:
//
//   Isolated  - the concept's own label.
//   Path      - labels along one subsumption path from the concept
//               towards the root (direction up) or a leaf (down),
//               following the lexicographically smallest parent/child
//               at every step; the root itself is never worded.
//   Breadth   - labels in breadth-first order from the concept, level
//               by level, lexicographic within a level, root skipped.
//
// Labels are joined with " <SEP> " and truncation happens after
// `limit` emitted labels.  Unlabelled concepts on the way are skipped
// with a warning (strict mode raises ValidationError); they do not
// count toward the limit.  The concept must sit in the taxonomy.
std::string context_text(const Labeller& labels, const Taxonomy& taxonomy, const Iri& concept_iri,
                         const ContextOptions& options,
                         std::vector<std::string>* warnings = nullptr);

} // namespace ontokit

#endif
