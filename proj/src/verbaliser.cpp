#include "ontokit/verbaliser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ontokit/errors.hpp"

namespace ontokit {

std::string normalise_label(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char ch : raw) {
        if (std::isspace(ch)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(std::tolower(ch));
    }
    return out;
}

namespace {

// "derivesFrom" / "has_part" / "has-part" -> "derives from" / "has part".
std::string split_fragment_words(const std::string& fragment) {
    std::string spaced;
    spaced.reserve(fragment.size() + 4);
    for (unsigned char ch : fragment) {
        if (ch == '_' || ch == '-') {
            spaced += ' ';
            continue;
        }
        if (std::isupper(ch) && !spaced.empty() && spaced.back() != ' ')
            spaced += ' ';
        spaced += static_cast<char>(ch);
    }
    return normalise_label(spaced);
}

} // namespace

Labeller::Labeller(const Ontology& onto, std::vector<Iri> properties)
    : onto_(onto), properties_(std::move(properties)) {}

std::optional<std::string> Labeller::concept_label(const Iri& iri) const {
    std::vector<std::string> all = concept_labels(iri);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

std::vector<std::string> Labeller::concept_labels(const Iri& iri) const {
    std::vector<std::string> out;
    for (const Iri& property : properties_) {
        for (const Literal& value : onto_.annotations(iri, property)) {
            std::string norm = normalise_label(value.text);
            if (norm.empty())
                continue;
            if (std::find(out.begin(), out.end(), norm) == out.end())
                out.push_back(norm);
        }
    }
    return out;
}

std::string Labeller::require_concept_label(const Iri& iri) const {
    if (auto label = concept_label(iri))
        return *label;
    throw ValidationError("no label for " + iri.str());
}

std::string Labeller::role_label(const Iri& iri) const {
    if (auto label = concept_label(iri))
        return *label;
    return split_fragment_words(iri.fragment());
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* glue) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += glue;
        out += parts[i];
    }
    return out;
}

std::string phrase(const ConceptPtr& e, const Labeller& labels, bool attached) {
    switch (e->kind()) {
    case ExprKind::Top:
        return "thing";
    case ExprKind::Bottom:
        return "nothing";
    case ExprKind::Named:
        return labels.require_concept_label(e->iri());
    case ExprKind::Not:
        return "not " + phrase(e->filler(), labels, false);
    case ExprKind::Some:
        // Hung behind "that" the quantifier word disappears: "... that
        // derives from invertebrate animal".
        if (attached)
            return labels.role_label(e->role()) + " " + phrase(e->filler(), labels, false);
        return labels.role_label(e->role()) + " some " + phrase(e->filler(), labels, false);
    case ExprKind::Only:
        return labels.role_label(e->role()) + " only " + phrase(e->filler(), labels, false);
    case ExprKind::Or: {
        std::vector<std::string> parts;
        for (const ConceptPtr& op : e->operands())
            parts.push_back(phrase(op, labels, false));
        return join(parts, " or ");
    }
    case ExprKind::And: {
        std::vector<std::string> heads;
        std::vector<std::string> rest;
        for (const ConceptPtr& op : e->operands()) {
            ExprKind k = op->kind();
            if (k == ExprKind::Named || k == ExprKind::Top || k == ExprKind::Bottom)
                heads.push_back(phrase(op, labels, false));
            else
                rest.push_back(phrase(op, labels, true));
        }
        if (rest.empty())
            return join(heads, " and ");
        if (heads.empty()) {
            // No head to hang off: render the operands standalone.
            rest.clear();
            for (const ConceptPtr& op : e->operands())
                rest.push_back(phrase(op, labels, false));
            return join(rest, " and ");
        }
        return join(heads, " and ") + " that " + join(rest, " and ");
    }
    }
    throw ValidationError("unreachable expression kind");
}

} // namespace

std::string verbalise(const ConceptPtr& expr, const Labeller& labels) {
    return phrase(expr, labels, false);
}

namespace {

constexpr const char* kSeparator = " <SEP> ";

// Appends the label when there is one; otherwise warns or throws.
// Returns true when a label was emitted.
bool emit(const Labeller& labels, const Iri& iri, const ContextOptions& options,
          std::vector<std::string>* warnings, std::vector<std::string>& out) {
    if (auto label = labels.concept_label(iri)) {
        out.push_back(*label);
        return true;
    }
    if (options.strict)
        throw ValidationError("no label for " + iri.str());
    if (warnings)
        warnings->push_back("skipped unlabelled concept " + iri.str());
    return false;
}

} // namespace

std::string context_text(const Labeller& labels, const Taxonomy& taxonomy,
                         const Iri& concept_iri, const ContextOptions& options,
                         std::vector<std::string>* warnings) {
    const Iri node = taxonomy.resolve(concept_iri);
    if (!taxonomy.contains(node))
        throw NotFoundError(concept_iri.str(), "taxonomy context");

    std::vector<std::string> out;
    if (options.limit == 0)
        return "";

    if (options.mode == ContextMode::Isolated) {
        emit(labels, concept_iri, options, warnings, out);
        return join(out, kSeparator);
    }

    const bool up = options.direction == ContextDirection::Up;

    // The queried concept speaks for itself; the walk continues over
    // the collapsed taxonomy nodes.
    emit(labels, concept_iri, options, warnings, out);

    if (options.mode == ContextMode::Path) {
        Iri current = node;
        while (out.size() < options.limit) {
            const std::vector<Iri>& next =
                up ? taxonomy.parents(current) : taxonomy.children(current);
            if (next.empty() || (up && next.front() == taxonomy.root()))
                break;
            current = next.front(); // sorted: lexicographically smallest
            emit(labels, current, options, warnings, out);
        }
        return join(out, kSeparator);
    }

    // Breadth-first, level by level; each level arrives sorted because
    // parent/child lists are sorted and the frontier is a sorted set.
    std::set<Iri> visited{node, taxonomy.root()};
    std::vector<Iri> level{node};
    while (!level.empty() && out.size() < options.limit) {
        std::set<Iri> next_level;
        for (const Iri& n : level)
            for (const Iri& neighbour : up ? taxonomy.parents(n) : taxonomy.children(n))
                if (!visited.count(neighbour))
                    next_level.insert(neighbour);
        level.clear();
        for (const Iri& n : next_level) {
            if (out.size() >= options.limit)
                break;
            visited.insert(n);
            level.push_back(n);
            emit(labels, n, options, warnings, out);
        }
    }
    return join(out, kSeparator);
}

} // namespace ontokit
