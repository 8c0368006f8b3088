#ifndef ONTOKIT_MATCHER_HPP
#define ONTOKIT_MATCHER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ontokit/ontology.hpp"
#include "ontokit/verbaliser.hpp"

namespace ontokit {

class Reasoner;

enum class MappingRelation { Equivalence, Subsumption };

struct Mapping {
    Iri source;
    Iri target;
    MappingRelation relation = MappingRelation::Equivalence;
    double score = 0.0; // in [0, 1]

    friend bool operator==(const Mapping& a, const Mapping& b) {
        return a.source == b.source && a.target == b.target && a.relation == b.relation &&
               a.score == b.score;
    }
};

// Splits a normalised label into sub-word tokens.  Pluggable so the
// index can swap tokenisation schemes without changing its logic.
class Tokeniser {
public:
    virtual ~Tokeniser() = default;
    virtual std::vector<std::string> tokens(const std::string& label) const = 0;
};

// Words (split on anything non-alphanumeric, lowercased) plus the
// character trigrams of every word.
class SubWordTokeniser final : public Tokeniser {
public:
    std::vector<std::string> tokens(const std::string& label) const override;
};

// Token to concept postings over every label of every concept.  The
// tokeniser must outlive the index.
class InvertedIndex {
public:
    InvertedIndex(const Ontology& onto, const std::vector<Iri>& properties,
                  const Tokeniser& tokeniser);

    // Number of labelled concepts (the N in idf = log(N / df)).
    std::size_t concept_count() const noexcept { return concepts_; }
    std::size_t document_frequency(const std::string& token) const;
    std::vector<Iri> posting(const std::string& token) const; // sorted

    // Concepts sharing at least one token with the given labels, ranked
    // by the summed idf of the shared tokens (ties by IRI), truncated
    // to the k best.
    std::vector<Iri> select_candidates(const std::vector<std::string>& source_labels,
                                       std::size_t k) const;

private:
    std::map<std::string, std::vector<Iri>> postings_;
    std::size_t concepts_ = 0;
    const Tokeniser* tokeniser_;
};

// Best normalised-label similarity over all pairs: 1 when some pair is
// equal, otherwise max of 1 - editdistance/maxlength.  Either side
// empty is a ValidationError.
double lexical_score(const std::vector<std::string>& labels_a,
                     const std::vector<std::string>& labels_b);

struct MatcherConfig {
    std::size_t k = 10;     // candidates per source concept
    double lambda = 0.995;  // acceptance threshold
    double kappa = 0.9;     // extension threshold
    bool one_to_one = false;
    std::vector<Iri> annotation_properties = {vocab::rdfs_label()};
};

// The full pipeline: index the target, select and score candidates per
// source concept (all best-scoring targets with score >= lambda are
// kept), extend over the hierarchies with threshold kappa, repair
// conflicts greedily, sort by (score desc, source, target), and - when
// one_to_one is set - keep only the first (best) target per source.
// match() fans the per-source scoring out over threads when OpenMP is
// available; match_serial() is the single-threaded reference with
// identical output.
std::vector<Mapping> match(const Ontology& src, const Ontology& tgt,
                           const MatcherConfig& cfg = {});
std::vector<Mapping> match_serial(const Ontology& src, const Ontology& tgt,
                                  const MatcherConfig& cfg = {});

// Baseline: source and target concepts match (score 1) when some label
// of one is a substring of a label of the other.
std::vector<Mapping> substring_match(const Ontology& src, const Ontology& tgt,
                                     const std::vector<Iri>& properties = {vocab::rdfs_label()});

// Locality extension: starting from the accepted mappings, score every
// unscored asserted-named parent x parent and child x child pair of an
// accepted pair, accept those reaching kappa, and repeat until the
// frontier dries up.  Returns input plus additions.
std::vector<Mapping> extend(const std::vector<Mapping>& mappings, const Ontology& src,
                            const Ontology& tgt, double kappa,
                            const std::vector<Iri>& properties = {vocab::rdfs_label()});

// Greedy conflict repair over the told closures: two mappings conflict
// when their sources are told-comparable but their targets are told
// assumed-disjoint.  While conflicts remain, the mapping in the most
// conflicts goes (ties: lower score, then lexicographic).  Mapped
// entities must exist in their ontologies.
std::vector<Mapping> repair(const std::vector<Mapping>& mappings, const Reasoner& src_reasoner,
                            const Reasoner& tgt_reasoner);

// TSV with header "SrcEntity<TAB>TgtEntity<TAB>Score", scores printed
// with six decimals.
std::string to_tsv(const std::vector<Mapping>& mappings);
std::vector<Mapping> parse_mappings_tsv(const std::string& text);

} // namespace ontokit

#endif
