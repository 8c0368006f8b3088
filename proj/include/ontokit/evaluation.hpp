#ifndef ONTOKIT_EVALUATION_HPP
#define ONTOKIT_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontokit/matcher.hpp"
#include "ontokit/taxonomy.hpp"

namespace ontokit {

class Reasoner;

// One set of evaluation numbers.  Global (set-based) evaluation fills
// precision/recall/f_score; ranking evaluation fills mrr/hits_at and
// leaves the set metrics at zero.
struct MetricReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
    std::optional<double> mrr;
    std::map<std::size_t, double> hits_at; // K -> fraction, non-decreasing in K
    // Set when a denominator was zero and the metric was reported as 0.
    bool division_by_zero = false;
};

// Set-based precision / recall / F over mappings compared on
// (source, target, relation) - scores are ignored.  Mappings in
// `ignored` (say, the train and validation portions of a split) are
// removed from both sides first.  Empty denominators score 0 and set
// the division_by_zero flag.
MetricReport global_metrics(const std::vector<Mapping>& pred, const std::vector<Mapping>& ref,
                            const std::vector<Mapping>& ignored = {});

// One ranking query: the gold target must appear exactly once among
// the candidates, which are ordered best-first by the system under
// evaluation.
struct RankingCase {
    Iri source;
    Iri gold;
    std::vector<Iri> candidates;

    friend bool operator==(const RankingCase& a, const RankingCase& b) {
        return a.source == b.source && a.gold == b.gold && a.candidates == b.candidates;
    }
};

// MRR = mean of 1/rank(gold); Hits@K = fraction of cases with
// rank(gold) <= K, computed for each requested K.  Ranks are 1-based.
// A case whose gold is missing or duplicated raises ValidationError
// naming the case; so does an empty case list.
MetricReport ranking_metrics(const std::vector<RankingCase>& cases,
                             const std::vector<std::size_t>& hits_at = {1, 5, 10});

enum class SplitSetting { Unsupervised, SemiSupervised };

// Disjoint partition of a reference set; union restores the input.
struct ReferenceSplit {
    std::vector<Mapping> train;
    std::vector<Mapping> validation;
    std::vector<Mapping> test;
    SplitSetting setting = SplitSetting::Unsupervised;
};

// Seeded uniform partition.  Unsupervised: no train, 10% validation,
// rest test.  Semi-supervised: 20% train, 10% validation, rest test.
// Shares are floored; the remainder goes to test.  The input is
// treated as a set (sorted, deduplicated) so the partition depends
// only on its contents, the setting and the seed.  Fewer than 10
// references raise ValidationError.
ReferenceSplit split_references(const std::vector<Mapping>& refs, SplitSetting setting,
                                std::uint64_t seed);

// How ranking negatives are drawn: uniformly from the eligible target
// concepts, or lexically-similar-first through the sub-word index
// (remaining slots filled uniformly).
enum class NegativePolicy { Random, Hard };

// n candidate IRIs for one reference: the gold target exactly once at
// a seeded position, plus n-1 negatives sampled without replacement
// from the target's named concepts, excluding the gold and everything
// entailed equivalent to it.  Deterministic under (inputs, seed).
// Unknown gold raises NotFoundError; n < 2 or too few eligible
// concepts raise ValidationError.
std::vector<Iri> ranking_candidates(const Mapping& ref, const Reasoner& tgt_reasoner,
                                    std::size_t n, std::uint64_t seed,
                                    NegativePolicy policy = NegativePolicy::Random,
                                    const std::vector<Iri>& properties = {vocab::rdfs_label()});

struct SubsumptionDataset {
    std::vector<Mapping> references; // relation = Subsumption, sorted, deduplicated
    Ontology pruned_target;
    // Equivalence references that produced nothing: target unsatisfiable
    // or its only direct subsumer is the top concept.
    std::size_t barren_refs = 0;
    // Subsumption references dropped because their parent concept was
    // itself deleted from the target.
    std::size_t dropped_refs = 0;
};

// Turns equivalence references (c ~ d) into subsumption references
// (c below e) for every direct taxonomy parent e of d other than the
// top concept, then prunes every producing d out of the target so the
// direct link must be found rather than read off.  Deletion victims
// are fixed before references to them are dropped (single pass).
SubsumptionDataset build_subsumption_dataset(const std::vector<Mapping>& equiv_refs,
                                             const Ontology& tgt, const Taxonomy& tgt_taxonomy);

// Ranking case files: TSV with header
// "SrcEntity<TAB>TgtEntity<TAB>CandidateList", candidates comma-joined.
std::string to_ranking_tsv(const std::vector<RankingCase>& cases);
std::vector<RankingCase> parse_ranking_tsv(const std::string& text);

} // namespace ontokit

#endif
