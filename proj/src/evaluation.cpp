#include "ontokit/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <tuple>

#include "ontokit/errors.hpp"
#include "ontokit/pruning.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

namespace {

using MappingKey = std::tuple<Iri, Iri, MappingRelation>;

MappingKey key_of(const Mapping& m) { return {m.source, m.target, m.relation}; }

bool canonical_less(const Mapping& a, const Mapping& b) {
    return std::tie(a.source, a.target, a.relation, a.score) <
           std::tie(b.source, b.target, b.relation, b.score);
}

// Uniform draw from [0, bound) by rejection, so the sequence depends
// only on the engine's well-defined 64-bit output stream.
std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = eng();
    while (x >= limit)
        x = eng();
    return x % bound;
}

template <typename T> void fisher_yates(std::vector<T>& items, std::mt19937_64& eng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[uniform_below(eng, i)]);
}

} // namespace

MetricReport global_metrics(const std::vector<Mapping>& pred, const std::vector<Mapping>& ref,
                            const std::vector<Mapping>& ignored) {
    std::set<MappingKey> skip;
    for (const Mapping& m : ignored)
        skip.insert(key_of(m));

    std::set<MappingKey> pred_keys;
    for (const Mapping& m : pred)
        if (!skip.count(key_of(m)))
            pred_keys.insert(key_of(m));
    std::set<MappingKey> ref_keys;
    for (const Mapping& m : ref)
        if (!skip.count(key_of(m)))
            ref_keys.insert(key_of(m));

    std::size_t hit = 0;
    for (const MappingKey& k : pred_keys)
        hit += ref_keys.count(k);

    MetricReport report;
    if (pred_keys.empty())
        report.division_by_zero = true;
    else
        report.precision = static_cast<double>(hit) / static_cast<double>(pred_keys.size());
    if (ref_keys.empty())
        report.division_by_zero = true;
    else
        report.recall = static_cast<double>(hit) / static_cast<double>(ref_keys.size());
    if (report.precision + report.recall > 0.0)
        report.f_score =
            2.0 * report.precision * report.recall / (report.precision + report.recall);
    return report;
}

MetricReport ranking_metrics(const std::vector<RankingCase>& cases,
                             const std::vector<std::size_t>& hits_at) {
    if (cases.empty())
        throw ValidationError("ranking metrics need at least one case");

    std::vector<std::size_t> ranks;
    ranks.reserve(cases.size());
    for (const RankingCase& c : cases) {
        std::size_t found = 0;
        std::size_t rank = 0;
        for (std::size_t i = 0; i < c.candidates.size(); ++i) {
            if (c.candidates[i] == c.gold) {
                ++found;
                rank = i + 1;
            }
        }
        if (found != 1)
            throw ValidationError("gold target <" + c.gold.str() + "> appears " +
                                  std::to_string(found) + " times in the candidates for <" +
                                  c.source.str() + ">");
        ranks.push_back(rank);
    }

    MetricReport report;
    double reciprocal_sum = 0.0;
    for (std::size_t r : ranks)
        reciprocal_sum += 1.0 / static_cast<double>(r);
    report.mrr = reciprocal_sum / static_cast<double>(ranks.size());
    for (std::size_t k : hits_at) {
        std::size_t within = 0;
        for (std::size_t r : ranks)
            within += r <= k ? 1 : 0;
        report.hits_at[k] = static_cast<double>(within) / static_cast<double>(ranks.size());
    }
    return report;
}

ReferenceSplit split_references(const std::vector<Mapping>& refs, SplitSetting setting,
                                std::uint64_t seed) {
    std::vector<Mapping> pool = refs;
    std::sort(pool.begin(), pool.end(), canonical_less);
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.size() < 10)
        throw ValidationError("splitting needs at least 10 distinct references, got " +
                              std::to_string(pool.size()));

    const std::size_t n = pool.size();
    const std::size_t train_n = setting == SplitSetting::SemiSupervised ? n / 5 : 0;
    const std::size_t val_n = n / 10;

    std::mt19937_64 eng(seed);
    fisher_yates(pool, eng);

    ReferenceSplit split;
    split.setting = setting;
    split.train.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(train_n));
    split.validation.assign(pool.begin() + static_cast<std::ptrdiff_t>(train_n),
                            pool.begin() + static_cast<std::ptrdiff_t>(train_n + val_n));
    split.test.assign(pool.begin() + static_cast<std::ptrdiff_t>(train_n + val_n), pool.end());
    std::sort(split.train.begin(), split.train.end(), canonical_less);
    std::sort(split.validation.begin(), split.validation.end(), canonical_less);
    std::sort(split.test.begin(), split.test.end(), canonical_less);
    return split;
}

std::vector<Iri> ranking_candidates(const Mapping& ref, const Reasoner& tgt_reasoner,
                                    std::size_t n, std::uint64_t seed, NegativePolicy policy,
                                    const std::vector<Iri>& properties) {
    const Ontology& tgt = tgt_reasoner.ontology();
    const Iri& gold = ref.target;
    if (!tgt.contains_concept(gold))
        throw NotFoundError(gold.str(), "ranking candidates");
    if (n < 2)
        throw ValidationError("ranking needs at least 2 candidates per case");

    const Iri gold_rep = tgt_reasoner.representative(gold);
    std::vector<Iri> pool;
    for (const Iri& c : tgt.concepts())
        if (c != gold && tgt_reasoner.representative(c) != gold_rep)
            pool.push_back(c);
    if (pool.size() < n - 1)
        throw ValidationError("target has only " + std::to_string(pool.size()) +
                              " eligible concepts for " + std::to_string(n - 1) + " negatives");

    std::mt19937_64 eng(seed);
    std::vector<Iri> negatives;
    negatives.reserve(n - 1);

    if (policy == NegativePolicy::Hard) {
        SubWordTokeniser tokeniser;
        InvertedIndex index(tgt, properties, tokeniser);
        Labeller labels(tgt, properties);
        const std::set<Iri> eligible(pool.begin(), pool.end());
        for (const Iri& c : index.select_candidates(labels.concept_labels(gold), tgt.concepts().size())) {
            if (negatives.size() + 1 == n)
                break;
            if (eligible.count(c) && std::find(negatives.begin(), negatives.end(), c) == negatives.end())
                negatives.push_back(c);
        }
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [&](const Iri& c) {
                                      return std::find(negatives.begin(), negatives.end(), c) !=
                                             negatives.end();
                                  }),
                   pool.end());
    }

    // Partial Fisher-Yates: draw the remaining negatives uniformly
    // without replacement.
    std::size_t need = n - 1 - negatives.size();
    for (std::size_t i = 0; i < need; ++i) {
        const std::size_t j = i + uniform_below(eng, pool.size() - i);
        std::swap(pool[i], pool[j]);
        negatives.push_back(pool[i]);
    }

    std::vector<Iri> out = std::move(negatives);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(uniform_below(eng, n)), gold);
    return out;
}

SubsumptionDataset build_subsumption_dataset(const std::vector<Mapping>& equiv_refs,
                                             const Ontology& tgt, const Taxonomy& tgt_taxonomy) {
    SubsumptionDataset out;
    std::set<Iri> deleted;
    std::vector<Mapping> raw;
    for (const Mapping& ref : equiv_refs) {
        const Iri node = tgt_taxonomy.resolve(ref.target);
        if (node == vocab::nothing()) {
            ++out.barren_refs;
            continue;
        }
        bool produced = false;
        for (const Iri& parent : tgt_taxonomy.parents(node)) {
            if (parent == vocab::thing())
                continue;
            raw.push_back({ref.source, parent, MappingRelation::Subsumption, ref.score});
            produced = true;
        }
        if (produced)
            deleted.insert(ref.target);
        else
            ++out.barren_refs;
    }

    for (Mapping& m : raw) {
        if (deleted.count(m.target))
            ++out.dropped_refs;
        else
            out.references.push_back(std::move(m));
    }
    std::sort(out.references.begin(), out.references.end(), canonical_less);
    out.references.erase(std::unique(out.references.begin(), out.references.end()),
                         out.references.end());

    out.pruned_target = prune(tgt, deleted);
    return out;
}

std::string to_ranking_tsv(const std::vector<RankingCase>& cases) {
    std::string out = "SrcEntity\tTgtEntity\tCandidateList\n";
    for (const RankingCase& c : cases) {
        out += c.source.str();
        out += '\t';
        out += c.gold.str();
        out += '\t';
        for (std::size_t i = 0; i < c.candidates.size(); ++i) {
            if (i)
                out += ',';
            out += c.candidates[i].str();
        }
        out += '\n';
    }
    return out;
}

std::vector<RankingCase> parse_ranking_tsv(const std::string& text) {
    std::vector<RankingCase> out;
    std::size_t line_no = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t end = text.find('\n', at);
        if (end == std::string::npos)
            end = text.size();
        std::string line = text.substr(at, end - at);
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        at = end + 1;
        ++line_no;
        if (line.empty()) {
            if (at > text.size())
                break;
            continue;
        }
        if (line_no == 1) {
            if (line != "SrcEntity\tTgtEntity\tCandidateList")
                throw ParseError(
                    "ranking file must start with the SrcEntity/TgtEntity/CandidateList header", 1,
                    1);
            continue;
        }
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 =
            tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos ||
            line.find('\t', tab2 + 1) != std::string::npos)
            throw ParseError("expected exactly three tab-separated fields",
                             static_cast<int>(line_no), 1);
        try {
            RankingCase c;
            c.source = Iri(line.substr(0, tab1));
            c.gold = Iri(line.substr(tab1 + 1, tab2 - tab1 - 1));
            std::size_t from = tab2 + 1;
            while (from <= line.size()) {
                std::size_t comma = line.find(',', from);
                if (comma == std::string::npos)
                    comma = line.size();
                c.candidates.emplace_back(line.substr(from, comma - from));
                from = comma + 1;
            }
            out.push_back(std::move(c));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad ranking row: ") + e.what(),
                             static_cast<int>(line_no), 1);
        }
    }
    return out;
}

} // namespace ontokit
