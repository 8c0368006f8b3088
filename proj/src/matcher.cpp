#include "ontokit/matcher.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "ontokit/errors.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

// --- tokenisation -----------------------------------------------------

std::vector<std::string> SubWordTokeniser::tokens(const std::string& label) const {
    std::vector<std::string> out;
    std::string word;
    auto flush = [&] {
        if (word.empty())
            return;
        out.push_back(word);
        for (std::size_t i = 0; i + 3 <= word.size(); ++i)
            out.push_back(word.substr(i, 3));
        word.clear();
    };
    for (unsigned char ch : label) {
        if (std::isalnum(ch))
            word += static_cast<char>(std::tolower(ch));
        else
            flush();
    }
    flush();
    return out;
}

// --- inverted index ---------------------------------------------------

InvertedIndex::InvertedIndex(const Ontology& onto, const std::vector<Iri>& properties,
                             const Tokeniser& tokeniser)
    : tokeniser_(&tokeniser) {
    Labeller labeller(onto, properties);
    std::map<std::string, std::set<Iri>> postings;
    for (const Iri& concept_iri : onto.concepts()) {
        std::vector<std::string> labels = labeller.concept_labels(concept_iri);
        if (labels.empty())
            continue;
        ++concepts_;
        std::set<std::string> seen;
        for (const std::string& label : labels)
            for (std::string& token : tokeniser.tokens(label))
                seen.insert(std::move(token));
        for (const std::string& token : seen)
            postings[token].insert(concept_iri);
    }
    for (const auto& [token, iris] : postings)
        postings_.emplace(token, std::vector<Iri>(iris.begin(), iris.end()));
}

std::size_t InvertedIndex::document_frequency(const std::string& token) const {
    auto it = postings_.find(token);
    return it == postings_.end() ? 0 : it->second.size();
}

std::vector<Iri> InvertedIndex::posting(const std::string& token) const {
    auto it = postings_.find(token);
    return it == postings_.end() ? std::vector<Iri>{} : it->second;
}

std::vector<Iri> InvertedIndex::select_candidates(const std::vector<std::string>& source_labels,
                                                  std::size_t k) const {
    std::set<std::string> tokens;
    for (const std::string& label : source_labels)
        for (std::string& token : tokeniser_->tokens(label))
            tokens.insert(std::move(token));

    // Accumulate idf sums in token order over sorted postings: the
    // floating-point additions happen in one deterministic order.
    std::map<Iri, double> scores;
    const double n = static_cast<double>(concepts_);
    for (const std::string& token : tokens) {
        auto it = postings_.find(token);
        if (it == postings_.end())
            continue;
        const double idf = std::log(n / static_cast<double>(it->second.size()));
        for (const Iri& iri : it->second)
            scores[iri] += idf;
    }

    std::vector<std::pair<Iri, double>> ranked(scores.begin(), scores.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > k)
        ranked.resize(k);
    std::vector<Iri> out;
    out.reserve(ranked.size());
    for (const auto& [iri, score] : ranked)
        out.push_back(iri);
    return out;
}

// --- scoring ----------------------------------------------------------

namespace {

std::size_t edit_distance_two_rows(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t best = std::min(prev[j], cur[j - 1]) + 1;
            best = std::min(best, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1));
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace

double lexical_score(const std::vector<std::string>& labels_a,
                     const std::vector<std::string>& labels_b) {
    if (labels_a.empty() || labels_b.empty())
        throw ValidationError("lexical_score needs at least one label on each side");
    double best = 0.0;
    for (const std::string& x : labels_a) {
        for (const std::string& y : labels_b) {
            if (x == y)
                return 1.0;
            const double longest = static_cast<double>(std::max(x.size(), y.size()));
            if (longest == 0.0)
                continue;
            const double d = static_cast<double>(edit_distance_two_rows(x, y));
            best = std::max(best, 1.0 - d / longest);
        }
    }
    return best;
}

// --- pipeline ---------------------------------------------------------

namespace {

bool mapping_order(const Mapping& a, const Mapping& b) {
    if (a.score != b.score)
        return a.score > b.score;
    if (a.source != b.source)
        return a.source < b.source;
    if (a.target != b.target)
        return a.target < b.target;
    return a.relation < b.relation;
}

std::vector<Iri> asserted_named_parents(const Ontology& onto, const Iri& concept_iri) {
    std::vector<Iri> out;
    for (const ConceptPtr& parent : onto.asserted_parents(concept_iri))
        if (parent->kind() == ExprKind::Named)
            out.push_back(parent->iri());
    return out;
}

std::vector<Mapping> match_impl(const Ontology& src, const Ontology& tgt,
                                const MatcherConfig& cfg, bool parallel) {
    SubWordTokeniser tokeniser;
    InvertedIndex index(tgt, cfg.annotation_properties, tokeniser);
    Labeller src_labels(src, cfg.annotation_properties);
    Labeller tgt_labels(tgt, cfg.annotation_properties);

    const std::vector<Iri> sources(src.concepts().begin(), src.concepts().end());
    std::vector<std::vector<Mapping>> buckets(sources.size());

    auto score_source = [&](std::size_t at) {
        const Iri& source = sources[at];
        const std::vector<std::string> labels = src_labels.concept_labels(source);
        if (labels.empty())
            return;
        double best = 0.0;
        std::vector<Mapping> kept;
        for (const Iri& target : index.select_candidates(labels, cfg.k)) {
            const double score = lexical_score(labels, tgt_labels.concept_labels(target));
            if (score < cfg.lambda || score < best)
                continue;
            if (score > best) {
                best = score;
                kept.clear();
            }
            kept.push_back({source, target, MappingRelation::Equivalence, score});
        }
        buckets[at] = std::move(kept);
    };

    if (parallel) {
#ifdef ONTOKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sources.size()); ++i)
            score_source(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < sources.size(); ++i)
            score_source(i);
    }

    std::vector<Mapping> accepted;
    for (std::vector<Mapping>& bucket : buckets)
        accepted.insert(accepted.end(), bucket.begin(), bucket.end());

    accepted = extend(accepted, src, tgt, cfg.kappa, cfg.annotation_properties);

    Reasoner src_reasoner(src);
    Reasoner tgt_reasoner(tgt);
    accepted = repair(accepted, src_reasoner, tgt_reasoner);

    std::sort(accepted.begin(), accepted.end(), mapping_order);
    if (cfg.one_to_one) {
        std::set<Iri> taken;
        std::vector<Mapping> unique;
        for (Mapping& m : accepted)
            if (taken.insert(m.source).second)
                unique.push_back(std::move(m));
        accepted = std::move(unique);
    }
    return accepted;
}

} // namespace

std::vector<Mapping> match(const Ontology& src, const Ontology& tgt, const MatcherConfig& cfg) {
    return match_impl(src, tgt, cfg, true);
}

std::vector<Mapping> match_serial(const Ontology& src, const Ontology& tgt,
                                  const MatcherConfig& cfg) {
    return match_impl(src, tgt, cfg, false);
}

std::vector<Mapping> substring_match(const Ontology& src, const Ontology& tgt,
                                     const std::vector<Iri>& properties) {
    Labeller src_labels(src, properties);
    Labeller tgt_labels(tgt, properties);
    std::vector<Mapping> out;
    for (const Iri& s : src.concepts()) {
        const std::vector<std::string> ls = src_labels.concept_labels(s);
        if (ls.empty())
            continue;
        for (const Iri& t : tgt.concepts()) {
            bool hit = false;
            for (const std::string& y : tgt_labels.concept_labels(t)) {
                for (const std::string& x : ls)
                    if (x.find(y) != std::string::npos || y.find(x) != std::string::npos) {
                        hit = true;
                        break;
                    }
                if (hit)
                    break;
            }
            if (hit)
                out.push_back({s, t, MappingRelation::Equivalence, 1.0});
        }
    }
    return out;
}

std::vector<Mapping> extend(const std::vector<Mapping>& mappings, const Ontology& src,
                            const Ontology& tgt, double kappa,
                            const std::vector<Iri>& properties) {
    Labeller src_labels(src, properties);
    Labeller tgt_labels(tgt, properties);

    std::set<std::pair<Iri, Iri>> scored;
    std::vector<Mapping> out = mappings;
    std::vector<std::pair<Iri, Iri>> frontier;
    for (const Mapping& m : mappings) {
        scored.insert({m.source, m.target});
        frontier.emplace_back(m.source, m.target);
    }

    while (!frontier.empty()) {
        std::vector<std::pair<Iri, Iri>> next;
        for (const auto& [c, d] : frontier) {
            auto consider = [&](const Iri& cs, const Iri& ct) {
                if (!scored.insert({cs, ct}).second)
                    return;
                const std::vector<std::string> a = src_labels.concept_labels(cs);
                const std::vector<std::string> b = tgt_labels.concept_labels(ct);
                if (a.empty() || b.empty())
                    return;
                const double score = lexical_score(a, b);
                if (score < kappa)
                    return;
                out.push_back({cs, ct, MappingRelation::Equivalence, score});
                next.emplace_back(cs, ct);
            };
            for (const Iri& cs : asserted_named_parents(src, c))
                for (const Iri& ct : asserted_named_parents(tgt, d))
                    consider(cs, ct);
            for (const Iri& cs : src.asserted_children(c))
                for (const Iri& ct : tgt.asserted_children(d))
                    consider(cs, ct);
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<Mapping> repair(const std::vector<Mapping>& mappings, const Reasoner& src_reasoner,
                            const Reasoner& tgt_reasoner) {
    std::vector<Mapping> out = mappings;
    auto conflicting = [&](const Mapping& a, const Mapping& b) {
        if (!src_reasoner.told_subsumption(a.source, b.source) &&
            !src_reasoner.told_subsumption(b.source, a.source))
            return false;
        return tgt_reasoner.told_assumed_disjoint(a.target, b.target);
    };

    while (out.size() > 1) {
        std::vector<std::size_t> conflicts(out.size(), 0);
        bool any = false;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (conflicting(out[i], out[j])) {
                    ++conflicts[i];
                    ++conflicts[j];
                    any = true;
                }
        if (!any)
            break;
        std::size_t victim = 0;
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (conflicts[i] != conflicts[victim]) {
                if (conflicts[i] > conflicts[victim])
                    victim = i;
                continue;
            }
            if (out[i].score != out[victim].score) {
                if (out[i].score < out[victim].score)
                    victim = i;
                continue;
            }
            if (std::tie(out[i].source, out[i].target, out[i].relation) <
                std::tie(out[victim].source, out[victim].target, out[victim].relation))
                victim = i;
        }
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return out;
}

std::string to_tsv(const std::vector<Mapping>& mappings) {
    std::string out = "SrcEntity\tTgtEntity\tScore\n";
    char buf[32];
    for (const Mapping& m : mappings) {
        std::snprintf(buf, sizeof buf, "%.6f", m.score);
        out += m.source.str();
        out += '\t';
        out += m.target.str();
        out += '\t';
        out += buf;
        out += '\n';
    }
    return out;
}

std::vector<Mapping> parse_mappings_tsv(const std::string& text) {
    std::vector<Mapping> out;
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
            if (line != "SrcEntity\tTgtEntity\tScore")
                throw ParseError("mapping file must start with the SrcEntity/TgtEntity/Score header",
                                 1, 1);
            continue;
        }
        std::size_t tab1 = line.find('\t');
        std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                     : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos ||
            line.find('\t', tab2 + 1) != std::string::npos)
            throw ParseError("expected exactly three tab-separated fields",
                             static_cast<int>(line_no), 1);
        try {
            Iri source(line.substr(0, tab1));
            Iri target(line.substr(tab1 + 1, tab2 - tab1 - 1));
            const std::string score_text = line.substr(tab2 + 1);
            std::size_t used = 0;
            const double score = std::stod(score_text, &used);
            if (used != score_text.size() || score < 0.0 || score > 1.0)
                throw ValidationError("score must be a number in [0, 1]");
            out.push_back({std::move(source), std::move(target),
                           MappingRelation::Equivalence, score});
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad mapping row: ") + e.what(),
                             static_cast<int>(line_no), 1);
        }
    }
    return out;
}

} // namespace ontokit
