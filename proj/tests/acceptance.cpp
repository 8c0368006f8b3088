// Acceptance gate: nine end-to-end criteria, one [PASS]/[FAIL] line
// each.  The process exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "ontokit/evaluation.hpp"
#include "ontokit/io.hpp"
#include "ontokit/matcher.hpp"
#include "ontokit/normalise.hpp"
#include "ontokit/parser.hpp"
#include "ontokit/projection.hpp"
#include "ontokit/pruning.hpp"
#include "ontokit/reasoner.hpp"
#include "ontokit/serializer.hpp"
#include "ontokit/taxonomy.hpp"
#include "ontokit/verbaliser.hpp"
#include "oracles.hpp"

using namespace ontokit;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok)
        throw Failure{message};
}

std::string data_path(const std::string& rel) {
    return std::string(ONTOKIT_TEST_DATA_DIR) + "/" + rel;
}

const char* const kCorpus[] = {"corpus/food.ofn",        "corpus/anatomy_src.ofn",
                               "corpus/anatomy_tgt.ofn", "corpus/clinical.ofn",
                               "corpus/el_small.ofn",    "corpus/mixed.ofn"};

Ontology load_corpus(const std::string& rel) {
    return parse_functional(read_file(data_path(rel))).ontology;
}

std::multiset<std::string> rendered_axioms(const Ontology& onto) {
    std::multiset<std::string> out;
    for (const Axiom& axiom : onto.axioms())
        out.insert(to_functional(axiom));
    return out;
}

// ---- 1. verbaliser ------------------------------------------------

void criterion_verbaliser() {
    const Ontology food = load_corpus("corpus/food.ofn");
    const ConceptPtr expr = parse_concept_expression(
        "ObjectIntersectionOf(:FoodProduct ObjectSomeValuesFrom(:derivesFrom "
        "ObjectUnionOf(:InvertebrateAnimal :VertebrateAnimal)))",
        food.prefixes());
    const Labeller labels(food);
    const std::string sentence = verbalise(expr, labels);
    require(sentence == "food product that derives from invertebrate animal or vertebrate animal",
            "unexpected sentence: \"" + sentence + "\"");
}

// ---- 2. normalisation ---------------------------------------------

void criterion_normalisation() {
    const Iri c("http://a#C"), d("http://a#D"), e("http://a#E"), r("http://a#r");
    Ontology golden_in;
    golden_in.add_axiom(Axiom::subclass_of(
        ConceptExpr::named(c),
        ConceptExpr::intersection({ConceptExpr::named(d),
                                   ConceptExpr::some(r, ConceptExpr::named(e))})));
    const std::multiset<std::string> expected = {
        to_functional(Axiom::subclass_of(ConceptExpr::named(c), ConceptExpr::named(d))),
        to_functional(Axiom::subclass_of(ConceptExpr::named(c),
                                         ConceptExpr::some(r, ConceptExpr::named(e))))};
    require(rendered_axioms(normalise(golden_in)) == expected,
            "conjunctive right-hand side did not split into the two expected axioms");

    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const Ontology o = gen::random_el_ontology(seed, 10, 15);
        const Ontology n = normalise(o);
        for (const Axiom& axiom : n.axioms())
            require(oracle::is_normal_form(axiom), "seed " + std::to_string(seed) +
                                                       ": axiom outside the six forms: " +
                                                       to_functional(axiom));
        require(rendered_axioms(normalise(n)) == rendered_axioms(n),
                "seed " + std::to_string(seed) + ": normalisation is not a fixpoint");

        const oracle::ElClosure engine_view(n);
        const oracle::ElClosure oracle_view(oracle::definitorial_normalise(o));
        std::vector<Iri> names(o.concepts().begin(), o.concepts().end());
        names.push_back(vocab::thing());
        names.push_back(vocab::nothing());
        for (const Iri& a : names)
            for (const Iri& b : names)
                require(engine_view.subsumes(a, b) == oracle_view.subsumes(a, b),
                        "seed " + std::to_string(seed) + ": closure changed on " + a.str() +
                            " [= " + b.str());
    }
}

// ---- 3. reasoner --------------------------------------------------

void criterion_reasoner() {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const Ontology o = gen::random_normalised_ontology(seed, 8, 14);
        const Reasoner reasoner(o);
        const oracle::ElClosure oracle_view(o);
        std::vector<Iri> names(o.concepts().begin(), o.concepts().end());
        names.push_back(vocab::thing());
        names.push_back(vocab::nothing());
        for (const Iri& a : names)
            for (const Iri& b : names) {
                require(reasoner.entails_subsumption(a, b) == oracle_view.subsumes(a, b),
                        "seed " + std::to_string(seed) + ": disagree with the oracle on " +
                            a.str() + " [= " + b.str());
                if (reasoner.told_subsumption(a, b))
                    require(reasoner.entails_subsumption(a, b),
                            "seed " + std::to_string(seed) + ": told subsumption " + a.str() +
                                " [= " + b.str() + " not entailed");
            }
    }
}

// ---- 4. taxonomy --------------------------------------------------

void criterion_taxonomy() {
    const Iri c1("http://a#C1"), c2("http://a#C2"), c3("http://a#C3");
    Ontology defined;
    defined.add_axiom(Axiom::equivalent_classes(
        {ConceptExpr::named(c1),
         ConceptExpr::intersection({ConceptExpr::named(c2), ConceptExpr::named(c3)})}));
    const Reasoner r(defined);
    const std::vector<Iri> direct = r.direct_subsumers(c1);
    require(std::set<Iri>(direct.begin(), direct.end()) == std::set<Iri>{c2, c3},
            "direct subsumers of the defined concept are not exactly its two conjuncts");

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Ontology o = gen::random_dag_ontology(seed, 12);
        const Reasoner reasoner(o);
        const Taxonomy t = build_taxonomy(reasoner);

        std::map<Iri, std::set<Iri>> asserted;
        for (const Axiom& ax : o.axioms())
            asserted[ax.sub_class()->iri()].insert(ax.super_class()->iri());
        const auto closure = oracle::reach(asserted);
        std::map<Iri, std::set<Iri>> closure_edges;
        for (const auto& [from, tos] : closure)
            for (const Iri& to : tos)
                if (to != from)
                    closure_edges[from].insert(to);
        const auto reduction = oracle::transitive_reduction(closure_edges);

        std::vector<std::pair<Iri, Iri>> expected;
        for (const Iri& concept_iri : o.concepts()) {
            auto it = reduction.find(concept_iri);
            if (it == reduction.end() || it->second.empty()) {
                expected.emplace_back(concept_iri, vocab::thing());
                continue;
            }
            for (const Iri& to : it->second)
                expected.emplace_back(concept_iri, to);
        }
        std::sort(expected.begin(), expected.end());
        require(t.edges() == expected, "seed " + std::to_string(seed) +
                                           ": taxonomy edges differ from the brute-force "
                                           "transitive reduction");
    }
}

// ---- 5. pruning ---------------------------------------------------

std::map<Iri, std::set<Iri>> named_edges(const Ontology& onto) {
    std::map<Iri, std::set<Iri>> edges;
    for (const Axiom& ax : onto.axioms()) {
        if (ax.kind() == AxiomKind::SubClassOf) {
            if (ax.sub_class()->kind() == ExprKind::Named &&
                ax.super_class()->kind() == ExprKind::Named)
                edges[ax.sub_class()->iri()].insert(ax.super_class()->iri());
        } else if (ax.kind() == AxiomKind::EquivalentClasses) {
            const auto& members = ax.members();
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j)
                    if (i != j && members[i]->kind() == ExprKind::Named &&
                        members[j]->kind() == ExprKind::Named)
                        edges[members[i]->iri()].insert(members[j]->iri());
        }
    }
    return edges;
}

void criterion_pruning() {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Ontology o = gen::random_hierarchy_ontology(seed, 15);
        gen::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::set<Iri> remove;
        for (const Iri& iri : o.concepts())
            if (rng.chance(0.3))
                remove.insert(iri);

        const Ontology out = prune(o, remove);
        for (const Axiom& ax : out.axioms())
            for (const Iri& x : remove)
                require(!ax.mentions(x), "seed " + std::to_string(seed) + ": removed IRI " +
                                             x.str() + " still mentioned in " +
                                             to_functional(ax));

        const auto before = oracle::reach(named_edges(o));
        const auto after = oracle::reach(named_edges(out));
        for (const auto& [from, tos] : before) {
            if (remove.count(from))
                continue;
            for (const Iri& to : tos) {
                if (remove.count(to) || to == from)
                    continue;
                require(after.count(from) != 0 && after.at(from).count(to) != 0,
                        "seed " + std::to_string(seed) + ": lost " + from.str() + " [= " +
                            to.str());
            }
        }
    }
}

// ---- 6. projection ------------------------------------------------

void criterion_projection() {
    const std::string ns = "http://a#";
    const Iri c(ns + "C"), d(ns + "D"), r(ns + "r"), ia(ns + "a"), ib(ns + "b");
    const std::string sub_line = "<" + c.str() +
                                 "> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <" +
                                 d.str() + "> .\n";
    const std::string type_line =
        "<" + ia.str() + "> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <" + d.str() +
        "> .\n";
    const std::string role_line = "<" + ia.str() + "> <" + r.str() + "> <" + ib.str() + "> .\n";
    const std::string restr_line = "<" + c.str() + "> <" + r.str() + "> <" + d.str() + "> .\n";

    Ontology named_sub;
    named_sub.add_axiom(Axiom::subclass_of(ConceptExpr::named(c), ConceptExpr::named(d)));
    require(to_ntriples(project(named_sub)) == sub_line, "subsumption rule output differs");

    Ontology assertion;
    assertion.add_axiom(Axiom::class_assertion(ConceptExpr::named(d), ia));
    require(to_ntriples(project(assertion)) == type_line, "class-assertion rule output differs");

    Ontology role_assertion;
    role_assertion.add_axiom(Axiom::property_assertion(r, ia, ib));
    require(to_ntriples(project(role_assertion)) == role_line,
            "role-assertion rule output differs");

    Ontology some_restriction;
    some_restriction.add_axiom(
        Axiom::subclass_of(ConceptExpr::named(c), ConceptExpr::some(r, ConceptExpr::named(d))));
    require(to_ntriples(project(some_restriction)) == restr_line,
            "existential-restriction rule output differs");

    Ontology only_restriction;
    only_restriction.add_axiom(
        Axiom::subclass_of(ConceptExpr::named(c), ConceptExpr::only(r, ConceptExpr::named(d))));
    require(to_ntriples(project(only_restriction)) == restr_line,
            "universal-restriction rule output differs");

    for (const char* rel : kCorpus) {
        const std::string text = to_ntriples(project(load_corpus(rel)));
        require(text.find("_:") == std::string::npos,
                std::string(rel) + ": projection produced a blank node");
    }
}

// ---- 7. matcher ---------------------------------------------------

void criterion_matcher() {
    const Ontology src = load_corpus("corpus/anatomy_src.ofn");
    const Ontology tgt = load_corpus("corpus/anatomy_tgt.ofn");
    require(src.concepts().size() == 10 && tgt.concepts().size() == 12,
            "toy pair does not have the expected 10 and 12 concepts");

    auto s = [](const std::string& f) { return Iri("http://example.org/src#" + f); };
    auto t = [](const std::string& f) { return Iri("http://example.org/tgt#" + f); };
    const std::vector<Mapping> expected = {
        {s("Aorta"), t("Aorta"), MappingRelation::Equivalence, 1.0},
        {s("BodyPart"), t("BodyPart"), MappingRelation::Equivalence, 1.0},
        {s("Brain"), t("Brain"), MappingRelation::Equivalence, 1.0},
        {s("Ear"), t("Ear"), MappingRelation::Equivalence, 1.0},
        {s("Heart"), t("Heart"), MappingRelation::Equivalence, 1.0},
        {s("Lung"), t("Lung"), MappingRelation::Equivalence, 1.0},
        {s("Pinna"), t("PinnaEar"), MappingRelation::Equivalence, 1.0},
        {s("Oesophagus"), t("Esophagus"), MappingRelation::Equivalence, 1.0 - 1.0 / 16.0},
    };
    require(match(src, tgt) == expected, "toy-pair alignment differs from the derived set");

    // Candidate selection is complete: every concept sharing at least
    // one token with the probe labels is in the untruncated pool.
    const SubWordTokeniser tok;
    const std::vector<std::string> probe = {"heart valve", "body part"};
    std::set<std::string> probe_tokens;
    for (const std::string& label : probe)
        for (const std::string& token : tok.tokens(label))
            probe_tokens.insert(token);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Ontology corpus = gen::random_labelled_ontology(seed, 12);
        const InvertedIndex index(corpus, {vocab::rdfs_label()}, tok);
        const Labeller labels(corpus, {vocab::rdfs_label()});
        std::set<Iri> expected_pool;
        for (const Iri& concept_iri : corpus.concepts())
            for (const std::string& label : labels.concept_labels(concept_iri)) {
                bool shared = false;
                for (const std::string& token : tok.tokens(label))
                    if (probe_tokens.count(token)) {
                        expected_pool.insert(concept_iri);
                        shared = true;
                        break;
                    }
                if (shared)
                    break;
            }
        const std::vector<Iri> pool = index.select_candidates(probe, corpus.concepts().size());
        require(std::set<Iri>(pool.begin(), pool.end()) == expected_pool,
                "seed " + std::to_string(seed) + ": candidate pool missed a token-sharing concept");
    }

    // Repaired alignments carry no conflicts under brute-force
    // enumeration, and repair is a fixpoint on them.
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const Ontology a = gen::random_labelled_ontology(seed, 10);
        const Ontology b = gen::random_labelled_ontology(seed + 999, 10);
        MatcherConfig cfg;
        cfg.lambda = 0.9;
        cfg.kappa = 0.8;
        const std::vector<Mapping> out = match(a, b, cfg);
        const Reasoner ra(a), rb(b);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                const bool comparable = ra.told_subsumption(out[i].source, out[j].source) ||
                                        ra.told_subsumption(out[j].source, out[i].source);
                if (comparable)
                    require(!rb.told_assumed_disjoint(out[i].target, out[j].target),
                            "seed " + std::to_string(seed) + ": conflicting pair survived repair");
            }
        require(repair(out, ra, rb) == out, "seed " + std::to_string(seed) +
                                                ": repair changed an already-repaired alignment");
    }
}

// ---- 8. evaluation ------------------------------------------------

void criterion_evaluation() {
    auto sm = [](int i) {
        return Mapping{Iri("http://x#a" + std::to_string(i)), Iri("http://y#b" + std::to_string(i)),
                       MappingRelation::Equivalence, 1.0};
    };
    std::vector<Mapping> pred = {sm(1), sm(2), sm(3),
                                 {Iri("http://x#a4"), Iri("http://y#wrong"),
                                  MappingRelation::Equivalence, 1.0}};
    std::vector<Mapping> ref = {sm(1), sm(2), sm(3), sm(4)};
    const MetricReport global = global_metrics(pred, ref);
    require(global.precision == 0.75 && global.recall == 0.75 && global.f_score == 0.75,
            "global metrics on the 4-reference case are not 0.75/0.75/0.75");

    auto gold = [](int i) { return Iri("http://y#g" + std::to_string(i)); };
    auto noise = [](int i) { return Iri("http://y#n" + std::to_string(i)); };
    std::vector<RankingCase> cases;
    cases.push_back({Iri("http://x#s1"), gold(1), {gold(1), noise(1), noise(2), noise(3)}});
    cases.push_back({Iri("http://x#s2"), gold(2), {noise(1), gold(2), noise(2), noise(3)}});
    cases.push_back({Iri("http://x#s3"), gold(3), {noise(1), noise(2), noise(3), gold(3)}});
    const MetricReport ranking = ranking_metrics(cases, {1, 5, 10});
    require(ranking.mrr.has_value() &&
                std::fabs(*ranking.mrr - (1.0 + 0.5 + 0.25) / 3.0) <= 1e-9,
            "MRR on ranks [1,2,4] is outside 1e-9 of the hand value");
    require(std::fabs(ranking.hits_at.at(1) - 1.0 / 3.0) <= 1e-12, "Hits@1 is not 1/3");

    std::vector<Mapping> refs10;
    for (int i = 0; i < 10; ++i)
        refs10.push_back({Iri("http://x#c" + std::to_string(i)),
                          Iri("http://y#c" + std::to_string(i)), MappingRelation::Equivalence,
                          1.0});
    const ReferenceSplit semi = split_references(refs10, SplitSetting::SemiSupervised, 5);
    require(semi.train.size() == 2 && semi.validation.size() == 1 && semi.test.size() == 7,
            "semi-supervised shares on 10 references are not (2,1,7)");
    const ReferenceSplit unsup = split_references(refs10, SplitSetting::Unsupervised, 5);
    require(unsup.train.empty() && unsup.validation.size() == 1 && unsup.test.size() == 9,
            "unsupervised shares on 10 references are not (0,1,9)");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ReferenceSplit once = split_references(refs10, SplitSetting::SemiSupervised, seed);
        const ReferenceSplit twice = split_references(refs10, SplitSetting::SemiSupervised, seed);
        require(once.train == twice.train && once.validation == twice.validation &&
                    once.test == twice.test,
                "seed " + std::to_string(seed) + ": split is not deterministic");
    }
}

// ---- 9. round trip ------------------------------------------------

void criterion_roundtrip() {
    for (const char* rel : kCorpus) {
        const Ontology first = load_corpus(rel);
        const Ontology second = parse_functional(serialise(first)).ontology;
        require(first.concepts() == second.concepts() && first.roles() == second.roles() &&
                    first.individuals() == second.individuals(),
                std::string(rel) + ": signature changed across the round trip");
        require(rendered_axioms(first) == rendered_axioms(second),
                std::string(rel) + ": axiom set changed across the round trip");
    }

    for (int i = 1; i <= 20; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "malformed/m%02d.ofn", i);
        const std::string text = read_file(data_path(name));
        std::string first_message, second_message;
        try {
            parse_functional(text);
        } catch (const ParseError& e) {
            first_message = e.what();
        }
        try {
            parse_functional(text);
        } catch (const ParseError& e) {
            second_message = e.what();
        }
        require(!first_message.empty(),
                std::string(name) + ": document parsed although it is malformed");
        require(first_message == second_message,
                std::string(name) + ": diagnostics are not deterministic");
        require(first_message.find("line") != std::string::npos,
                std::string(name) + ": diagnostic lacks a position");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*body)();
    };
    const Criterion criteria[] = {
        {"verbaliser renders the worked sentence", criterion_verbaliser},
        {"normalisation golden and property suite", criterion_normalisation},
        {"reasoner matches the exhaustive oracle", criterion_reasoner},
        {"taxonomy equals the transitive reduction", criterion_taxonomy},
        {"pruning preserves surviving reachability", criterion_pruning},
        {"projection rules emit exact triples", criterion_projection},
        {"matcher end-to-end on the toy pair", criterion_matcher},
        {"evaluation metrics and splits", criterion_evaluation},
        {"parse-serialise round trip and diagnostics", criterion_roundtrip},
    };

    bool all_ok = true;
    int number = 0;
    for (const Criterion& criterion : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.body();
        } catch (const Failure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty()) {
            std::printf("[PASS] %d. %s (%.2fs)\n", number, criterion.name, elapsed);
        } else {
            all_ok = false;
            std::printf("[FAIL] %d. %s (%.2fs)\n       %s\n", number, criterion.name, elapsed,
                        failure.c_str());
        }
    }
    return all_ok ? 0 : 1;
}
