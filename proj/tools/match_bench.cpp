// Benchmark: parallel matcher vs the single-threaded reference on a
// synthetic labelled corpus pair, checking that both produce the same
// alignment before reporting timings.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ontokit/axiom.hpp"
#include "ontokit/matcher.hpp"
#include "ontokit/ontology.hpp"

namespace {

using namespace ontokit;

const char* const kWords[] = {"heart",  "lung",   "valve",  "body",   "part",   "brain",
                              "artery", "vessel", "tissue", "organ",  "cell",   "bone",
                              "nerve",  "muscle", "joint",  "gland",  "lobe",   "duct",
                              "cortex", "matter", "canal",  "plexus", "septum", "chamber"};
constexpr std::size_t kWordCount = sizeof(kWords) / sizeof(kWords[0]);

std::string make_label(std::mt19937_64& eng) {
    std::uniform_int_distribution<std::size_t> word(0, kWordCount - 1);
    std::uniform_int_distribution<int> words(1, 3);
    std::string label;
    const int n = words(eng);
    for (int i = 0; i < n; ++i) {
        if (i)
            label += ' ';
        label += kWords[word(eng)];
    }
    return label;
}

Ontology synthetic(const std::string& ns, std::size_t concepts, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    Ontology onto;
    std::vector<Iri> iris;
    iris.reserve(concepts);
    for (std::size_t i = 0; i < concepts; ++i) {
        Iri iri(ns + "C" + std::to_string(i));
        onto.declare(EntityKind::Class, iri);
        onto.add_axiom(Axiom::annotation(vocab::rdfs_label(), iri, Literal{make_label(eng), ""}));
        iris.push_back(std::move(iri));
    }
    // Random DAG edges: child index above parent index.
    std::uniform_int_distribution<std::size_t> pick(0, concepts - 1);
    for (std::size_t e = 0; e < concepts; ++e) {
        std::size_t a = pick(eng), b = pick(eng);
        if (a == b)
            continue;
        if (a < b)
            std::swap(a, b);
        onto.add_axiom(Axiom::subclass_of(ConceptExpr::named(iris[a]), ConceptExpr::named(iris[b])));
    }
    return onto;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t concepts = 600;
    int reps = 3;
    if (argc > 1)
        concepts = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
    if (argc > 2)
        reps = std::atoi(argv[2]);

    const Ontology src = synthetic("http://example.org/bench/src#", concepts, 17);
    const Ontology tgt = synthetic("http://example.org/bench/tgt#", concepts, 41);
    MatcherConfig cfg;
    cfg.lambda = 0.85;
    cfg.kappa = 0.8;

    // Warm-up and correctness check first.
    const std::vector<Mapping> parallel = match(src, tgt, cfg);
    const std::vector<Mapping> serial = match_serial(src, tgt, cfg);
    if (parallel != serial) {
        std::fprintf(stderr, "FAIL: parallel and serial alignments differ\n");
        return 1;
    }

    double best_parallel = 1e100, best_serial = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        const auto a = match(src, tgt, cfg);
        const double tp = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto b = match_serial(src, tgt, cfg);
        const double ts = seconds_since(t0);
        if (a != b) {
            std::fprintf(stderr, "FAIL: alignments diverged on repetition %d\n", r);
            return 1;
        }
        if (tp < best_parallel)
            best_parallel = tp;
        if (ts < best_serial)
            best_serial = ts;
    }

    std::printf("match_bench: %zu x %zu concepts, %zu mappings\n", concepts, concepts,
                parallel.size());
    std::printf("  parallel  %.4fs (best of %d)\n", best_parallel, reps);
    std::printf("  serial    %.4fs (best of %d)\n", best_serial, reps);
    std::printf("  speedup   %.2fx\n", best_serial / best_parallel);
    return 0;
}
