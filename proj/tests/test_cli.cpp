#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ontokit/cli.hpp"
#include "ontokit/evaluation.hpp"
#include "ontokit/io.hpp"
#include "ontokit/matcher.hpp"
#include "ontokit/normalise.hpp"
#include "ontokit/parser.hpp"
#include "ontokit/serializer.hpp"

using namespace ontokit;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& rel) {
    return std::string(ONTOKIT_TEST_DATA_DIR) + "/" + rel;
}

const std::filesystem::path& scratch_root() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("ontokit-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

// A fresh subdirectory per test case keeps file interactions apart.
std::string scratch(const std::string& case_id, const std::string& name) {
    const auto dir = scratch_root() / case_id;
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
    REQUIRE(f.good());
}

const std::string kAnatomyTsv =
    "SrcEntity\tTgtEntity\tScore\n"
    "http://example.org/src#Aorta\thttp://example.org/tgt#Aorta\t1.000000\n"
    "http://example.org/src#BodyPart\thttp://example.org/tgt#BodyPart\t1.000000\n"
    "http://example.org/src#Brain\thttp://example.org/tgt#Brain\t1.000000\n"
    "http://example.org/src#Ear\thttp://example.org/tgt#Ear\t1.000000\n"
    "http://example.org/src#Heart\thttp://example.org/tgt#Heart\t1.000000\n"
    "http://example.org/src#Lung\thttp://example.org/tgt#Lung\t1.000000\n"
    "http://example.org/src#Pinna\thttp://example.org/tgt#PinnaEar\t1.000000\n"
    "http://example.org/src#Oesophagus\thttp://example.org/tgt#Esophagus\t0.937500\n";

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parse prints a summary and exits zero") {
    const auto r = run({"parse", "--onto", data_path("corpus/el_small.ofn")});
    CHECK(r.code == 0);
    CHECK(r.out == "parse: 5 axioms, 5 concepts, 2 roles, 0 individuals, 0 warnings\n");
    CHECK(r.err.empty());

    const auto quiet = run({"--quiet", "parse", "--onto", data_path("corpus/el_small.ofn")});
    CHECK(quiet.code == 0);
    CHECK(quiet.out.empty());
}

TEST_CASE("parse warnings reach standard error unless quiet") {
    const auto r = run({"parse", "--onto", data_path("corpus/mixed.ofn")});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning: skipped unsupported axiom DisjointClasses") != std::string::npos);
    CHECK(r.out.find("3 warnings") != std::string::npos);

    const auto quiet = run({"--quiet", "parse", "--onto", data_path("corpus/mixed.ofn")});
    CHECK(quiet.err.empty());
}

TEST_CASE("malformed documents exit two with a deterministic positioned message") {
    const auto first = run({"parse", "--onto", data_path("malformed/m02.ofn")});
    CHECK(first.code == 2);
    CHECK(first.err.find("undeclared prefix") != std::string::npos);
    CHECK(first.err.find("(line 3, column") != std::string::npos);
    const auto second = run({"parse", "--onto", data_path("malformed/m02.ofn")});
    CHECK(first.err == second.err);
}

TEST_CASE("parse --out reserialises the document losslessly") {
    const std::string out_path = scratch("roundtrip", "el.ofn");
    const auto r = run({"--quiet", "parse", "--onto", data_path("corpus/el_small.ofn"), "--out",
                        out_path});
    REQUIRE(r.code == 0);
    const auto direct = parse_functional(read_file(data_path("corpus/el_small.ofn")));
    const auto reread = parse_functional(read_file(out_path));
    CHECK(serialise(direct.ontology) == serialise(reread.ontology));
}

TEST_CASE("match reproduces the anatomy alignment and writes a run report") {
    const std::string out_path = scratch("match", "maps.tsv");
    const auto r = run({"match", "--source", data_path("corpus/anatomy_src.ofn"), "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(r.code == 0);
    CHECK(r.out == "match: 8 mappings -> " + out_path + "\n");
    CHECK(read_file(out_path) == kAnatomyTsv);

    const json report = json::parse(read_file(out_path + ".report.json"));
    CHECK(report["command"] == "match");
    CHECK(report["seed"] == 0);
    CHECK(report["version"] == "0.1.0");
    CHECK(report["outputs"] == json::array({out_path}));
    CHECK(report["config"]["matcher"]["lambda"] == 0.995);
    CHECK(report["config_digest"].get<std::string>().size() == 16);
}

TEST_CASE("config file values apply and explicit flags override them") {
    const std::string cfg_path = scratch("config", "cfg.json");
    write_text(cfg_path, R"({"seed": 7, "matcher": {"lambda": 0.5, "kappa": 0.95}})");
    const std::string out_path = scratch("config", "maps.tsv");

    const auto from_config = run({"--quiet", "--config", cfg_path, "match", "--source",
                                  data_path("corpus/anatomy_src.ofn"), "--target",
                                  data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(from_config.code == 0);
    json report = json::parse(read_file(out_path + ".report.json"));
    CHECK(report["config"]["matcher"]["lambda"] == 0.5);
    CHECK(report["config"]["matcher"]["kappa"] == 0.95);
    CHECK(report["seed"] == 7);
    // lambda 0.5 admits the weak valve pair (score ~0.54) that the
    // default threshold rejects.
    CHECK(read_file(out_path).find("HeartValve") != std::string::npos);

    const auto overridden = run({"--quiet", "--config", cfg_path, "match", "--source",
                                 data_path("corpus/anatomy_src.ofn"), "--target",
                                 data_path("corpus/anatomy_tgt.ofn"), "--out", out_path,
                                 "--kappa", "0.9", "--lambda", "0.995"});
    REQUIRE(overridden.code == 0);
    report = json::parse(read_file(out_path + ".report.json"));
    CHECK(report["config"]["matcher"]["lambda"] == 0.995);
    CHECK(report["config"]["matcher"]["kappa"] == 0.9);
    CHECK(read_file(out_path) == kAnatomyTsv);

    const auto bad = run({"--config", scratch("config", "nope.json"), "parse", "--onto",
                          data_path("corpus/el_small.ofn")});
    CHECK(bad.code == 1);

    const std::string unknown_key = scratch("config", "unknown.json");
    write_text(unknown_key, R"({"matcherr": {}})");
    const auto rejected = run({"--config", unknown_key, "parse", "--onto",
                               data_path("corpus/el_small.ofn")});
    CHECK(rejected.code == 1);
    CHECK(rejected.err.find("unknown key \"matcherr\"") != std::string::npos);
}

TEST_CASE("report path can be overridden") {
    const std::string out_path = scratch("report", "maps.tsv");
    const std::string report_path = scratch("report", "run.json");
    const auto r = run({"--quiet", "--report", report_path, "match", "--source",
                        data_path("corpus/anatomy_src.ofn"), "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(r.code == 0);
    CHECK(std::filesystem::exists(report_path));
    CHECK_FALSE(std::filesystem::exists(out_path + ".report.json"));
}

TEST_CASE("verbalise renders the worked example sentence") {
    const std::string expr_path = scratch("verbalise", "expr.txt");
    write_text(expr_path,
               "ObjectIntersectionOf(:FoodProduct ObjectSomeValuesFrom(:derivesFrom "
               "ObjectUnionOf(:InvertebrateAnimal :VertebrateAnimal)))\n");
    const auto r = run({"verbalise", "--onto", data_path("corpus/food.ofn"), "--expr", expr_path});
    CHECK(r.code == 0);
    CHECK(r.out == "food product that derives from invertebrate animal or vertebrate animal\n");

    // One sentence per non-blank input line.
    write_text(expr_path, ":FoodProduct\n\n:VertebrateAnimal\n");
    const auto multi =
        run({"verbalise", "--onto", data_path("corpus/food.ofn"), "--expr", expr_path});
    CHECK(multi.code == 0);
    CHECK(multi.out == "food product\nvertebrate animal\n");
}

TEST_CASE("context emits an iri, mode and text row") {
    const auto r = run({"context", "--onto", data_path("corpus/anatomy_src.ofn"), "--concept",
                        "http://example.org/src#Pinna", "--mode", "path", "--direction", "up"});
    CHECK(r.code == 0);
    CHECK(r.out == "http://example.org/src#Pinna\tPC\tpinna <SEP> ear <SEP> body part\n");

    const auto ic = run({"context", "--onto", data_path("corpus/anatomy_src.ofn"), "--concept",
                         "http://example.org/src#Pinna", "--mode", "ic"});
    CHECK(ic.out == "http://example.org/src#Pinna\tIC\tpinna\n");
}

TEST_CASE("classify, taxonomy and project write the expected rows") {
    const auto cls = run({"classify", "--onto", data_path("corpus/anatomy_src.ofn")});
    CHECK(cls.code == 0);
    CHECK(cls.out.find("http://example.org/src#Pinna\thttp://example.org/src#BodyPart\n") !=
          std::string::npos);

    const auto tax = run({"taxonomy", "--onto", data_path("corpus/anatomy_src.ofn")});
    CHECK(tax.code == 0);
    CHECK(tax.out.find("http://example.org/src#Pinna\thttp://example.org/src#Ear\n") !=
          std::string::npos);
    // The taxonomy keeps only direct edges.
    CHECK(tax.out.find("http://example.org/src#Pinna\thttp://example.org/src#BodyPart\n") ==
          std::string::npos);

    const auto proj = run({"project", "--onto", data_path("corpus/clinical.ofn")});
    CHECK(proj.code == 0);
    const std::string c = "http://example.org/clinical#";
    CHECK(proj.out.find("<" + c + "Neoplasm> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <" +
                        c + "Disease> .\n") != std::string::npos);
    CHECK(proj.out.find("<" + c + "alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <" +
                        c + "Patient> .\n") != std::string::npos);
    CHECK(proj.out.find("<" + c + "alice> <" + c + "hasFinding> <" + c + "tumourOne> .\n") !=
          std::string::npos);
    CHECK(proj.out.find("<" + c + "Patient> <" + c + "hasFinding> <" + c + "Finding> .\n") !=
          std::string::npos);
    CHECK(proj.out.find("<" + c + "Disease> <" + c + "partOf> <" + c + "Finding> .\n") !=
          std::string::npos);
    CHECK(proj.out.find("_:") == std::string::npos);
}

TEST_CASE("normalise writes axiom lines plus a definition sidecar") {
    const std::string out_path = scratch("normalise", "normal.txt");
    const auto r = run({"--quiet", "normalise", "--onto", data_path("corpus/el_small.ofn"),
                        "--out", out_path});
    REQUIRE(r.code == 0);

    std::vector<std::pair<Iri, ConceptPtr>> defs;
    const auto parsed = parse_functional(read_file(data_path("corpus/el_small.ofn")));
    const Ontology normal = normalise(parsed.ontology, &defs);
    std::string expected_axioms;
    for (const Axiom& axiom : normal.axioms())
        expected_axioms += to_functional(axiom) + "\n";
    std::string expected_defs;
    for (const auto& [iri, expr] : defs)
        expected_defs += iri.str() + "\t" + to_functional(*expr) + "\n";

    CHECK(read_file(out_path) == expected_axioms);
    CHECK(read_file(out_path + ".defs.tsv") == expected_defs);
}

TEST_CASE("prune removes listed concepts from a file and keep-inverts") {
    const std::string list_path = scratch("prune", "drop.txt");
    write_text(list_path, "# leaf parts\nhttp://example.org/tgt#PinnaLeaf\n\n");
    const std::string out_path = scratch("prune", "pruned.ofn");
    const auto r = run({"--quiet", "prune", "--onto", data_path("corpus/anatomy_tgt.ofn"),
                        "--remove", list_path, "--out", out_path});
    REQUIRE(r.code == 0);
    const auto pruned = parse_functional(read_file(out_path)).ontology;
    CHECK_FALSE(pruned.contains_concept(Iri("http://example.org/tgt#PinnaLeaf")));
    CHECK(pruned.contains_concept(Iri("http://example.org/tgt#Plant")));

    const auto kept = run({"--quiet", "prune", "--onto", data_path("corpus/anatomy_tgt.ofn"),
                           "--iri", "http://example.org/tgt#BodyPart", "--iri",
                           "http://example.org/tgt#Heart", "--keep", "--out", out_path});
    REQUIRE(kept.code == 0);
    const auto slim = parse_functional(read_file(out_path)).ontology;
    CHECK(slim.concepts() == std::set<Iri>{Iri("http://example.org/tgt#BodyPart"),
                                           Iri("http://example.org/tgt#Heart")});

    const auto none = run({"prune", "--onto", data_path("corpus/anatomy_tgt.ofn"), "--out",
                           out_path});
    CHECK(none.code == 1);
    CHECK(none.err.find("--remove") != std::string::npos);
}

TEST_CASE("evaluate global reports the hand-checked metrics") {
    const std::string pred_path = scratch("evalg", "pred.tsv");
    const std::string ref_path = scratch("evalg", "ref.tsv");
    std::string pred = "SrcEntity\tTgtEntity\tScore\n";
    std::string ref = "SrcEntity\tTgtEntity\tScore\n";
    for (int i = 1; i <= 3; ++i) {
        pred += "http://x#a" + std::to_string(i) + "\thttp://y#b" + std::to_string(i) +
                "\t1.000000\n";
        ref += "http://x#a" + std::to_string(i) + "\thttp://y#b" + std::to_string(i) +
               "\t1.000000\n";
    }
    pred += "http://x#a4\thttp://y#wrong\t1.000000\n";
    ref += "http://x#a4\thttp://y#b4\t1.000000\n";
    write_text(pred_path, pred);
    write_text(ref_path, ref);

    const auto r = run({"evaluate", "--pred", pred_path, "--ref", ref_path});
    REQUIRE(r.code == 0);
    const json metrics = json::parse(r.out);
    CHECK(metrics["precision"] == 0.75);
    CHECK(metrics["recall"] == 0.75);
    CHECK(metrics["f_score"] == 0.75);
    CHECK_FALSE(metrics.contains("division_by_zero"));

    const std::string out_path = scratch("evalg", "metrics.json");
    const auto saved = run({"evaluate", "--pred", pred_path, "--ref", ref_path, "--out",
                            out_path});
    REQUIRE(saved.code == 0);
    CHECK(read_file(out_path) == saved.out);
}

TEST_CASE("evaluate ranking reports mrr and hits") {
    const std::string cases_path = scratch("evalr", "cases.tsv");
    write_text(cases_path,
               "SrcEntity\tTgtEntity\tCandidateList\n"
               "http://x#s1\thttp://y#g1\thttp://y#g1,http://y#n1,http://y#n2,http://y#n3\n"
               "http://x#s2\thttp://y#g2\thttp://y#n1,http://y#g2,http://y#n2,http://y#n3\n"
               "http://x#s3\thttp://y#g3\thttp://y#n1,http://y#n2,http://y#n3,http://y#g3\n");
    const auto r = run({"evaluate", "--mode", "ranking", "--cases", cases_path});
    REQUIRE(r.code == 0);
    const json metrics = json::parse(r.out);
    CHECK(metrics["mrr"].get<double>() == doctest::Approx((1.0 + 0.5 + 0.25) / 3).epsilon(1e-12));
    CHECK(metrics["hits@1"].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(metrics["hits@5"] == 1.0);
    CHECK(metrics["hits@10"] == 1.0);
}

TEST_CASE("evaluate ranking can re-rank candidates lexically") {
    // Candidates deliberately listed worst-first; label similarity to
    // the source concept must pull the gold to the front.
    const std::string cases_path = scratch("evalrr", "cases.tsv");
    write_text(cases_path,
               "SrcEntity\tTgtEntity\tCandidateList\n"
               "http://example.org/src#Heart\thttp://example.org/tgt#Heart\t"
               "http://example.org/tgt#Plant,http://example.org/tgt#Kidney,"
               "http://example.org/tgt#Heart\n");
    const auto plain = run({"evaluate", "--mode", "ranking", "--cases", cases_path});
    REQUIRE(plain.code == 0);
    CHECK(json::parse(plain.out)["mrr"].get<double>() == doctest::Approx(1.0 / 3));

    const auto reranked = run({"evaluate", "--mode", "ranking", "--cases", cases_path,
                               "--source", data_path("corpus/anatomy_src.ofn"), "--target",
                               data_path("corpus/anatomy_tgt.ofn")});
    REQUIRE(reranked.code == 0);
    CHECK(json::parse(reranked.out)["mrr"] == 1.0);

    const auto half = run({"evaluate", "--mode", "ranking", "--cases", cases_path, "--source",
                           data_path("corpus/anatomy_src.ofn")});
    CHECK(half.code == 1);
}

TEST_CASE("split writes deterministic partitions and candidate files") {
    const std::string ref_path = scratch("split", "ref.tsv");
    const char* targets[] = {"BodyPart", "Heart",    "Lung",  "Brain",     "Aorta",
                             "Ear",      "PinnaEar", "Plant", "PinnaLeaf", "Esophagus"};
    std::string refs = "SrcEntity\tTgtEntity\tScore\n";
    for (int i = 0; i < 10; ++i)
        refs += "http://example.org/src#C" + std::to_string(i) + "\thttp://example.org/tgt#" +
                targets[i] + "\t1.000000\n";
    write_text(ref_path, refs);

    const std::string prefix_a = scratch("split", "a");
    const auto r = run({"--quiet", "--seed", "11", "split", "--ref", ref_path, "--setting",
                        "semi-supervised", "--out-prefix", prefix_a, "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--candidates", "5"});
    REQUIRE(r.code == 0);

    const auto train = parse_mappings_tsv(read_file(prefix_a + ".train.tsv"));
    const auto val = parse_mappings_tsv(read_file(prefix_a + ".val.tsv"));
    const auto test = parse_mappings_tsv(read_file(prefix_a + ".test.tsv"));
    CHECK(train.size() == 2);
    CHECK(val.size() == 1);
    CHECK(test.size() == 7);

    const auto val_cases = parse_ranking_tsv(read_file(prefix_a + ".val.cands.tsv"));
    const auto test_cases = parse_ranking_tsv(read_file(prefix_a + ".test.cands.tsv"));
    REQUIRE(val_cases.size() == 1);
    REQUIRE(test_cases.size() == 7);
    for (const auto& c : test_cases)
        CHECK(c.candidates.size() == 5);

    const std::string prefix_b = scratch("split", "b");
    const auto again = run({"--quiet", "--seed", "11", "split", "--ref", ref_path, "--setting",
                            "semi-supervised", "--out-prefix", prefix_b, "--target",
                            data_path("corpus/anatomy_tgt.ofn"), "--candidates", "5"});
    REQUIRE(again.code == 0);
    for (const char* suffix :
         {".train.tsv", ".val.tsv", ".test.tsv", ".val.cands.tsv", ".test.cands.tsv"})
        CHECK(read_file(prefix_a + suffix) == read_file(prefix_b + suffix));

    const auto unsup = run({"--quiet", "split", "--ref", ref_path, "--out-prefix",
                            scratch("split", "u")});
    REQUIRE(unsup.code == 0);
    CHECK(parse_mappings_tsv(read_file(scratch("split", "u") + ".train.tsv")).empty());
}

TEST_CASE("subsumption-dataset derives references and prunes the target") {
    const std::string ref_path = scratch("subs", "eq.tsv");
    write_text(ref_path,
               "SrcEntity\tTgtEntity\tScore\n"
               "http://example.org/src#Pinna\thttp://example.org/tgt#PinnaEar\t1.000000\n");
    const std::string refs_out = scratch("subs", "subs.tsv");
    const std::string onto_out = scratch("subs", "pruned.ofn");
    const auto r = run({"subsumption-dataset", "--ref", ref_path, "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--out-refs", refs_out, "--out-onto",
                        onto_out});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1 references (0 barren, 0 dropped)") != std::string::npos);
    CHECK(read_file(refs_out) ==
          "SrcEntity\tTgtEntity\tScore\n"
          "http://example.org/src#Pinna\thttp://example.org/tgt#Ear\t1.000000\n");
    const auto pruned = parse_functional(read_file(onto_out)).ontology;
    CHECK_FALSE(pruned.contains_concept(Iri("http://example.org/tgt#PinnaEar")));
    CHECK(pruned.contains_concept(Iri("http://example.org/tgt#Ear")));
}

TEST_CASE("substring-match writes the containment baseline") {
    const std::string out_path = scratch("substr", "maps.tsv");
    const auto r = run({"--quiet", "substring-match", "--source",
                        data_path("corpus/anatomy_src.ofn"), "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(r.code == 0);
    const auto mappings = parse_mappings_tsv(read_file(out_path));
    CHECK(!mappings.empty());
    for (const auto& m : mappings)
        CHECK(m.score == 1.0);
}

TEST_CASE("usage problems exit one with a message") {
    const auto unknown_sub = run({"frobnicate"});
    CHECK(unknown_sub.code == 1);
    CHECK(!unknown_sub.err.empty());

    const auto unknown_flag = run({"parse", "--bogus", "--onto",
                                   data_path("corpus/el_small.ofn")});
    CHECK(unknown_flag.code == 1);
    CHECK(unknown_flag.err.find("--bogus") != std::string::npos);

    const auto missing = run({"match", "--source", data_path("corpus/anatomy_src.ofn")});
    CHECK(missing.code == 1);

    const auto no_sub = run({});
    CHECK(no_sub.code == 1);

    const auto bad_mode = run({"evaluate", "--mode", "sideways", "--cases", "x.tsv"});
    CHECK(bad_mode.code == 1);
    CHECK(bad_mode.err.find("sideways") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(r.out.find("subsumption-dataset") != std::string::npos);
}

TEST_CASE("malformed mapping files exit two") {
    const std::string bad_path = scratch("badtsv", "bad.tsv");
    write_text(bad_path, "WrongHeader\n");
    const auto r = run({"evaluate", "--pred", bad_path, "--ref", bad_path});
    CHECK(r.code == 2);
    CHECK(r.err.find("header") != std::string::npos);
}

TEST_CASE("missing input files exit one") {
    const auto r = run({"parse", "--onto", scratch("missing", "ghost.ofn")});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("threads flag is accepted and leaves results unchanged") {
    const std::string out_path = scratch("threads", "maps.tsv");
    const auto r = run({"--quiet", "--threads", "2", "match", "--source",
                        data_path("corpus/anatomy_src.ofn"), "--target",
                        data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(r.code == 0);
    CHECK(read_file(out_path) == kAnatomyTsv);

    const auto serial = run({"--quiet", "match", "--serial", "--source",
                             data_path("corpus/anatomy_src.ofn"), "--target",
                             data_path("corpus/anatomy_tgt.ofn"), "--out", out_path});
    REQUIRE(serial.code == 0);
    CHECK(read_file(out_path) == kAnatomyTsv);
}

TEST_SUITE_END();
