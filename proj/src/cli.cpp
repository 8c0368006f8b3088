#include "ontokit/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef ONTOKIT_HAVE_OPENMP
#include <omp.h>
#endif

#include "ontokit/errors.hpp"
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

namespace ontokit {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a64_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string trimmed(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    std::size_t end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

// Everything configurable: defaults, overlaid by --config, overlaid by
// explicit flags.
struct Settings {
    std::uint64_t seed = 0;
    int threads = 0; // 0: leave the library default alone
    std::vector<std::string> annotation_properties = {vocab::rdfs_label().str()};
    std::size_t k = 10;
    double lambda = 0.995;
    double kappa = 0.9;
    bool one_to_one = false;
    std::size_t candidates = 100;
    std::vector<std::size_t> hits_at = {1, 5, 10};
    std::string negatives = "random";
};

json settings_json(const Settings& s) {
    return json{{"seed", s.seed},
                {"threads", s.threads},
                {"annotation_properties", s.annotation_properties},
                {"matcher",
                 {{"k", s.k},
                  {"lambda", s.lambda},
                  {"kappa", s.kappa},
                  {"one_to_one", s.one_to_one}}},
                {"evaluation",
                 {{"candidates", s.candidates},
                  {"hits_at", s.hits_at},
                  {"negatives", s.negatives}}}};
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }))
            throw ValidationError(std::string("config: unknown key \"") + key + "\" in " + where);
    }
}

Settings load_config(const std::string& path) {
    Settings s;
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError("config " + path + ": " + e.what(), 1, 1);
    }
    try {
        if (!j.is_object())
            throw ValidationError("config: top level must be an object");
        check_keys(j, {"seed", "threads", "annotation_properties", "matcher", "evaluation"},
                   "the top level");
        if (j.contains("seed"))
            s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads"))
            s.threads = j["threads"].get<int>();
        if (j.contains("annotation_properties"))
            s.annotation_properties = j["annotation_properties"].get<std::vector<std::string>>();
        if (j.contains("matcher")) {
            const json& m = j["matcher"];
            check_keys(m, {"k", "lambda", "kappa", "one_to_one"}, "\"matcher\"");
            if (m.contains("k"))
                s.k = m["k"].get<std::size_t>();
            if (m.contains("lambda"))
                s.lambda = m["lambda"].get<double>();
            if (m.contains("kappa"))
                s.kappa = m["kappa"].get<double>();
            if (m.contains("one_to_one"))
                s.one_to_one = m["one_to_one"].get<bool>();
        }
        if (j.contains("evaluation")) {
            const json& e = j["evaluation"];
            check_keys(e, {"candidates", "hits_at", "negatives"}, "\"evaluation\"");
            if (e.contains("candidates"))
                s.candidates = e["candidates"].get<std::size_t>();
            if (e.contains("hits_at"))
                s.hits_at = e["hits_at"].get<std::vector<std::size_t>>();
            if (e.contains("negatives"))
                s.negatives = e["negatives"].get<std::string>();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config ") + path + ": " + e.what());
    }
    return s;
}

// Raw flag values; which ones were actually given is queried off the
// CLI11 option objects so config-file values survive unset flags.
struct Flags {
    std::string config, report;
    std::uint64_t seed = 0;
    int threads = 0;
    bool quiet = false;
    std::vector<std::string> ann_props;

    std::string onto, out, source, target, expr_path, remove_path, concept_str;
    std::vector<std::string> remove_iris;
    std::string ctx_mode = "isolated", ctx_direction = "up";
    std::size_t limit = 8;
    bool strict = false, keep = false;
    std::size_t k = 10;
    double lambda = 0.995, kappa = 0.9;
    bool one_to_one = false, serial = false;
    std::string pred, ref, ignored, cases, eval_mode = "global";
    std::string setting = "unsupervised", out_prefix, out_refs, out_onto;
    std::size_t candidates = 100;
    std::string negatives = "random";
};

struct Cli {
    std::ostream& out;
    std::ostream& err;
    Settings cfg;
    bool quiet = false;
    std::string report_path;

    std::vector<Iri> properties() const {
        std::vector<Iri> props;
        for (const std::string& p : cfg.annotation_properties)
            props.emplace_back(p);
        return props;
    }

    Ontology load(const std::string& path, std::size_t* warning_count = nullptr) const {
        ParseResult result = parse_functional(read_file(path));
        if (warning_count)
            *warning_count = result.warnings.size();
        if (!quiet)
            for (const Diagnostic& d : result.warnings)
                err << path << ": " << d.render() << "\n";
        return std::move(result.ontology);
    }

    // Text results go to the given file, or to standard output when no
    // file was requested.
    void deliver(const std::string& text, const std::string& out_path) const {
        if (out_path.empty())
            out << text;
        else
            write_file_atomic(out_path, text);
    }

    void note(const std::string& line) const {
        if (!quiet)
            out << line << "\n";
    }

    void report(const std::string& command, const json& inputs,
                const std::vector<std::string>& outputs) const {
        const json cfg_json = settings_json(cfg);
        const json r = {{"command", command},
                        {"inputs", inputs},
                        {"outputs", outputs},
                        {"config", cfg_json},
                        {"config_digest", fnv1a64_hex(cfg_json.dump())},
                        {"seed", cfg.seed},
                        {"version", kVersion}};
        std::string path = report_path;
        if (path.empty() && !outputs.empty())
            path = outputs.front() + ".report.json";
        if (!path.empty())
            write_file_atomic(path, r.dump(2) + "\n");
    }
};

void cmd_parse(const Cli& cli, const Flags& f) {
    std::size_t warnings = 0;
    const Ontology onto = cli.load(f.onto, &warnings);
    std::vector<std::string> outputs;
    if (!f.out.empty()) {
        write_file_atomic(f.out, serialise(onto));
        outputs.push_back(f.out);
    }
    cli.note("parse: " + std::to_string(onto.axioms().size()) + " axioms, " +
             std::to_string(onto.concepts().size()) + " concepts, " +
             std::to_string(onto.roles().size()) + " roles, " +
             std::to_string(onto.individuals().size()) + " individuals, " +
             std::to_string(warnings) + " warnings");
    cli.report("parse", {{"onto", f.onto}}, outputs);
}

void cmd_classify(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    const Reasoner reasoner(onto);
    std::string text;
    const auto pairs = reasoner.classify();
    for (const auto& [sub, sup] : pairs)
        text += sub.str() + "\t" + sup.str() + "\n";
    cli.deliver(text, f.out);
    if (!f.out.empty())
        cli.note("classify: " + std::to_string(pairs.size()) + " entailed subsumptions -> " +
                 f.out);
    cli.report("classify", {{"onto", f.onto}},
               f.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{f.out});
}

void cmd_prune(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    std::set<Iri> listed;
    if (!f.remove_path.empty()) {
        const std::string text = read_file(f.remove_path);
        std::size_t at = 0;
        while (at < text.size()) {
            std::size_t end = text.find('\n', at);
            if (end == std::string::npos)
                end = text.size();
            const std::string line = trimmed(text.substr(at, end - at));
            at = end + 1;
            if (line.empty() || line[0] == '#')
                continue;
            listed.insert(Iri(line));
        }
    }
    for (const std::string& iri : f.remove_iris)
        listed.insert(Iri(iri));
    if (listed.empty() && !f.keep)
        throw ValidationError("prune needs --remove and/or --iri to name the removal set");

    std::set<Iri> remove;
    if (f.keep) {
        for (const Iri& c : onto.concepts())
            if (listed.count(c) == 0)
                remove.insert(c);
    } else {
        remove = std::move(listed);
    }

    const Ontology pruned = prune(onto, remove);
    write_file_atomic(f.out, serialise(pruned));
    cli.note("prune: removed " + std::to_string(remove.size()) + " concepts, " +
             std::to_string(pruned.axioms().size()) + " axioms remain -> " + f.out);
    json inputs = {{"onto", f.onto}};
    if (!f.remove_path.empty())
        inputs["remove"] = f.remove_path;
    cli.report("prune", inputs, {f.out});
}

// The output file holds one normal-form axiom per line; the sidecar
// maps every invented concept name to the expression it abbreviates.
void cmd_normalise(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    std::vector<std::pair<Iri, ConceptPtr>> definitions;
    const Ontology normal = normalise(onto, &definitions);

    std::string axiom_lines;
    for (const Axiom& axiom : normal.axioms())
        axiom_lines += to_functional(axiom) + "\n";
    write_file_atomic(f.out, axiom_lines);

    const std::string defs_path = f.out + ".defs.tsv";
    std::string defs_lines;
    for (const auto& [iri, expr] : definitions)
        defs_lines += iri.str() + "\t" + to_functional(*expr) + "\n";
    write_file_atomic(defs_path, defs_lines);

    cli.note("normalise: " + std::to_string(onto.axioms().size()) + " axioms in, " +
             std::to_string(normal.axioms().size()) + " normal-form axioms out, " +
             std::to_string(definitions.size()) + " fresh names -> " + f.out);
    cli.report("normalise", {{"onto", f.onto}}, {f.out, defs_path});
}

void cmd_taxonomy(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    const Reasoner reasoner(onto);
    const Taxonomy taxonomy = build_taxonomy(reasoner);
    cli.deliver(to_tsv(taxonomy), f.out);
    if (!f.out.empty())
        cli.note("taxonomy: " + std::to_string(taxonomy.nodes().size()) + " nodes, " +
                 std::to_string(taxonomy.edges().size()) + " edges -> " + f.out);
    cli.report("taxonomy", {{"onto", f.onto}},
               f.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{f.out});
}

void cmd_project(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    const std::vector<Triple> triples = project(onto);
    cli.deliver(to_ntriples(triples), f.out);
    if (!f.out.empty())
        cli.note("project: " + std::to_string(triples.size()) + " triples -> " + f.out);
    cli.report("project", {{"onto", f.onto}},
               f.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{f.out});
}

// One expression per input line, one sentence per output line; blank
// lines are skipped.
void cmd_verbalise(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    const Labeller labeller(onto, cli.properties());
    const std::string text = read_file(f.expr_path);
    std::string sentences;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t end = text.find('\n', at);
        if (end == std::string::npos)
            end = text.size();
        const std::string line = trimmed(text.substr(at, end - at));
        at = end + 1;
        if (line.empty())
            continue;
        sentences += verbalise(parse_concept_expression(line, onto.prefixes()), labeller) + "\n";
    }
    cli.deliver(sentences, f.out);
    cli.report("verbalise", {{"onto", f.onto}, {"expr", f.expr_path}},
               f.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{f.out});
}

// Output row: concept IRI, canonical mode tag (IC, PC or BC), context
// text, tab-separated.
void cmd_context(const Cli& cli, const Flags& f) {
    const Ontology onto = cli.load(f.onto);
    ContextOptions opts;
    std::string mode_tag;
    if (f.ctx_mode == "isolated" || f.ctx_mode == "ic") {
        opts.mode = ContextMode::Isolated;
        mode_tag = "IC";
    } else if (f.ctx_mode == "path" || f.ctx_mode == "pc") {
        opts.mode = ContextMode::Path;
        mode_tag = "PC";
    } else if (f.ctx_mode == "breadth" || f.ctx_mode == "bc") {
        opts.mode = ContextMode::Breadth;
        mode_tag = "BC";
    } else {
        throw ValidationError("unknown context mode: " + f.ctx_mode +
                              " (expected isolated, path or breadth)");
    }
    if (f.ctx_direction == "up")
        opts.direction = ContextDirection::Up;
    else if (f.ctx_direction == "down")
        opts.direction = ContextDirection::Down;
    else
        throw ValidationError("unknown context direction: " + f.ctx_direction +
                              " (expected up or down)");
    opts.limit = f.limit;
    opts.strict = f.strict;

    const Reasoner reasoner(onto);
    const Taxonomy taxonomy = build_taxonomy(reasoner);
    const Labeller labeller(onto, cli.properties());
    std::vector<std::string> warnings;
    const std::string text =
        context_text(labeller, taxonomy, Iri(f.concept_str), opts, &warnings);
    if (!cli.quiet)
        for (const std::string& w : warnings)
            cli.err << "warning: " << w << "\n";
    cli.deliver(f.concept_str + "\t" + mode_tag + "\t" + text + "\n", f.out);
    cli.report("context", {{"onto", f.onto}, {"concept", f.concept_str}},
               f.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{f.out});
}

MatcherConfig matcher_config(const Cli& cli) {
    MatcherConfig mc;
    mc.k = cli.cfg.k;
    mc.lambda = cli.cfg.lambda;
    mc.kappa = cli.cfg.kappa;
    mc.one_to_one = cli.cfg.one_to_one;
    mc.annotation_properties = cli.properties();
    return mc;
}

void cmd_match(const Cli& cli, const Flags& f) {
    const Ontology src = cli.load(f.source);
    const Ontology tgt = cli.load(f.target);
    const MatcherConfig mc = matcher_config(cli);
    const std::vector<Mapping> mappings =
        f.serial ? match_serial(src, tgt, mc) : match(src, tgt, mc);
    write_file_atomic(f.out, to_tsv(mappings));
    cli.note("match: " + std::to_string(mappings.size()) + " mappings -> " + f.out);
    cli.report("match", {{"source", f.source}, {"target", f.target}}, {f.out});
}

void cmd_substring_match(const Cli& cli, const Flags& f) {
    const Ontology src = cli.load(f.source);
    const Ontology tgt = cli.load(f.target);
    const std::vector<Mapping> mappings = substring_match(src, tgt, cli.properties());
    write_file_atomic(f.out, to_tsv(mappings));
    cli.note("substring-match: " + std::to_string(mappings.size()) + " mappings -> " + f.out);
    cli.report("substring-match", {{"source", f.source}, {"target", f.target}}, {f.out});
}

// Order candidates best-first by lexical score against the source
// concept's labels; ties keep their prior order, unlabelled pairs
// score zero.
void rerank_cases(std::vector<RankingCase>& cases, const Ontology& src, const Ontology& tgt,
                  const std::vector<Iri>& properties) {
    const Labeller source_labels(src, properties);
    const Labeller target_labels(tgt, properties);
    for (RankingCase& c : cases) {
        const std::vector<std::string> labels = source_labels.concept_labels(c.source);
        std::vector<std::pair<double, Iri>> scored;
        scored.reserve(c.candidates.size());
        for (const Iri& cand : c.candidates) {
            double score = 0.0;
            if (!labels.empty()) {
                const std::vector<std::string> theirs = target_labels.concept_labels(cand);
                if (!theirs.empty())
                    score = lexical_score(labels, theirs);
            }
            scored.emplace_back(score, cand);
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        c.candidates.clear();
        for (auto& [score, cand] : scored)
            c.candidates.push_back(std::move(cand));
    }
}

void cmd_evaluate(const Cli& cli, const Flags& f) {
    json metrics;
    json inputs;
    if (f.eval_mode == "global") {
        if (f.pred.empty() || f.ref.empty())
            throw ValidationError("evaluate --mode global needs --pred and --ref");
        const std::vector<Mapping> pred = parse_mappings_tsv(read_file(f.pred));
        const std::vector<Mapping> ref = parse_mappings_tsv(read_file(f.ref));
        std::vector<Mapping> ignored;
        if (!f.ignored.empty())
            ignored = parse_mappings_tsv(read_file(f.ignored));
        const MetricReport r = global_metrics(pred, ref, ignored);
        metrics = {{"precision", r.precision}, {"recall", r.recall}, {"f_score", r.f_score}};
        if (r.division_by_zero)
            metrics["division_by_zero"] = true;
        inputs = {{"pred", f.pred}, {"ref", f.ref}};
        if (!f.ignored.empty())
            inputs["ignored"] = f.ignored;
    } else if (f.eval_mode == "ranking") {
        if (f.cases.empty())
            throw ValidationError("evaluate --mode ranking needs --cases");
        std::vector<RankingCase> cases = parse_ranking_tsv(read_file(f.cases));
        inputs = {{"cases", f.cases}};
        if (!f.source.empty() || !f.target.empty()) {
            if (f.source.empty() || f.target.empty())
                throw ValidationError(
                    "re-ranking candidates needs both --source and --target ontologies");
            const Ontology src = cli.load(f.source);
            const Ontology tgt = cli.load(f.target);
            rerank_cases(cases, src, tgt, cli.properties());
            inputs["source"] = f.source;
            inputs["target"] = f.target;
        }
        const MetricReport r = ranking_metrics(cases, cli.cfg.hits_at);
        metrics = {{"mrr", *r.mrr}};
        for (const auto& [k, v] : r.hits_at)
            metrics["hits@" + std::to_string(k)] = v;
    } else {
        throw ValidationError("unknown evaluate mode: " + f.eval_mode +
                              " (expected global or ranking)");
    }

    const std::string text = metrics.dump(2) + "\n";
    cli.out << text;
    std::vector<std::string> outputs;
    if (!f.out.empty()) {
        write_file_atomic(f.out, text);
        outputs.push_back(f.out);
    }
    cli.report("evaluate", inputs, outputs);
}

void cmd_split(const Cli& cli, const Flags& f) {
    const std::vector<Mapping> refs = parse_mappings_tsv(read_file(f.ref));
    SplitSetting setting;
    if (f.setting == "unsupervised")
        setting = SplitSetting::Unsupervised;
    else if (f.setting == "semi-supervised")
        setting = SplitSetting::SemiSupervised;
    else
        throw ValidationError("unknown split setting: " + f.setting +
                              " (expected unsupervised or semi-supervised)");

    const ReferenceSplit split = split_references(refs, setting, cli.cfg.seed);
    std::vector<std::string> outputs = {f.out_prefix + ".train.tsv", f.out_prefix + ".val.tsv",
                                        f.out_prefix + ".test.tsv"};
    write_file_atomic(outputs[0], to_tsv(split.train));
    write_file_atomic(outputs[1], to_tsv(split.validation));
    write_file_atomic(outputs[2], to_tsv(split.test));

    json inputs = {{"ref", f.ref}};
    if (!f.target.empty()) {
        const Ontology tgt = cli.load(f.target);
        const Reasoner reasoner(tgt);
        NegativePolicy policy;
        if (cli.cfg.negatives == "random")
            policy = NegativePolicy::Random;
        else if (cli.cfg.negatives == "hard")
            policy = NegativePolicy::Hard;
        else
            throw ValidationError("unknown negatives policy: " + cli.cfg.negatives +
                                  " (expected random or hard)");
        const std::vector<Iri> props = cli.properties();
        auto emit_cases = [&](const std::vector<Mapping>& part, const std::string& path) {
            std::vector<RankingCase> cases;
            cases.reserve(part.size());
            for (std::size_t i = 0; i < part.size(); ++i) {
                RankingCase c;
                c.source = part[i].source;
                c.gold = part[i].target;
                c.candidates =
                    ranking_candidates(part[i], reasoner, cli.cfg.candidates,
                                       cli.cfg.seed + 1000003ULL * (i + 1), policy, props);
                cases.push_back(std::move(c));
            }
            write_file_atomic(path, to_ranking_tsv(cases));
            outputs.push_back(path);
        };
        emit_cases(split.validation, f.out_prefix + ".val.cands.tsv");
        emit_cases(split.test, f.out_prefix + ".test.cands.tsv");
        inputs["target"] = f.target;
    }

    cli.note("split: " + std::to_string(split.train.size()) + " train, " +
             std::to_string(split.validation.size()) + " validation, " +
             std::to_string(split.test.size()) + " test -> " + f.out_prefix + ".*");
    cli.report("split", inputs, outputs);
}

void cmd_subsumption_dataset(const Cli& cli, const Flags& f) {
    const std::vector<Mapping> refs = parse_mappings_tsv(read_file(f.ref));
    const Ontology tgt = cli.load(f.target);
    const Reasoner reasoner(tgt);
    const Taxonomy taxonomy = build_taxonomy(reasoner);
    const SubsumptionDataset ds = build_subsumption_dataset(refs, tgt, taxonomy);

    write_file_atomic(f.out_refs, to_tsv(ds.references));
    write_file_atomic(f.out_onto, serialise(ds.pruned_target));
    cli.note("subsumption-dataset: " + std::to_string(ds.references.size()) + " references (" +
             std::to_string(ds.barren_refs) + " barren, " + std::to_string(ds.dropped_refs) +
             " dropped), pruned target keeps " +
             std::to_string(ds.pruned_target.concepts().size()) + " concepts");
    cli.report("subsumption-dataset", {{"ref", f.ref}, {"target", f.target}},
               {f.out_refs, f.out_onto});
}

bool provided(const CLI::App* app, const std::string& name) {
    const CLI::Option* opt = app->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Ontology engineering toolkit"};
    app.name("ontokit");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--config", f.config, "JSON configuration file");
    app.add_option("--seed", f.seed, "seed for every randomised step");
    app.add_option("--threads", f.threads, "cap on worker threads (0 = library default)");
    app.add_flag("--quiet", f.quiet, "suppress progress output");
    app.add_option("--report", f.report, "run-report path (default: <out>.report.json)");
    app.add_option("--annotation-property", f.ann_props,
                   "label property IRIs in preference order (repeatable)");

    CLI::App* c_parse = app.add_subcommand("parse", "parse a document, optionally reserialise");
    c_parse->add_option("--onto", f.onto, "ontology document")->required();
    c_parse->add_option("--out", f.out, "reserialised output path");

    CLI::App* c_classify =
        app.add_subcommand("classify", "entailed named subsumptions as sub<TAB>sup lines");
    c_classify->add_option("--onto", f.onto, "ontology document")->required();
    c_classify->add_option("--out", f.out, "output path (default: standard output)");

    CLI::App* c_prune = app.add_subcommand("prune", "remove concepts, bridging their hierarchy");
    c_prune->add_option("--onto", f.onto, "ontology document")->required();
    c_prune->add_option("--remove", f.remove_path, "file with one concept IRI per line");
    c_prune->add_option("--iri", f.remove_iris, "concept IRI to remove (repeatable)");
    c_prune->add_flag("--keep", f.keep, "invert: remove every concept NOT listed");
    c_prune->add_option("--out", f.out, "pruned ontology path")->required();

    CLI::App* c_norm = app.add_subcommand("normalise", "rewrite into the six normal forms");
    c_norm->add_option("--onto", f.onto, "ontology document")->required();
    c_norm->add_option("--out", f.out, "normalised ontology path")->required();

    CLI::App* c_tax = app.add_subcommand("taxonomy", "child<TAB>parent lines of the taxonomy");
    c_tax->add_option("--onto", f.onto, "ontology document")->required();
    c_tax->add_option("--out", f.out, "output path (default: standard output)");

    CLI::App* c_proj = app.add_subcommand("project", "triple projection as N-Triples");
    c_proj->add_option("--onto", f.onto, "ontology document")->required();
    c_proj->add_option("--out", f.out, "output path (default: standard output)");

    CLI::App* c_verb = app.add_subcommand("verbalise", "render a class expression as a sentence");
    c_verb->add_option("--onto", f.onto, "ontology document supplying the labels")->required();
    c_verb->add_option("--expr", f.expr_path, "file holding one class expression")->required();
    c_verb->add_option("--out", f.out, "output path (default: standard output)");

    CLI::App* c_ctx = app.add_subcommand("context", "textual taxonomy context of a concept");
    c_ctx->add_option("--onto", f.onto, "ontology document")->required();
    c_ctx->add_option("--concept", f.concept_str, "concept IRI")->required();
    c_ctx->add_option("--mode", f.ctx_mode, "isolated, path or breadth");
    c_ctx->add_option("--direction", f.ctx_direction, "up or down");
    c_ctx->add_option("--limit", f.limit, "labels to emit");
    c_ctx->add_flag("--strict", f.strict, "fail on unlabelled concepts instead of skipping");
    c_ctx->add_option("--out", f.out, "output path (default: standard output)");

    CLI::App* c_match = app.add_subcommand("match", "lexical alignment of two ontologies");
    c_match->add_option("--source", f.source, "source ontology")->required();
    c_match->add_option("--target", f.target, "target ontology")->required();
    c_match->add_option("--k", f.k, "candidates per source concept");
    c_match->add_option("--lambda", f.lambda, "acceptance threshold");
    c_match->add_option("--kappa", f.kappa, "extension threshold");
    c_match->add_flag("--one-to-one", f.one_to_one, "keep only the best target per source");
    c_match->add_flag("--serial", f.serial, "force the single-threaded reference path");
    c_match->add_option("--out", f.out, "mapping TSV path")->required();

    CLI::App* c_sub = app.add_subcommand("substring-match", "label-containment baseline");
    c_sub->add_option("--source", f.source, "source ontology")->required();
    c_sub->add_option("--target", f.target, "target ontology")->required();
    c_sub->add_option("--out", f.out, "mapping TSV path")->required();

    CLI::App* c_eval = app.add_subcommand("evaluate", "score predictions against references");
    c_eval->add_option("--mode", f.eval_mode, "global or ranking");
    c_eval->add_option("--pred", f.pred, "predicted mapping TSV");
    c_eval->add_option("--ref", f.ref, "reference mapping TSV");
    c_eval->add_option("--ignored", f.ignored, "mapping TSV excluded from both sides");
    c_eval->add_option("--cases", f.cases, "ranking case TSV");
    c_eval->add_option("--source", f.source, "source ontology (re-rank candidates lexically)");
    c_eval->add_option("--target", f.target, "target ontology (re-rank candidates lexically)");
    c_eval->add_option("--out", f.out, "metric report path (also printed)");

    CLI::App* c_split = app.add_subcommand("split", "partition references for evaluation");
    c_split->add_option("--ref", f.ref, "reference mapping TSV")->required();
    c_split->add_option("--setting", f.setting, "unsupervised or semi-supervised");
    c_split->add_option("--out-prefix", f.out_prefix, "path prefix for the split files")
        ->required();
    c_split->add_option("--target", f.target,
                        "target ontology: also write ranking candidate files");
    c_split->add_option("--candidates", f.candidates, "candidates per ranking case");
    c_split->add_option("--negatives", f.negatives, "random or hard");

    CLI::App* c_subs = app.add_subcommand("subsumption-dataset",
                                          "derive subsumption references from equivalences");
    c_subs->add_option("--ref", f.ref, "equivalence reference TSV")->required();
    c_subs->add_option("--target", f.target, "target ontology")->required();
    c_subs->add_option("--out-refs", f.out_refs, "subsumption reference TSV path")->required();
    c_subs->add_option("--out-onto", f.out_onto, "pruned target ontology path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Settings cfg = f.config.empty() ? Settings{} : load_config(f.config);
        if (provided(&app, "--seed"))
            cfg.seed = f.seed;
        if (provided(&app, "--threads"))
            cfg.threads = f.threads;
        if (provided(&app, "--annotation-property"))
            cfg.annotation_properties = f.ann_props;

        CLI::App* sub = app.get_subcommands().front();
        if (provided(sub, "--k"))
            cfg.k = f.k;
        if (provided(sub, "--lambda"))
            cfg.lambda = f.lambda;
        if (provided(sub, "--kappa"))
            cfg.kappa = f.kappa;
        if (provided(sub, "--one-to-one"))
            cfg.one_to_one = f.one_to_one;
        if (provided(sub, "--candidates"))
            cfg.candidates = f.candidates;
        if (provided(sub, "--negatives"))
            cfg.negatives = f.negatives;

#ifdef ONTOKIT_HAVE_OPENMP
        if (cfg.threads > 0)
            omp_set_num_threads(cfg.threads);
#endif

        const Cli cli{out, err, std::move(cfg), f.quiet, f.report};
        const std::string& name = sub->get_name();
        if (name == "parse")
            cmd_parse(cli, f);
        else if (name == "classify")
            cmd_classify(cli, f);
        else if (name == "prune")
            cmd_prune(cli, f);
        else if (name == "normalise")
            cmd_normalise(cli, f);
        else if (name == "taxonomy")
            cmd_taxonomy(cli, f);
        else if (name == "project")
            cmd_project(cli, f);
        else if (name == "verbalise")
            cmd_verbalise(cli, f);
        else if (name == "context")
            cmd_context(cli, f);
        else if (name == "match")
            cmd_match(cli, f);
        else if (name == "substring-match")
            cmd_substring_match(cli, f);
        else if (name == "evaluate")
            cmd_evaluate(cli, f);
        else if (name == "split")
            cmd_split(cli, f);
        else if (name == "subsumption-dataset")
            cmd_subsumption_dataset(cli, f);
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NormalisationError& e) {
        err << "error: " << e.what() << "\n";
        for (const std::string& axiom : e.offending_axioms())
            err << "  " << axiom << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ontokit
