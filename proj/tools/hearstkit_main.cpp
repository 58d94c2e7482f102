#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "hearstkit/dataset.hpp"
#include "hearstkit/dist_space.hpp"
#include "hearstkit/eval.hpp"
#include "hearstkit/extractor.hpp"
#include "hearstkit/model_io.hpp"
#include "hearstkit/scorers.hpp"
#include "hearstkit/svd.hpp"
#include "hearstkit/version.hpp"

namespace hk = hearstkit;
namespace fs = std::filesystem;

namespace {

// Canonical config string -> digest. Paths contribute their basenames so
// artifacts are byte-stable across working directories.
class ConfigDigest {
public:
    explicit ConfigDigest(std::string subcommand) { kv_["cmd"] = std::move(subcommand); }
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void set_path(const std::string& key, const std::string& path) {
        kv_[key] = fs::path(path).filename().string();
    }
    void set_paths(const std::string& key, const std::vector<std::string>& paths) {
        std::string joined;
        for (const auto& p : paths) {
            if (!joined.empty()) joined += ',';
            joined += fs::path(p).filename().string();
        }
        kv_[key] = joined;
    }
    template <typename T>
    void set_num(const std::string& key, T value) {
        kv_[key] = std::to_string(value);
    }

    std::string digest() const {
        std::string canon;
        for (const auto& [k, v] : kv_) canon += k + "=" + v + ";";
        return hk::hex64(hk::fnv1a64(canon));
    }

private:
    std::map<std::string, std::string> kv_;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    return out;
}

hk::ModelMeta model_meta(const ConfigDigest& cfg, uint64_t seed) {
    hk::ModelMeta meta;
    meta.info = std::string("hearstkit ") + hk::kVersion + "; config " + cfg.digest() +
                "; seed " + std::to_string(seed);
    return meta;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
    std::vector<std::string> corpus;
    std::string patterns;
    std::string out;
    bool multiword = false;
    int jobs = 1;
    uint64_t seed = 42;
};

int run_extract(const ExtractArgs& args) {
    auto patterns = hk::load_pattern_file(args.patterns);
    if (patterns.empty()) throw std::runtime_error("pattern file has no patterns: " + args.patterns);

    hk::ExtractOptions opts;
    opts.multiword = args.multiword;
    opts.jobs = args.jobs;

    hk::PairCounts raw;
    for (const auto& path : args.corpus) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open corpus: " + path);
        raw.merge(hk::extract_corpus(in, fs::path(path).filename().string(), patterns, opts));
    }
    hk::PairCounts cooked = raw.postprocess();

    ConfigDigest cfg("extract");
    cfg.set_paths("corpus", args.corpus);
    cfg.set_path("patterns", args.patterns);
    cfg.set_num("multiword", args.multiword ? 1 : 0);

    std::vector<std::string> header;
    std::istringstream hs(hk::artifact_header(cfg.digest(), args.seed));
    for (std::string line; std::getline(hs, line);) header.push_back(line);
    header.push_back("# total_matches " + std::to_string(raw.total()));
    header.push_back("# unique_pairs " + std::to_string(cooked.unique_pairs()));
    header.push_back("# unique_terms " + std::to_string(cooked.unique_terms()));

    auto out = open_out(args.out);
    cooked.write_tsv(out, header);

    std::cout << "total_matches\t" << raw.total() << '\n'
              << "unique_pairs\t" << cooked.unique_pairs() << '\n'
              << "unique_terms\t" << cooked.unique_terms() << '\n';
    return 0;
}

// ------------------------------------------------------------------ build

struct BuildArgs {
    std::string pairs;
    std::string weighting = "ppmi";
    std::string out;
    size_t rank = 0;
    std::string svd_out;
    uint64_t seed = 42;
    // window-space mode
    std::vector<std::string> corpus;
    std::string space_out;
    size_t window = 2;
    uint64_t min_count = 100;
};

int run_build(const BuildArgs& args) {
    if (!args.space_out.empty()) {
        if (args.corpus.empty()) throw std::runtime_error("--space-out needs --corpus");
        std::vector<hk::AnnotatedSentence> sentences;
        for (const auto& path : args.corpus) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open corpus: " + path);
            auto batch = hk::parse_corpus(in, fs::path(path).filename().string());
            sentences.insert(sentences.end(), std::make_move_iterator(batch.begin()),
                             std::make_move_iterator(batch.end()));
        }
        auto space = hk::build_window_space(sentences, args.window, args.min_count);
        hk::save_space(space, args.space_out + ".space", args.space_out + ".ctx",
                       args.space_out + ".counts");
        std::cout << "terms\t" << space.terms.size() << "\ncontexts\t" << space.contexts.size()
                  << '\n';
        return 0;
    }

    if (args.pairs.empty()) throw std::runtime_error("--pairs (or --space-out) is required");
    std::ifstream in(args.pairs);
    if (!in) throw std::runtime_error("cannot open pair file: " + args.pairs);
    auto counts = hk::PairCounts::read_tsv(in, args.pairs);
    const hk::Weighting weighting =
        args.weighting == "prob" ? hk::Weighting::Prob : hk::Weighting::Ppmi;
    if (args.weighting != "prob" && args.weighting != "ppmi")
        throw std::runtime_error("--weighting must be prob or ppmi");

    auto model = hk::build_matrix(counts, weighting);

    ConfigDigest cfg("build");
    cfg.set_path("pairs", args.pairs);
    cfg.set("weighting", args.weighting);
    hk::save_model_file(args.out, model, model_meta(cfg, args.seed));
    std::cout << "terms\t" << model.vocab.size() << "\nnnz\t" << model.matrix.nnz() << '\n';

    if (args.rank > 0) {
        if (args.svd_out.empty()) throw std::runtime_error("--rank needs --svd-out");
        if (args.rank > model.vocab.size())
            throw std::runtime_error("rank exceeds vocabulary size " +
                                     std::to_string(model.vocab.size()));
        auto svd = hk::truncated_svd(model.matrix, args.rank, args.seed);
        svd.weighting = weighting;
        svd.vocab = model.vocab;
        cfg.set_num("rank", args.rank);
        hk::save_model_file(args.svd_out, svd, model_meta(cfg, args.seed));
        std::cout << "rank\t" << svd.rank << '\n';
    }
    return 0;
}

struct SvdArgs {
    std::string model;
    size_t rank = 0;
    std::string out;
    uint64_t seed = 42;
};

int run_svd(const SvdArgs& args) {
    auto loaded = hk::load_model_file(args.model);
    auto* pair_model = std::get_if<hk::PairModel>(&loaded);
    if (!pair_model) throw std::runtime_error("svd expects a sparse model file");
    if (args.rank < 1 || args.rank > pair_model->vocab.size())
        throw std::runtime_error("rank must be in [1, " +
                                 std::to_string(pair_model->vocab.size()) + "]");
    auto svd = hk::truncated_svd(pair_model->matrix, args.rank, args.seed);
    svd.weighting = pair_model->weighting;
    svd.vocab = pair_model->vocab;

    ConfigDigest cfg("svd");
    cfg.set_path("model", args.model);
    cfg.set_num("rank", args.rank);
    hk::save_model_file(args.out, svd, model_meta(cfg, args.seed));
    std::cout << "rank\t" << svd.rank << '\n';
    return 0;
}

// ------------------------------------------------------------------ score

struct ScoreArgs {
    std::string model;
    std::string x, y;
    std::string pairs_file;
};

int run_score(const ScoreArgs& args) {
    auto loaded = hk::load_model_file(args.model);
    std::cout.precision(17);
    auto score_one = [&](const std::string& x, const std::string& y) {
        std::optional<double> s;
        if (auto* pm = std::get_if<hk::PairModel>(&loaded)) s = pm->score(x, y);
        if (auto* sm = std::get_if<hk::SvdModel>(&loaded)) s = sm->score(x, y);
        std::cout << x << '\t' << y << '\t';
        if (s)
            std::cout << *s << '\n';
        else
            std::cout << "OOV" << '\n';
    };
    if (!args.pairs_file.empty()) {
        std::ifstream in(args.pairs_file);
        if (!in) throw std::runtime_error("cannot open pair list: " + args.pairs_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw std::runtime_error("pair lines must be x<TAB>y");
            score_one(line.substr(0, tab), line.substr(tab + 1));
        }
    } else {
        if (args.x.empty() || args.y.empty())
            throw std::runtime_error("score needs --x and --y (or --pairs)");
        score_one(args.x, args.y);
    }
    return 0;
}

// ------------------------------------------------------------------- eval

struct EvalArgs {
    std::vector<std::string> benchmarks;
    std::vector<std::string> datasets;
    std::vector<std::string> models;
    std::string space;
    std::vector<std::string> dih_scorers;
    size_t n_contexts = 50;
    std::string out;
    std::string markdown;
    uint64_t seed = 42;
    int jobs = 1;
    size_t iterations = 1000;
};

const std::vector<std::string>& valid_benchmarks() {
    static const std::vector<std::string> names = {"detection", "dir-bless", "dir-wbless",
                                                   "dir-bibless", "graded"};
    return names;
}

hk::DihMeasure dih_measure_by_name(const std::string& name) {
    if (name == "cosine") return hk::DihMeasure::Cosine;
    if (name == "weedsprec") return hk::DihMeasure::WeedsPrec;
    if (name == "cl") return hk::DihMeasure::Cl;
    if (name == "invcl") return hk::DihMeasure::InvCl;
    if (name == "slqs") return hk::DihMeasure::Slqs;
    if (name == "slqs-cos") return hk::DihMeasure::SlqsCos;
    throw std::runtime_error(
        "unknown scorer '" + name +
        "' (valid: cosine, weedsprec, cl, invcl, slqs, slqs-cos)");
}

hk::EvalResult run_benchmark(const std::string& benchmark, const hk::Scorer& scorer,
                             const std::vector<hk::DatasetRecord>& records, uint64_t seed,
                             int jobs, size_t iterations) {
    if (benchmark == "detection") return hk::detection_eval(scorer, records);
    if (benchmark == "dir-bless") {
        std::vector<hk::DatasetRecord> positives;
        for (const auto& r : records)
            if (r.relation == "hyper") positives.push_back(r);
        return hk::direction_bless(scorer, positives, seed);
    }
    if (benchmark == "dir-wbless")
        return hk::direction_wbless(scorer, records, seed, jobs, iterations);
    if (benchmark == "dir-bibless")
        return hk::direction_bibless(scorer, records, seed, jobs, iterations);
    if (benchmark == "graded") return hk::graded_eval(scorer, records);
    std::string msg = "unknown benchmark '" + benchmark + "' (valid:";
    for (const auto& n : valid_benchmarks()) msg += " " + n;
    throw std::runtime_error(msg + ")");
}

int run_eval(const EvalArgs& args) {
    if (args.benchmarks.empty()) throw std::runtime_error("--benchmark is required");
    if (args.benchmarks.size() != args.datasets.size())
        throw std::runtime_error("need one --dataset per --benchmark");
    for (const auto& b : args.benchmarks) {
        if (std::find(valid_benchmarks().begin(), valid_benchmarks().end(), b) ==
            valid_benchmarks().end()) {
            std::string msg = "unknown benchmark '" + b + "' (valid:";
            for (const auto& n : valid_benchmarks()) msg += " " + n;
            throw std::runtime_error(msg + ")");
        }
    }

    // Keep loaded models alive next to the scorers that borrow them.
    std::vector<std::unique_ptr<hk::AnyModel>> models;
    std::unique_ptr<hk::DistributionalSpace> space;
    std::vector<std::unique_ptr<hk::Scorer>> scorers;
    for (const auto& path : args.models) {
        models.push_back(std::make_unique<hk::AnyModel>(hk::load_model_file(path)));
        if (auto* pm = std::get_if<hk::PairModel>(models.back().get()))
            scorers.push_back(std::make_unique<hk::PairModelScorer>(*pm));
        else
            scorers.push_back(std::make_unique<hk::SvdScorer>(
                std::get<hk::SvdModel>(*models.back())));
    }
    if (!args.dih_scorers.empty()) {
        if (args.space.empty()) throw std::runtime_error("--scorer needs --space");
        space = std::make_unique<hk::DistributionalSpace>(hk::load_space(
            args.space + ".space", args.space + ".ctx", args.space + ".counts"));
        for (const auto& name : args.dih_scorers) {
            scorers.push_back(std::make_unique<hk::DihScorer>(*space, dih_measure_by_name(name),
                                                              args.n_contexts));
        }
    }
    if (scorers.empty()) throw std::runtime_error("nothing to evaluate: give --model or --scorer");

    std::vector<std::vector<hk::DatasetRecord>> datasets;
    for (const auto& path : args.datasets) datasets.push_back(hk::load_dataset(path));

    ConfigDigest cfg("eval");
    cfg.set_paths("datasets", args.datasets);
    cfg.set_paths("models", args.models);
    cfg.set_num("seed", args.seed);

    struct Cell {
        hk::EvalResult result;
    };
    std::vector<std::vector<Cell>> table(scorers.size());

    auto out = open_out(args.out);
    out.precision(17);
    out << hk::artifact_header(cfg.digest(), args.seed) << '\n';
    out << "scorer\tbenchmark\tmetric\tvalue\tn_pairs\tn_oov\thyperparams\tseed\n";
    for (size_t s = 0; s < scorers.size(); ++s) {
        for (size_t b = 0; b < args.benchmarks.size(); ++b) {
            auto res = run_benchmark(args.benchmarks[b], *scorers[s], datasets[b], args.seed,
                                     args.jobs, args.iterations);
            out << scorers[s]->name() << '\t' << args.benchmarks[b] << '\t' << res.metric
                << '\t' << res.value << '\t' << res.n_pairs << '\t' << res.n_oov << '\t'
                << (res.hyperparams.empty() ? "-" : res.hyperparams) << '\t' << res.seed
                << '\n';
            table[s].push_back(Cell{res});
            std::cout << scorers[s]->name() << " " << args.benchmarks[b] << " " << res.metric
                      << " = " << res.value << '\n';
        }
    }

    if (!args.markdown.empty()) {
        auto md = open_out(args.markdown);
        md << "<!-- hearstkit " << hk::kVersion << " config=" << cfg.digest()
           << " seed=" << args.seed << " -->\n";
        md << "| scorer |";
        for (const auto& b : args.benchmarks) md << ' ' << b << " |";
        md << "\n|---|";
        for (size_t b = 0; b < args.benchmarks.size(); ++b) md << "---|";
        md << '\n';
        for (size_t s = 0; s < scorers.size(); ++s) {
            md << "| " << scorers[s]->name() << " |";
            for (const auto& cell : table[s]) {
                std::ostringstream v;
                v.precision(2);
                v << std::fixed << cell.result.value;
                md << ' ' << v.str() << " |";
            }
            md << '\n';
        }
    }
    return 0;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
    std::string benchmark;
    std::string dataset;
    std::string model;
    std::string space;
    std::string dih_scorer;
    std::vector<size_t> grid;
    std::string out;
    uint64_t seed = 42;
    int jobs = 1;
    size_t iterations = 1000;
};

int run_sweep(const SweepArgs& args) {
    auto records = hk::load_dataset(args.dataset);
    std::vector<size_t> grid = args.grid.empty() ? hk::default_sweep_grid() : args.grid;

    ConfigDigest cfg("sweep");
    cfg.set_path("dataset", args.dataset);
    cfg.set("benchmark", args.benchmark);
    cfg.set_num("seed", args.seed);

    hk::SweepResult result;
    std::string family;
    if (!args.model.empty()) {
        auto loaded = hk::load_model_file(args.model);
        auto* pm = std::get_if<hk::PairModel>(&loaded);
        if (!pm) throw std::runtime_error("sweep expects a sparse model file");
        const size_t m = pm->vocab.size();
        std::vector<size_t> capped;
        for (size_t g : grid) capped.push_back(std::min(g, m));
        std::sort(capped.begin(), capped.end());
        capped.erase(std::unique(capped.begin(), capped.end()), capped.end());

        // One factorization at the largest rank; truncation gives the rest.
        auto full = hk::truncated_svd(pm->matrix, capped.back(), args.seed);
        full.weighting = pm->weighting;
        full.vocab = pm->vocab;
        family = full.weighting == hk::Weighting::Prob ? "sp(x, y)" : "spmi(x, y)";
        result = hk::sweep(capped, [&](size_t r) {
            auto model = full.truncated(r);
            hk::SvdScorer scorer(model);
            return run_benchmark(args.benchmark, scorer, records, args.seed, args.jobs,
                                 args.iterations)
                .value;
        });
    } else if (!args.space.empty()) {
        if (args.dih_scorer != "slqs" && args.dih_scorer != "slqs-cos")
            throw std::runtime_error("space sweeps tune N for slqs or slqs-cos");
        auto space = hk::load_space(args.space + ".space", args.space + ".ctx",
                                    args.space + ".counts");
        family = args.dih_scorer;
        result = hk::sweep(grid, [&](size_t n) {
            hk::DihScorer scorer(space, dih_measure_by_name(args.dih_scorer), n);
            return run_benchmark(args.benchmark, scorer, records, args.seed, args.jobs,
                                 args.iterations)
                .value;
        });
    } else {
        throw std::runtime_error("sweep needs --model or --space");
    }

    auto out = open_out(args.out);
    out.precision(17);
    out << hk::artifact_header(cfg.digest(), args.seed) << '\n';
    out << "scorer\tparam\tvalue\n";
    for (const auto& [param, value] : result.points)
        out << family << '\t' << param << '\t' << value << '\n';
    out << "# best " << result.best << '\n';
    std::cout << "best\t" << result.best << '\n';
    return 0;
}

// ------------------------------------------------------------ report-skew

struct SkewArgs {
    std::string pairs;
    std::string out;
    uint64_t seed = 42;
};

int run_report_skew(const SkewArgs& args) {
    std::ifstream in(args.pairs);
    if (!in) throw std::runtime_error("cannot open pair file: " + args.pairs);
    auto counts = hk::PairCounts::read_tsv(in, args.pairs);

    std::map<std::string, uint64_t> freq;
    for (const auto& [key, entry] : counts.entries()) {
        freq[key.first] += entry.count;
        freq[key.second] += entry.count;
    }
    std::vector<std::pair<std::string, uint64_t>> rows(freq.begin(), freq.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    ConfigDigest cfg("report-skew");
    cfg.set_path("pairs", args.pairs);
    auto out = open_out(args.out);
    out << hk::artifact_header(cfg.digest(), args.seed) << '\n';
    out << "rank\tterm\tfrequency\n";
    for (size_t i = 0; i < rows.size(); ++i)
        out << i + 1 << '\t' << rows[i].first << '\t' << rows[i].second << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hearst-pattern hypernymy toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    ExtractArgs extract_args;
    auto* extract = app.add_subcommand("extract", "Extract pattern pairs from a corpus");
    extract->configurable();
    extract->add_option("--corpus", extract_args.corpus, "annotated corpus file(s)")->required();
    extract->add_option("--patterns", extract_args.patterns, "pattern file")->required();
    extract->add_option("--out", extract_args.out, "output pair TSV")->required();
    extract->add_flag("--multiword", extract_args.multiword, "also emit full NP spans");
    extract->add_option("--jobs", extract_args.jobs, "worker threads");
    extract->add_option("--seed", extract_args.seed, "seed recorded in outputs");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Build a scoring model or window space");
    build->configurable();
    build->add_option("--pairs", build_args.pairs, "extraction pair TSV");
    build->add_option("--weighting", build_args.weighting, "prob or ppmi");
    build->add_option("--out", build_args.out, "model file");
    build->add_option("--rank", build_args.rank, "also factorize at this rank");
    build->add_option("--svd-out", build_args.svd_out, "SVD model file");
    build->add_option("--seed", build_args.seed, "factorization seed");
    build->add_option("--corpus", build_args.corpus, "corpus for --space-out mode");
    build->add_option("--space-out", build_args.space_out, "window-space output prefix");
    build->add_option("--window", build_args.window, "co-occurrence window");
    build->add_option("--min-count", build_args.min_count, "frequency filter");

    SvdArgs svd_args;
    auto* svd = app.add_subcommand("svd", "Factorize a sparse model");
    svd->configurable();
    svd->add_option("--model", svd_args.model, "sparse model file")->required();
    svd->add_option("--rank", svd_args.rank, "truncation rank")->required();
    svd->add_option("--out", svd_args.out, "SVD model file")->required();
    svd->add_option("--seed", svd_args.seed, "factorization seed");

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "Score term pairs with a model");
    score->configurable();
    score->add_option("--model", score_args.model, "model file")->required();
    score->add_option("--x", score_args.x, "hyponym candidate");
    score->add_option("--y", score_args.y, "hypernym candidate");
    score->add_option("--pairs", score_args.pairs_file, "x<TAB>y pair list");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Run benchmark protocols");
    eval->configurable();
    eval->add_option("--benchmark", eval_args.benchmarks, "protocol name(s)")->required();
    eval->add_option("--dataset", eval_args.datasets, "dataset TSV per benchmark")->required();
    eval->add_option("--model", eval_args.models, "model file(s)");
    eval->add_option("--space", eval_args.space, "distributional space prefix");
    eval->add_option("--scorer", eval_args.dih_scorers, "distributional measure(s)");
    eval->add_option("--n-contexts", eval_args.n_contexts, "SLQS context count");
    eval->add_option("--out", eval_args.out, "results TSV")->required();
    eval->add_option("--markdown", eval_args.markdown, "results markdown table");
    eval->add_option("--seed", eval_args.seed, "protocol seed");
    eval->add_option("--jobs", eval_args.jobs, "iteration worker threads");
    eval->add_option("--iterations", eval_args.iterations, "direction protocol iterations");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Hyperparameter selection on a validation set");
    sweep_cmd->configurable();
    sweep_cmd->add_option("--benchmark", sweep_args.benchmark, "protocol name")->required();
    sweep_cmd->add_option("--dataset", sweep_args.dataset, "validation dataset")->required();
    sweep_cmd->add_option("--model", sweep_args.model, "sparse model (rank sweep)");
    sweep_cmd->add_option("--space", sweep_args.space, "space prefix (N sweep)");
    sweep_cmd->add_option("--scorer", sweep_args.dih_scorer, "slqs or slqs-cos");
    sweep_cmd->add_option("--grid", sweep_args.grid, "grid values");
    sweep_cmd->add_option("--out", sweep_args.out, "sweep TSV")->required();
    sweep_cmd->add_option("--seed", sweep_args.seed, "protocol seed");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "iteration worker threads");
    sweep_cmd->add_option("--iterations", sweep_args.iterations, "direction iterations");

    SkewArgs skew_args;
    auto* skew = app.add_subcommand("report-skew", "Rank/frequency table of extracted terms");
    skew->configurable();
    skew->add_option("--pairs", skew_args.pairs, "extraction pair TSV")->required();
    skew->add_option("--out", skew_args.out, "histogram TSV")->required();
    skew->add_option("--seed", skew_args.seed, "seed recorded in outputs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) return run_extract(extract_args);
        if (build->parsed()) return run_build(build_args);
        if (svd->parsed()) return run_svd(svd_args);
        if (score->parsed()) return run_score(score_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (skew->parsed()) return run_report_skew(skew_args);
    } catch (const std::exception& e) {
        std::cerr << "hearstkit: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
