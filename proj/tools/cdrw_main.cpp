// Command-line harness: graph generation, CDRW/CDST runs with accuracy
// reports, parameter sweeps, and CONGEST/k-machine cost reports.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "cdrw/cdrw.hpp"
#include "cdrw/cdst.hpp"
#include "cdrw/congest.hpp"
#include "cdrw/graph.hpp"
#include "cdrw/graph_io.hpp"
#include "cdrw/kmachine.hpp"
#include "cdrw/metrics.hpp"
#include "cdrw/rng.hpp"

using json = nlohmann::json;
using namespace cdrw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Stop-rule threshold when the instance has a single block (the analytic
// formula degenerates to 0 at r = 1).
constexpr double kSingleBlockDelta = 0.05;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

double resolve_delta(const std::string& mode, std::uint32_t r, double p, double q, const Graph& g,
                     const GroundTruth* gt) {
    if (mode == "analytic") {
        if (r <= 1) return kSingleBlockDelta;
        if (!(p > 0.0)) throw UsageError("--delta analytic requires --p (and --q)");
        return ppm_analytic_conductance(p, q, r);
    }
    if (mode == "exact") {
        if (r <= 1 || gt == nullptr) return kSingleBlockDelta;
        double phi = std::numeric_limits<double>::infinity();
        for (const auto& block : gt->blocks()) phi = std::min(phi, conductance_of_set(g, block));
        return phi;
    }
    try {
        std::size_t pos = 0;
        const double value = std::stod(mode, &pos);
        if (pos != mode.size()) throw std::invalid_argument(mode);
        return value;
    } catch (const std::exception&) {
        throw UsageError("--delta must be a number, 'analytic' or 'exact'");
    }
}

json phase_json(const PhaseCost& c) { return json{{"rounds", c.rounds}, {"messages", c.messages}}; }

json ledger_json(const CostLedger& ledger) {
    return json{{"rounds", ledger.rounds()},
                {"messages", ledger.messages()},
                {"per_phase",
                 {{"bfs", phase_json(ledger.bfs)},
                  {"flood", phase_json(ledger.flood)},
                  {"select", phase_json(ledger.select)},
                  {"control", phase_json(ledger.control)}}}};
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::size_t nc = 0;
    std::uint32_t r = 1;
    double p = 0.0;
    double q = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    PpmParams params{args.nc, args.r, args.p, args.q, args.seed};
    auto [g, gt] = generate_gnpq(params);
    write_edge_list(args.out + ".edges", g);
    write_labels(args.out + ".labels", gt);
    std::size_t intra = 0, inter = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) (gt.block_of(u) == gt.block_of(v) ? intra : inter) += 1;
    std::printf("n=%zu m=%zu e_in=%zu e_out=%zu\n", g.num_vertices(), g.num_edges(), intra, inter);
    return kExitOk;
}

// ---------------------------------------------------------------- run ----

struct RunArgs {
    std::string algo = "cdrw";
    std::string graph_path;
    std::string labels_path;
    std::string delta = "analytic";
    double p = 0.0;
    double q = 0.0;
    std::uint64_t seed = 0;
    double max_walk_c = 4.0;
    std::size_t max_walk_length = 0;
    double alpha = 0.3;
    bool use_minhash = false;
    std::size_t minhash_hashes = 64;
    std::string trace_path;
    std::string cost_json_path;
    std::string out;
};

void write_score_csv(const std::string& path, std::size_t nc, std::uint32_t r, double p, double q,
                     std::uint64_t seed, const ScoreReport& report, std::uint64_t rounds,
                     std::uint64_t messages) {
    std::string csv = "n_c,r,p,q,seed,aggregate_f,aggregate_jaccard,rounds,messages\n";
    csv += std::to_string(nc) + "," + std::to_string(r) + "," + fmt(p) + "," + fmt(q) + "," +
           std::to_string(seed) + "," + fmt(report.aggregate_f) + "," +
           fmt(report.aggregate_jaccard) + "," + std::to_string(rounds) + "," +
           std::to_string(messages) + "\n";
    write_text(path, csv);
}

void write_trace(const std::string& path, const std::vector<CommunityResult>& runs) {
    std::string lines;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (const auto& tr : runs[i].trace) {
            json rec{{"community", i},        {"seed", runs[i].seed_vertex},
                     {"l", tr.step},          {"size", tr.set_size},
                     {"score_sum", tr.score_sum}, {"mixed", tr.mixed},
                     {"stopped", tr.stopped}};
            lines += rec.dump() + "\n";
        }
    }
    write_text(path, lines);
}

int cmd_run(const RunArgs& args) {
    Graph g = read_edge_list(args.graph_path);
    if (args.labels_path.empty()) throw std::runtime_error("metrics requested but no labels file given");
    GroundTruth gt = read_labels(args.labels_path, g.num_vertices());
    const std::size_t nc = gt.block_size != 0 ? gt.block_size : g.num_vertices() / gt.num_blocks;

    ScoreReport report;
    std::uint64_t rounds = 0, messages = 0;
    if (args.algo == "cdrw") {
        CdrwConfig cfg;
        cfg.delta = resolve_delta(args.delta, gt.num_blocks, args.p, args.q, g, &gt);
        cfg.seed = args.seed;
        cfg.max_walk_c = args.max_walk_c;
        cfg.max_walk_length = args.max_walk_length;
        DetailedAssignment detailed;
        if (!args.cost_json_path.empty()) {
            auto [det, ledger] = detect_all_congest(g, cfg);
            detailed = std::move(det);
            rounds = ledger.rounds();
            messages = ledger.messages();
            json j = ledger_json(ledger);
            j["n"] = g.num_vertices();
            j["m"] = g.num_edges();
            j["r"] = gt.num_blocks;
            j["p"] = args.p;
            j["q"] = args.q;
            j["seed"] = args.seed;
            write_text(args.cost_json_path, j.dump(2) + "\n");
        } else {
            detailed = detect_all_detailed(g, cfg);
        }
        report = evaluate_assignment(detailed.assignment, gt);
        if (!args.trace_path.empty()) write_trace(args.trace_path, detailed.runs);
    } else if (args.algo == "cdst") {
        CdstConfig cfg;
        cfg.alpha = args.alpha;
        cfg.seed = args.seed;
        cfg.use_minhash = args.use_minhash;
        cfg.minhash_hashes = args.minhash_hashes;
        report = evaluate_assignment(run_cdst(g, cfg), gt);
    } else {
        throw UsageError("--algo must be cdrw or cdst");
    }
    write_score_csv(args.out, nc, gt.num_blocks, args.p, args.q, args.seed, report, rounds, messages);
    return kExitOk;
}

// -------------------------------------------------------------- sweep ----

struct SweepCell {
    std::size_t nc;
    std::uint32_t r;
    double p;
    double q;
    bool single_community;  // score one seeded detection against V
};

struct SweepArgs {
    std::string experiment;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::string out;
};

std::vector<SweepCell> preset_cells(const std::string& name) {
    std::vector<SweepCell> cells;
    if (name == "gnp_accuracy") {
        for (double c : {2.0, 3.0}) {
            for (std::size_t n : {256, 512, 1024, 2048, 4096}) {
                const double p = c * std::log2(static_cast<double>(n)) / static_cast<double>(n);
                cells.push_back({n, 1, p, 0.0, true});
            }
        }
    } else if (name == "ppm_pq") {
        const std::size_t nc = 1024;
        const double lg = std::log2(static_cast<double>(nc));
        for (double p : {2.0 * lg / nc, 2.0 * lg * lg / nc}) {
            for (double qn : {0.1, 0.6, 3.0}) cells.push_back({nc, 2, p, qn / nc, false});
        }
    } else if (name == "ppm_r_fixed_block") {
        const std::size_t nc = 1024;
        const double p = 2.0 * std::log2(static_cast<double>(nc)) / nc;
        for (std::uint32_t r : {2u, 4u, 8u}) cells.push_back({nc, r, p, 0.1 / nc, false});
    } else if (name == "ppm_r_fixed_total") {
        const std::size_t total = 8192;
        for (std::uint32_t r : {2u, 4u, 8u}) {
            const std::size_t nc = total / r;
            const double p = 2.0 * std::log2(static_cast<double>(nc)) / nc;
            cells.push_back({nc, r, p, 0.1 / nc, false});
        }
    } else {
        throw UsageError("unknown experiment: " + name);
    }
    return cells;
}

struct TrialOutcome {
    double f = 0.0;
    double jaccard = 0.0;
    bool ok = false;
    std::string error;
};

TrialOutcome run_trial(const SweepCell& cell, std::uint64_t seed) {
    TrialOutcome out;
    try {
        PpmParams params{cell.nc, cell.r, cell.p, cell.q, seed};
        auto [g, gt] = generate_gnpq(params);
        CdrwConfig cfg;
        cfg.delta = cell.r > 1 ? ppm_analytic_conductance(params) : kSingleBlockDelta;
        cfg.seed = seed;
        if (cell.single_community) {
            auto eng = make_engine(mix_seed(seed, kHarnessStream));
            Vertex s = static_cast<Vertex>(bounded_rand(eng, g.num_vertices()));
            while (g.degree(s) == 0) s = static_cast<Vertex>(bounded_rand(eng, g.num_vertices()));
            auto res = detect_community(g, s, cfg);
            std::vector<Vertex> all(g.num_vertices());
            for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
            out.f = f_score(res.members, all).value_or(0.0);
            out.jaccard = jaccard(res.members, all).value_or(0.0);
        } else {
            auto report = evaluate_assignment(detect_all(g, cfg), gt);
            out.f = report.aggregate_f;
            out.jaccard = report.aggregate_jaccard;
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

int cmd_sweep(const SweepArgs& args) {
    if (args.trials < 1) throw UsageError("--trials must be >= 1");
    const auto cells = preset_cells(args.experiment);
    std::string csv = "n_c,r,p,q,seed,aggregate_f,aggregate_jaccard,rounds,messages,status\n";
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        std::vector<TrialOutcome> outcomes;
        for (std::size_t trial = 0; trial < args.trials; ++trial) {
            // Documented derivation: per-trial seed = base + cell index + trial index.
            const std::uint64_t seed = args.seed + ci + trial;
            auto outcome = run_trial(cell, seed);
            csv += std::to_string(cell.nc) + "," + std::to_string(cell.r) + "," + fmt(cell.p) +
                   "," + fmt(cell.q) + "," + std::to_string(seed) + "," + fmt(outcome.f) + "," +
                   fmt(outcome.jaccard) + ",0,0," + (outcome.ok ? "ok" : "error:" + outcome.error) +
                   "\n";
            outcomes.push_back(std::move(outcome));
        }
        double mean_f = 0, mean_j = 0;
        std::size_t ok_count = 0;
        for (const auto& o : outcomes)
            if (o.ok) {
                mean_f += o.f;
                mean_j += o.jaccard;
                ++ok_count;
            }
        if (ok_count > 0) {
            mean_f /= static_cast<double>(ok_count);
            mean_j /= static_cast<double>(ok_count);
        }
        double var_f = 0, var_j = 0;
        for (const auto& o : outcomes)
            if (o.ok) {
                var_f += (o.f - mean_f) * (o.f - mean_f);
                var_j += (o.jaccard - mean_j) * (o.jaccard - mean_j);
            }
        if (ok_count > 1) {
            var_f /= static_cast<double>(ok_count - 1);
            var_j /= static_cast<double>(ok_count - 1);
        }
        const std::string prefix = std::to_string(cell.nc) + "," + std::to_string(cell.r) + "," +
                                   fmt(cell.p) + "," + fmt(cell.q) + ",0,";
        csv += prefix + fmt(mean_f) + "," + fmt(mean_j) + ",0,0,mean\n";
        csv += prefix + fmt(std::sqrt(var_f)) + "," + fmt(std::sqrt(var_j)) + ",0,0,stddev\n";
    }
    write_text(args.out, csv);
    return kExitOk;
}

// --------------------------------------------------------------- cost ----

struct CostArgs {
    std::string graph_path;
    std::string labels_path;
    std::vector<std::uint32_t> machines;
    std::string delta = "analytic";
    double p = 0.0;
    double q = 0.0;
    std::uint64_t seed = 0;
    std::int64_t source = -1;
    std::string out;
};

int cmd_cost(const CostArgs& args) {
    for (auto k : args.machines)
        if (k < 2) throw UsageError("--k values must be >= 2");
    Graph g = read_edge_list(args.graph_path);
    std::optional<GroundTruth> gt;
    if (!args.labels_path.empty()) gt = read_labels(args.labels_path, g.num_vertices());
    const std::uint32_t r = gt ? gt->num_blocks : 1;

    CdrwConfig cfg;
    cfg.delta = resolve_delta(args.delta, r, args.p, args.q, g, gt ? &*gt : nullptr);
    cfg.seed = args.seed;

    Vertex source;
    if (args.source >= 0) {
        if (static_cast<std::size_t>(args.source) >= g.num_vertices())
            throw std::runtime_error("--source out of range");
        source = static_cast<Vertex>(args.source);
    } else {
        auto eng = make_engine(mix_seed(args.seed, kHarnessStream));
        source = static_cast<Vertex>(bounded_rand(eng, g.num_vertices()));
        while (g.degree(source) == 0)
            source = static_cast<Vertex>(bounded_rand(eng, g.num_vertices()));
    }

    auto [res, ledger] = run_cdrw_congest(g, source, cfg);
    json j = ledger_json(ledger);
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["r"] = r;
    j["p"] = args.p;
    j["q"] = args.q;
    j["seed"] = args.seed;
    j["source"] = source;
    j["delta"] = cfg.delta;
    j["community_size"] = res.members.size();

    json per_k = json::array();
    for (auto k : args.machines) {
        json entry{{"k", k}};
        KMachineEstimate est;
        if (gt && args.p > 0.0) {
            PpmParams params{gt->block_size != 0 ? gt->block_size : g.num_vertices() / r, r,
                             args.p, args.q, args.seed};
            est = conversion_estimate(ledger.messages(), ledger.rounds(), g.max_degree(), k, params);
            entry["sbm_estimate"] = *est.sbm_rounds_estimate;
        } else {
            est = conversion_estimate(ledger.messages(), ledger.rounds(), g.max_degree(), k);
        }
        entry["estimate"] = est.rounds_estimate;
        entry["congest_messages"] = est.congest_messages;
        entry["congest_rounds"] = est.congest_rounds;
        entry["max_degree"] = est.max_degree;
        entry["polylog_hidden"] = est.polylog_hidden;
        const auto part = rvp_partition(g, k, args.seed);
        const auto cross = cross_machine_messages(g, part, ledger);
        entry["cross_messages"] = cross;
        entry["cross_fraction"] =
            ledger.messages() ? static_cast<double>(cross) / static_cast<double>(ledger.messages())
                              : 0.0;
        per_k.push_back(entry);
    }
    j["per_k"] = per_k;
    write_text(args.out, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-walk community detection on planted partition graphs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags override it");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a planted partition graph");
    gen_cmd->add_option("--nc", gen.nc, "Vertices per block")->required();
    gen_cmd->add_option("--r", gen.r, "Block count")->default_val(1);
    gen_cmd->add_option("--p", gen.p, "Intra-block edge probability")->required();
    gen_cmd->add_option("--q", gen.q, "Inter-block edge probability")->default_val(0.0);
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->default_val(0);
    gen_cmd->add_option("--out", gen.out, "Output prefix (<out>.edges, <out>.labels)")->required();

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Run a detection algorithm and score it");
    run_cmd->add_option("--algo", run.algo, "cdrw or cdst")->default_val("cdrw");
    run_cmd->add_option("--graph", run.graph_path, "Edge-list file")->required();
    run_cmd->add_option("--labels", run.labels_path, "Ground-truth labels file");
    run_cmd->add_option("--delta", run.delta, "Stop threshold: number, 'analytic' or 'exact'");
    run_cmd->add_option("--p", run.p, "Model p (for analytic delta and reports)");
    run_cmd->add_option("--q", run.q, "Model q (for analytic delta and reports)");
    run_cmd->add_option("--seed", run.seed, "RNG seed")->default_val(0);
    run_cmd->add_option("--max-walk-c", run.max_walk_c, "Walk-length bound constant");
    run_cmd->add_option("--max-walk-length", run.max_walk_length, "Explicit walk-length bound");
    run_cmd->add_option("--alpha", run.alpha, "CDST reorientation fraction");
    run_cmd->add_flag("--use-minhash", run.use_minhash, "CDST: estimate strengths with minhash");
    run_cmd->add_option("--minhash-hashes", run.minhash_hashes, "CDST: minhash function count");
    run_cmd->add_option("--trace", run.trace_path, "Write per-step JSON-lines trace here");
    run_cmd->add_option("--cost-json", run.cost_json_path,
                        "Simulate message passing and write the cost ledger JSON here");
    run_cmd->add_option("--out", run.out, "Score CSV path ('-' for stdout)")->default_val("-");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a named experiment grid");
    sweep_cmd
        ->add_option("--experiment", sweep.experiment,
                     "gnp_accuracy | ppm_pq | ppm_r_fixed_block | ppm_r_fixed_total")
        ->required();
    sweep_cmd->add_option("--trials", sweep.trials, "Trials per cell")->default_val(10);
    sweep_cmd->add_option("--seed", sweep.seed, "Base seed")->default_val(0);
    sweep_cmd->add_option("--out", sweep.out, "CSV path ('-' for stdout)")->default_val("-");

    CostArgs cost;
    auto* cost_cmd = app.add_subcommand("cost", "CONGEST cost ledger and k-machine estimates");
    cost_cmd->add_option("--graph", cost.graph_path, "Edge-list file")->required();
    cost_cmd->add_option("--labels", cost.labels_path, "Labels file (for r and exact delta)");
    cost_cmd->add_option("--k", cost.machines, "Machine counts (repeatable)")->required();
    cost_cmd->add_option("--delta", cost.delta, "Stop threshold: number, 'analytic' or 'exact'");
    cost_cmd->add_option("--p", cost.p, "Model p");
    cost_cmd->add_option("--q", cost.q, "Model q");
    cost_cmd->add_option("--seed", cost.seed, "RNG seed")->default_val(0);
    cost_cmd->add_option("--source", cost.source, "Source vertex (default: seeded random)");
    cost_cmd->add_option("--out", cost.out, "JSON path ('-' for stdout)")->default_val("-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(gen_cmd)) return cmd_gen(gen);
        if (app.got_subcommand(run_cmd)) return cmd_run(run);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep);
        if (app.got_subcommand(cost_cmd)) return cmd_cost(cost);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
