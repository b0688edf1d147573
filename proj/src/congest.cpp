#include "cdrw/congest.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdrw/rng.hpp"

namespace cdrw {

void CostLedger::attach(const Graph& g) {
    graph_n = g.num_vertices();
    graph_m = g.num_edges();
    edge_traffic.assign(g.volume(), 0);
}

BfsTree build_bfs(const Graph& g, Vertex root, std::size_t depth_cap, CostLedger& ledger) {
    if (ledger.edge_traffic.empty()) ledger.attach(g);
    BfsTree tree;
    tree.root = root;
    tree.parent.assign(g.num_vertices(), BfsTree::kNoParent);
    tree.depth.assign(g.num_vertices(), BfsTree::kUnreached);
    tree.depth[root] = 0;
    tree.covered.push_back(root);

    std::vector<Vertex> frontier{root};
    std::uint32_t level = 0;
    while (!frontier.empty() && level < depth_cap) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex v : g.neighbors(u)) {
                if (tree.depth[v] == BfsTree::kUnreached) {
                    tree.depth[v] = level + 1;
                    tree.parent[v] = u;
                    next.push_back(v);
                }
            }
        }
        if (next.empty()) break;  // tree complete; this round never runs
        ++level;
        ledger.bfs.rounds += 1;
        for (Vertex u : frontier) {
            ledger.bfs.messages += g.degree(u);
            for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) ++ledger.edge_traffic[a];
        }
        for (Vertex v : next) tree.covered.push_back(v);
        frontier = std::move(next);
    }
    tree.height = level;
    std::sort(tree.covered.begin(), tree.covered.end());
    return tree;
}

ProbVector flood_step_cost(const Graph& g, const ProbVector& p, CostLedger& ledger) {
    if (ledger.edge_traffic.empty()) ledger.attach(g);
    ledger.flood.rounds += 1;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (p.values[u] == 0.0) continue;
        ledger.flood.messages += g.degree(u);
        for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) ++ledger.edge_traffic[a];
    }
    return walk_step(g, p);
}

namespace {

// Arc indices of each covered vertex's parent link, both directions, for
// bulk traffic charging along the tree.
struct TreeArcs {
    std::vector<std::size_t> up;    // child -> parent
    std::vector<std::size_t> down;  // parent -> child
};

TreeArcs tree_arcs(const Graph& g, const BfsTree& tree) {
    TreeArcs arcs;
    arcs.up.reserve(tree.tree_edges());
    arcs.down.reserve(tree.tree_edges());
    for (Vertex v : tree.covered) {
        const Vertex par = tree.parent[v];
        if (par == BfsTree::kNoParent) continue;
        arcs.up.push_back(g.arc_index(v, par));
        arcs.down.push_back(g.arc_index(par, v));
    }
    return arcs;
}

void charge_tree_broadcast(CostLedger& ledger, PhaseCost& phase, const BfsTree& tree,
                           const TreeArcs& arcs, std::uint64_t times, bool both_directions) {
    const std::uint64_t per_cycle = both_directions ? 2 : 1;
    phase.rounds += per_cycle * tree.height * times;
    phase.messages += per_cycle * tree.tree_edges() * times;
    for (std::size_t a : arcs.down) ledger.edge_traffic[a] += times;
    if (both_directions)
        for (std::size_t a : arcs.up) ledger.edge_traffic[a] += times;
}

DistributedSelection select_on_tree(const BfsTree& tree, const TreeArcs& arcs,
                                    std::span<const double> scores, std::size_t k,
                                    CostLedger& ledger, std::uint64_t tie_seed,
                                    double tie_break_scale) {
    const auto& covered = tree.covered;
    if (k > covered.size())
        throw std::invalid_argument("distributed_select: k exceeds covered vertex count");

    DistributedSelection out;
    if (k == 0) return out;

    const auto jittered = tie_jittered_scores(scores, covered, tie_seed, tie_break_scale);
    auto value_of = [&](std::size_t i) {  // i indexes `covered`
        return jittered.empty() ? scores[covered[i]] : jittered[i];
    };

    // Iteration 1 is the convergecast collecting x_min/x_max (and the count,
    // which settles the k == covered case immediately).
    out.iterations = 1;
    bool resolved = false;
    double threshold = 0.0;
    if (k == covered.size()) {
        resolved = true;
        threshold = std::numeric_limits<double>::infinity();
    } else {
        double lo = value_of(0), hi = value_of(0);
        for (std::size_t i = 1; i < covered.size(); ++i) {
            lo = std::min(lo, value_of(i));
            hi = std::max(hi, value_of(i));
        }
        constexpr std::size_t kMaxIterations = 64;
        while (out.iterations < kMaxIterations) {
            const double mid = lo + (hi - lo) / 2.0;
            if (mid <= lo || mid >= hi) break;  // interval exhausted at double precision
            ++out.iterations;
            std::size_t count = 0;
            for (std::size_t i = 0; i < covered.size(); ++i)
                if (value_of(i) < mid) ++count;
            if (count == k) {
                resolved = true;
                threshold = mid;
                break;
            }
            if (count < k)
                lo = mid;
            else
                hi = mid;
        }
    }

    if (resolved) {
        for (std::size_t i = 0; i < covered.size(); ++i)
            if (value_of(i) < threshold) out.members.push_back(covered[i]);
    } else {
        // Duplicate values survived jittering (or jitter disabled); resolve
        // by rank directly. Same order as select_smallest_among.
        out.members =
            select_smallest_among(scores, covered, k, tie_seed, tie_break_scale).members;
    }
    out.score_sum = 0.0;
    for (Vertex v : out.members) out.score_sum += scores[v];

    charge_tree_broadcast(ledger, ledger.select, tree, arcs, out.iterations, true);
    return out;
}

}  // namespace

DistributedSelection distributed_select(const Graph& g, const BfsTree& tree,
                                        std::span<const double> scores, std::size_t k,
                                        CostLedger& ledger, std::uint64_t tie_seed,
                                        double tie_break_scale) {
    if (ledger.edge_traffic.empty()) ledger.attach(g);
    const TreeArcs arcs = tree_arcs(g, tree);
    return select_on_tree(tree, arcs, scores, k, ledger, tie_seed, tie_break_scale);
}

CommunityResult run_cdrw_congest(const Graph& g, Vertex s, const CdrwConfig& cfg,
                                 CostLedger& ledger) {
    if (ledger.edge_traffic.empty()) ledger.attach(g);
    if (g.degree(s) == 0) {
        // Mirrors detect_community's isolated-seed path; no communication.
        return detail::run_driver(g, s, cfg, {});
    }

    const std::size_t max_len = cfg.resolved_max_walk_length(g.num_vertices());
    const BfsTree tree = build_bfs(g, s, max_len, ledger);
    const TreeArcs arcs = tree_arcs(g, tree);
    const std::size_t n_cap = std::min(g.num_vertices(), tree.covered.size());
    const std::size_t initial = cfg.mixing.resolved_initial_size(g.num_vertices());

    detail::DriverHooks hooks;
    hooks.step = [&](const ProbVector& p) { return flood_step_cost(g, p, ledger); };
    hooks.search = [&](const ProbVector& p,
                       std::uint64_t jitter_seed) -> std::optional<MixingSetResult> {
        std::optional<MixingSetResult> best;
        for (std::size_t k : candidate_sizes(initial, n_cap, cfg.mixing.growth_factor)) {
            // The root announces each candidate size down the tree.
            charge_tree_broadcast(ledger, ledger.control, tree, arcs, 1, false);
            const auto scores = deviation_scores(g, p, k);
            auto sel = select_on_tree(tree, arcs, scores, k, ledger, mix_seed(jitter_seed, k),
                                      cfg.mixing.tie_break_scale);
            if (sel.score_sum < cfg.mixing.epsilon_threshold)
                best = MixingSetResult{std::move(sel.members), k, p.step, sel.score_sum};
        }
        // Result indicator broadcast: members learn they form S_l.
        charge_tree_broadcast(ledger, ledger.control, tree, arcs, 1, false);
        return best;
    };
    return detail::run_driver(g, s, cfg, hooks);
}

std::pair<CommunityResult, CostLedger> run_cdrw_congest(const Graph& g, Vertex s,
                                                        const CdrwConfig& cfg) {
    CostLedger ledger;
    ledger.attach(g);
    CommunityResult res = run_cdrw_congest(g, s, cfg, ledger);
    return {std::move(res), std::move(ledger)};
}

std::pair<DetailedAssignment, CostLedger> detect_all_congest(const Graph& g,
                                                             const CdrwConfig& cfg) {
    CostLedger ledger;
    ledger.attach(g);
    auto detailed = detail::pool_loop(
        g, cfg, [&](Vertex s) { return run_cdrw_congest(g, s, cfg, ledger); });
    return {std::move(detailed), std::move(ledger)};
}

}  // namespace cdrw
