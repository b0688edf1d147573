#include "cdrw/kmachine.hpp"

#include <stdexcept>

#include "cdrw/rng.hpp"

namespace cdrw {

RvpPartition rvp_partition(const Graph& g, std::uint32_t machines, std::uint64_t seed) {
    if (machines < 2) throw std::invalid_argument("rvp_partition: need at least 2 machines");
    RvpPartition part;
    part.machines = machines;
    part.seed = seed;
    part.home.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        part.home[v] = static_cast<std::uint32_t>(mix_seed(seed, kRvpStream, v) % machines);
    return part;
}

std::uint64_t cross_machine_messages(const Graph& g, const RvpPartition& part,
                                     const CostLedger& ledger) {
    if (ledger.graph_n != g.num_vertices() || ledger.edge_traffic.size() != g.volume())
        throw std::invalid_argument("cross_machine_messages: ledger does not match graph");
    if (part.home.size() != g.num_vertices())
        throw std::invalid_argument("cross_machine_messages: partition does not match graph");
    std::uint64_t cross = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) {
            if (ledger.edge_traffic[a] == 0) continue;
            if (part.home[u] != part.home[g.arc_head(a)]) cross += ledger.edge_traffic[a];
        }
    }
    return cross;
}

KMachineEstimate conversion_estimate(std::uint64_t congest_messages, std::uint64_t congest_rounds,
                                     std::size_t max_degree, std::uint32_t machines,
                                     double bandwidth) {
    if (machines < 2) throw std::invalid_argument("conversion_estimate: need at least 2 machines");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("conversion_estimate: bandwidth must be positive");
    KMachineEstimate est;
    est.congest_messages = congest_messages;
    est.congest_rounds = congest_rounds;
    est.max_degree = max_degree;
    est.machines = machines;
    est.bandwidth = bandwidth;
    const double k = static_cast<double>(machines);
    est.rounds_estimate = (static_cast<double>(congest_messages) / (k * k) +
                           static_cast<double>(max_degree) * static_cast<double>(congest_rounds) / k) /
                          bandwidth;
    return est;
}

KMachineEstimate conversion_estimate(std::uint64_t congest_messages, std::uint64_t congest_rounds,
                                     std::size_t max_degree, std::uint32_t machines,
                                     const PpmParams& params, double bandwidth) {
    KMachineEstimate est =
        conversion_estimate(congest_messages, congest_rounds, max_degree, machines, bandwidth);
    const double n = static_cast<double>(params.total_vertices());
    const double k = static_cast<double>(machines);
    const double r = static_cast<double>(params.blocks);
    est.sbm_rounds_estimate =
        (n * n / (k * k) + n / (k * r)) * (params.p + params.q * (r - 1.0));
    return est;
}

}  // namespace cdrw
