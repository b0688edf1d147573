#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdrw/congest.hpp"
#include "cdrw/graph.hpp"

namespace cdrw {

// Random vertex partition: every vertex hashed to one of k machines.
struct RvpPartition {
    std::uint32_t machines = 0;
    std::vector<std::uint32_t> home;  // per-vertex machine id
    std::uint64_t seed = 0;
};

RvpPartition rvp_partition(const Graph& g, std::uint32_t machines, std::uint64_t seed);

// Replays the ledger's per-arc traffic against the partition and counts the
// messages whose endpoints live on different machines. Expected fraction of
// the total is 1 - 1/k under a random partition.
std::uint64_t cross_machine_messages(const Graph& g, const RvpPartition& part,
                                     const CostLedger& ledger);

// Conversion-Theorem round estimate M/k^2 + Delta*T/k for simulating a
// CONGEST algorithm with M messages and T rounds on k machines. Polylog
// factors of the asymptotic statement are not folded in (flagged instead).
// bandwidth is the per-link messages-per-round divisor, normalized to 1.
struct KMachineEstimate {
    std::uint64_t congest_messages = 0;
    std::uint64_t congest_rounds = 0;
    std::size_t max_degree = 0;
    std::uint32_t machines = 0;
    double bandwidth = 1.0;
    double rounds_estimate = 0.0;
    std::optional<double> sbm_rounds_estimate;  // (n^2/k^2 + n/(k r)) (p + q(r-1))
    bool polylog_hidden = true;
};

KMachineEstimate conversion_estimate(std::uint64_t congest_messages, std::uint64_t congest_rounds,
                                     std::size_t max_degree, std::uint32_t machines,
                                     double bandwidth = 1.0);
KMachineEstimate conversion_estimate(std::uint64_t congest_messages, std::uint64_t congest_rounds,
                                     std::size_t max_degree, std::uint32_t machines,
                                     const PpmParams& params, double bandwidth = 1.0);

}  // namespace cdrw
