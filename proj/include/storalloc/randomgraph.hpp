#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "storalloc/errors.hpp"
#include "storalloc/symmetric.hpp"

namespace storalloc {

// Poisson-CDF failure probability of the limit model: a receiver's
// accessible chunk count tends to Poisson(mu/j) when the mean number of
// symbols it can reach is mu; the file is missed when fewer than ceil(F/j)
// chunks are reachable. Evaluated with the stable term recurrence.
double poisson_failure(int j, double mu, int F);

// argmin of poisson_failure over the per-node budgets {ceil(F/i) : i in [r]}
// (candidates_only) or all of [1..F] (full_scan validation). Ties toward the
// larger j.
std::pair<int, double> optimize_symmetric_poisson(
    double mu, int F, int r, ScanMode mode = ScanMode::candidates_only);

struct GraphTrialConfig {
    int n = 0;                // vertices
    double d = 0.0;           // edge probability p = d * ln(n) / n
    int j = 0;                // chunk size
    long long T = 0;          // budget; floor(T/j) chunks are placed
    int trials = 1;
    std::uint64_t seed = 0;
    bool open_neighborhood = false;  // exclude the node's own storage
};

struct GnpEstimate {
    double mean = 0.0;      // fraction of nodes that can rebuild the file
    double stderr_ = 0.0;   // across trials
    int trials = 0;
};

// Samples G(n, p) graphs, places floor(T/j) chunks of j symbols on uniformly
// random distinct nodes, and counts nodes whose closed (or open) neighborhood
// reaches F symbols. Per-trial generators are derived from (seed, trial), so
// results are bitwise reproducible. Throws InvalidParameter for p >= 1,
// floor(T/j) > n, or trials < 1.
GnpEstimate gnp_recovery_rate(const GraphTrialConfig& cfg, int F);

}  // namespace storalloc
