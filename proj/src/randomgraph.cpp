#include "storalloc/randomgraph.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "storalloc/rng.hpp"

namespace storalloc {

double poisson_failure(int j, double mu, int F) {
    const double lambda = mu / j;
    const int cutoff = (F - 1) / j;
    double term = std::exp(-lambda);
    double sum = 0.0;
    for (int k = 0; k <= cutoff; ++k) {
        sum += term;
        term *= lambda / (k + 1);
    }
    return sum;
}

std::pair<int, double> optimize_symmetric_poisson(double mu, int F, int r,
                                                  ScanMode mode) {
    std::set<int> js;
    if (mode == ScanMode::candidates_only) {
        for (int i = 1; i <= r; ++i) js.insert((F + i - 1) / i);
    } else {
        for (int j = 1; j <= F; ++j) js.insert(j);
    }
    int best_j = 0;
    double best_failure = 0.0;
    bool have_best = false;
    for (int j : js) {  // ascending, so >= keeps the larger j on ties
        const double failure = poisson_failure(j, mu, F);
        if (!have_best || failure <= best_failure) {
            have_best = true;
            best_j = j;
            best_failure = failure;
        }
    }
    return {best_j, best_failure};
}

GnpEstimate gnp_recovery_rate(const GraphTrialConfig& cfg, int F) {
    if (cfg.n < 1) throw InvalidParameter("n must be >= 1");
    if (cfg.j < 1) throw InvalidParameter("j must be >= 1");
    if (cfg.trials < 1) throw InvalidParameter("trials must be >= 1");
    const double p = cfg.d * std::log(static_cast<double>(cfg.n)) / cfg.n;
    if (p >= 1.0) {
        throw InvalidParameter("edge probability d*ln(n)/n = " + std::to_string(p) +
                               " >= 1");
    }
    if (p < 0.0) throw InvalidParameter("d must be non-negative");
    const long long chunks = cfg.T / cfg.j;
    if (chunks > cfg.n) {
        throw InvalidParameter("floor(T/j) = " + std::to_string(chunks) +
                               " chunks cannot be placed on distinct nodes, n=" +
                               std::to_string(cfg.n));
    }
    const int m = static_cast<int>(chunks);
    const int n = cfg.n;

    double mean = 0.0;
    double m2 = 0.0;  // Welford across trials
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(derive_stream_key(cfg.seed, static_cast<std::uint64_t>(trial)));

        std::vector<std::vector<int>> neighbors(static_cast<size_t>(n));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (uniform_unit(rng()) < p) {
                    neighbors[static_cast<size_t>(u)].push_back(v);
                    neighbors[static_cast<size_t>(v)].push_back(u);
                }
            }
        }

        // Partial Fisher-Yates for m distinct chunk holders.
        std::vector<int> nodes(static_cast<size_t>(n));
        for (int u = 0; u < n; ++u) nodes[static_cast<size_t>(u)] = u;
        std::vector<long long> stored(static_cast<size_t>(n), 0);
        for (int k = 0; k < m; ++k) {
            const auto pick = k + bounded(rng(), static_cast<std::uint64_t>(n - k));
            std::swap(nodes[static_cast<size_t>(k)], nodes[pick]);
            stored[static_cast<size_t>(nodes[static_cast<size_t>(k)])] = cfg.j;
        }

        long long succeeded = 0;
        for (int u = 0; u < n; ++u) {
            long long reach = cfg.open_neighborhood ? 0 : stored[static_cast<size_t>(u)];
            for (int v : neighbors[static_cast<size_t>(u)]) {
                reach += stored[static_cast<size_t>(v)];
            }
            if (reach >= F) ++succeeded;
        }
        const double fraction = static_cast<double>(succeeded) / n;
        const double delta = fraction - mean;
        mean += delta / (trial + 1);
        m2 += delta * (fraction - mean);
    }

    GnpEstimate estimate;
    estimate.mean = mean;
    estimate.trials = cfg.trials;
    if (cfg.trials > 1) {
        const double variance = m2 / (cfg.trials - 1);
        estimate.stderr_ = std::sqrt(variance / cfg.trials);
    }
    return estimate;
}

}  // namespace storalloc
