#include "storalloc/sampler.hpp"

#include <cmath>
#include <string>

#include "storalloc/errors.hpp"
#include "storalloc/rng.hpp"

namespace storalloc {

McEstimate mc_failure(const Allocation& alloc, const Problem& problem, SampleMode mode,
                      long long samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidParameter("samples must be >= 1");

    const auto n = static_cast<std::uint64_t>(problem.n);
    const int r = problem.r;
    long long failures = 0;
    std::uint64_t chosen[64];
    const bool distinct = mode == SampleMode::without_repetition;
    if (distinct && r > 64) throw InvalidParameter("r > 64 unsupported in MC sampler");

    for (long long i = 0; i < samples; ++i) {
        SplitMix64 rng{derive_stream_key(seed, static_cast<std::uint64_t>(i))};
        long long sum = 0;
        if (!distinct) {
            for (int k = 0; k < r; ++k) {
                sum += alloc.counts[bounded(rng.next(), n)];
            }
        } else {
            // Floyd's sampling: k-th draw lands in [0, n-r+k+1); collisions
            // map to the newly opened index.
            for (int k = 0; k < r; ++k) {
                const std::uint64_t limit = n - static_cast<std::uint64_t>(r) + k + 1;
                std::uint64_t pick = bounded(rng.next(), limit);
                for (int prev = 0; prev < k; ++prev) {
                    if (chosen[prev] == pick) {
                        pick = limit - 1;
                        break;
                    }
                }
                chosen[k] = pick;
                sum += alloc.counts[pick];
            }
        }
        if (sum < problem.F) ++failures;
    }

    McEstimate estimate;
    estimate.mean = static_cast<double>(failures) / static_cast<double>(samples);
    estimate.stderr_ =
        std::sqrt(estimate.mean * (1.0 - estimate.mean) / static_cast<double>(samples));
    estimate.samples = samples;
    estimate.seed = seed;
    estimate.mode = mode;
    return estimate;
}

Allocation random_allocation(const Problem& problem, std::uint64_t seed,
                             std::uint64_t index) {
    SplitMix64 rng{derive_stream_key(seed, index)};
    std::vector<long long> counts(static_cast<size_t>(problem.n), 0);
    for (long long symbol = 0; symbol < problem.T; ++symbol) {
        ++counts[bounded(rng.next(), static_cast<std::uint64_t>(problem.n))];
    }
    return Allocation{std::move(counts)};
}

}  // namespace storalloc
