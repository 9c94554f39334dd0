#pragma once

#include <cstdint>

#include "storalloc/model.hpp"

namespace storalloc {

enum class SampleMode { with_repetition, without_repetition };

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;  // sqrt(mean * (1 - mean) / samples)
    long long samples = 0;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::with_repetition;
};

// Monte Carlo failure estimate. with_repetition draws r node indices i.i.d.
// uniform (estimates phi); without_repetition draws r distinct indices
// (estimates psi / C(n,r)). Sample i's draws are a pure function of
// (seed, i).
McEstimate mc_failure(const Allocation& alloc, const Problem& problem, SampleMode mode,
                      long long samples, std::uint64_t seed);

// T symbols thrown at i.i.d. uniform nodes; used as the random-allocation
// generator for statistical sweeps.
Allocation random_allocation(const Problem& problem, std::uint64_t seed,
                             std::uint64_t index);

}  // namespace storalloc
