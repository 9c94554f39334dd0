#include "storalloc/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace storalloc {

Problem make_problem(int n, int r, int F, long long T) {
    if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
    if (r < 1) throw InvalidParameter("r must be >= 1, got " + std::to_string(r));
    if (r > n) {
        throw InvalidParameter("r must be <= n, got r=" + std::to_string(r) +
                               " with n=" + std::to_string(n));
    }
    if (F < 1) throw InvalidParameter("F must be >= 1, got " + std::to_string(F));
    if (T < F) {
        // A budget below the file size cannot ever succeed.
        throw InvalidParameter("T must be >= F, got T=" + std::to_string(T) +
                               " with F=" + std::to_string(F));
    }
    return Problem{n, r, F, T};
}

Allocation make_allocation(std::vector<long long> counts, const Problem& problem) {
    if (static_cast<int>(counts.size()) != problem.n) {
        throw InvalidParameter("allocation has " + std::to_string(counts.size()) +
                               " entries, expected n=" + std::to_string(problem.n));
    }
    long long sum = 0;
    for (long long x : counts) {
        if (x < 0) throw InvalidParameter("allocation entries must be non-negative");
        sum += x;
    }
    if (sum != problem.T) {
        throw InvalidParameter("allocation sums to " + std::to_string(sum) +
                               ", expected T=" + std::to_string(problem.T));
    }
    return Allocation{std::move(counts)};
}

AlphaProfile alpha_of_allocation(const Allocation& alloc, const Problem& problem) {
    std::vector<long long> tally(static_cast<size_t>(problem.F) + 1, 0);
    for (long long x : alloc.counts) {
        const long long clamped = std::min<long long>(x, problem.F);
        ++tally[static_cast<size_t>(clamped)];
    }
    AlphaProfile profile;
    profile.alpha.reserve(tally.size());
    for (long long count : tally) profile.alpha.emplace_back(count, problem.n);
    profile.mean_per_node = Rational(problem.T, problem.n);
    return profile;
}

Allocation symmetric_allocation(const Problem& problem, int j) {
    if (j < 1 || j > problem.F) {
        throw InvalidChunk("chunk size j=" + std::to_string(j) + " outside [1.." +
                           std::to_string(problem.F) + "]");
    }
    const long long m = problem.T / j;
    if (m > problem.n) {
        throw DoesNotFit("chunk size j=" + std::to_string(j) + " needs " +
                         std::to_string(m) + " nodes but only " +
                         std::to_string(problem.n) + " exist");
    }
    std::vector<long long> counts(static_cast<size_t>(m), j);
    const long long remainder = problem.T - m * j;
    if (remainder > 0 && m < problem.n) counts.push_back(remainder);
    counts.resize(static_cast<size_t>(problem.n), 0);
    return Allocation{std::move(counts)};
}

}  // namespace storalloc
