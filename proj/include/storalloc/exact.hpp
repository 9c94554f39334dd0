#pragma once

#include <span>
#include <utility>
#include <vector>

#include "storalloc/model.hpp"
#include "storalloc/numeric.hpp"

namespace storalloc {

// Exact count of failing r-subsets for one allocation.
struct ExactResult {
    BigInt psi;        // number of r-subsets holding < F symbols
    BigInt total;      // C(n, r)
    Rational success;  // 1 - psi/total
};

// Psi of an arbitrary counts vector (need not sum to any particular budget).
// Dynamic program over distinct clamped values: group nodes by min(x, F) with
// multiplicities, state = (nodes chosen, sum capped at F), transitions choose
// t nodes of one value and multiply by C(mult, t). Polynomial in
// n * r * F * #distinct values; equals naive enumeration.
BigInt failing_subsets_of_counts(std::span<const long long> counts, int r, int F);

ExactResult count_failing_subsets(const Allocation& alloc, const Problem& problem);

// psi / C(n, r): the probability that an ordered r-subset of distinct nodes
// holds fewer than F symbols.
Rational ordered_failure_probability(const Allocation& alloc, const Problem& problem);

struct BruteForceReport {
    BigInt best_psi;
    // Non-increasing representatives attaining best_psi, padded with zeros to
    // length n.
    std::vector<std::vector<long long>> optimal_allocations;
    BigInt search_space_size;
};

// Number of partitions of `total` into at most max_len parts, each <= max_part.
BigInt bounded_partition_count(long long total, int max_part, int max_len);

// Exhaustive minimum of psi over the dominance-reduced space: entries capped
// at F (excess past a full file is weakly dominated by moving it elsewhere),
// one non-increasing representative per node permutation class, budget above
// n*F truncated to n*F (all-full is then optimal and reported). Throws
// SearchSpaceTooLarge with the computed bound when the space exceeds max_space.
BruteForceReport brute_force_optimal(const Problem& problem, const BigInt& max_space);

// Evaluates every feasible chunk size j in [1..F] through
// symmetric_allocation (remainder placed) and returns the psi-minimizing j,
// ties toward larger j (fewer non-empty nodes for equal success). Infeasible
// j are skipped; throws DoesNotFit when T > n*F leaves no feasible j at all.
std::pair<int, ExactResult> best_symmetric_exact(const Problem& problem);

}  // namespace storalloc
