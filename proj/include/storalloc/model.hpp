#pragma once

#include <vector>

#include "storalloc/errors.hpp"
#include "storalloc/numeric.hpp"

namespace storalloc {

// A problem instance: n storage nodes, receivers read r-subsets of them, the
// file is F coded symbols, and T symbols total may be placed (any F of the T
// suffice to reconstruct). All types here are immutable value types; every
// operation on them is pure.
struct Problem {
    int n = 0;        // storage nodes
    int r = 0;        // access-subset size, 1 <= r <= n
    int F = 0;        // file size in symbols
    long long T = 0;  // budget in symbols, T >= F
};

// Validates and builds a Problem; throws InvalidParameter naming the bad field.
Problem make_problem(int n, int r, int F, long long T);

// Per-node symbol counts x_1..x_n, summing to exactly T.
struct Allocation {
    std::vector<long long> counts;
};

// Validates length, non-negativity and the budget sum.
Allocation make_allocation(std::vector<long long> counts, const Problem& problem);

// Fractions of nodes per stored-symbol count. Counts above F are clamped to F
// when profiling (extra symbols past a full file never change any subset's
// success), so alpha is indexable by 0..F. mean_per_node is T/n regardless of
// clamping.
struct AlphaProfile {
    std::vector<Rational> alpha;  // size F + 1
    Rational mean_per_node;
};

AlphaProfile alpha_of_allocation(const Allocation& alloc, const Problem& problem);

// Places m = floor(T/j) chunks of j symbols on m nodes (descending order);
// a remainder T - m*j goes on one extra node when m < n, and is discarded
// when m == n. Throws InvalidChunk for j outside [1..F] and DoesNotFit when
// floor(T/j) > n.
Allocation symmetric_allocation(const Problem& problem, int j);

}  // namespace storalloc
