#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "storalloc/exact.hpp"
#include "storalloc/sampler.hpp"

using namespace storalloc;

namespace {

// Oracle: count failing r-subsets by walking every combination. Independent
// of the grouped DP it checks.
long long naive_psi(const std::vector<long long>& counts, int r, int F) {
    const int n = static_cast<int>(counts.size());
    long long failing = 0;
    std::vector<int> pick(static_cast<size_t>(r));
    std::function<void(int, int, long long)> walk = [&](int start, int depth, long long sum) {
        if (depth == r) {
            if (sum < F) ++failing;
            return;
        }
        for (int i = start; i <= n - (r - depth); ++i) {
            walk(i + 1, depth + 1, sum + counts[static_cast<size_t>(i)]);
        }
    };
    walk(0, 0, 0);
    return failing;
}

}  // namespace

TEST_CASE("count_failing_subsets on the 4-node hand-enumerated case") {
    const Problem p = make_problem(4, 2, 2, 4);
    const ExactResult result = count_failing_subsets(make_allocation({2, 1, 1, 0}, p), p);
    // Failing pairs: {x2,x4} and {x3,x4}.
    CHECK(result.psi == 2);
    CHECK(result.total == 6);
    CHECK(result.success == Rational(2, 3));
}

TEST_CASE("one full node leaves C(n-1,r-1) successful subsets") {
    for (int n = 2; n <= 9; ++n) {
        for (int r = 1; r <= std::min(n, 4); ++r) {
            const int F = 3;
            const Problem p = make_problem(n, r, F, F);
            std::vector<long long> counts(static_cast<size_t>(n), 0);
            counts[0] = F;
            const ExactResult res = count_failing_subsets(make_allocation(counts, p), p);
            CHECK(res.psi == binomial(n, r) - binomial(n - 1, r - 1));
        }
    }
}

TEST_CASE("two half-file nodes leave C(n-2,r-2) successful subsets") {
    for (int n = 3; n <= 9; ++n) {
        for (int r = 2; r <= std::min(n, 4); ++r) {
            const int F = 4;
            const Problem p = make_problem(n, r, F, F);
            std::vector<long long> counts(static_cast<size_t>(n), 0);
            counts[0] = F / 2;
            counts[1] = F / 2;
            const ExactResult res = count_failing_subsets(make_allocation(counts, p), p);
            CHECK(res.psi == binomial(n, r) - binomial(n - 2, r - 2));
        }
    }
}

TEST_CASE("grouped DP equals naive enumeration on random allocations") {
    for (std::uint64_t i = 0; i < 120; ++i) {
        const int n = 4 + static_cast<int>(i % 9);       // 4..12
        const int r = 1 + static_cast<int>(i % static_cast<std::uint64_t>(std::min(n, 4)));
        const int F = 2 + static_cast<int>(i % 7);       // 2..8
        const long long T = F + static_cast<long long>(i % 23);
        const Problem p = make_problem(n, r, F, T);
        const Allocation alloc = random_allocation(p, 1234, i);
        const BigInt dp = failing_subsets_of_counts(alloc.counts, r, F);
        CHECK(dp == naive_psi(alloc.counts, r, F));
    }
}

TEST_CASE("psi is permutation invariant") {
    const Problem p = make_problem(7, 3, 5, 12);
    const Allocation a = make_allocation({5, 3, 2, 1, 1, 0, 0}, p);
    const Allocation b = make_allocation({0, 1, 5, 2, 0, 3, 1}, p);
    CHECK(count_failing_subsets(a, p).psi == count_failing_subsets(b, p).psi);
}

TEST_CASE("adding a symbol never increases psi") {
    const Problem p = make_problem(6, 3, 5, 11);
    for (std::uint64_t i = 0; i < 40; ++i) {
        const Allocation alloc = random_allocation(p, 99, i);
        const BigInt base = failing_subsets_of_counts(alloc.counts, p.r, p.F);
        for (int node = 0; node < p.n; ++node) {
            std::vector<long long> bumped = alloc.counts;
            ++bumped[static_cast<size_t>(node)];
            CHECK(failing_subsets_of_counts(bumped, p.r, p.F) <= base);
        }
    }
}

TEST_CASE("ordered_failure_probability is psi over C(n,r)") {
    const Problem p = make_problem(4, 2, 2, 4);
    CHECK(ordered_failure_probability(make_allocation({2, 1, 1, 0}, p), p) ==
          Rational(1, 3));

    // One full node among ten, pairs: complement of C(9,1)/C(10,2).
    const Problem p10 = make_problem(10, 2, 6, 6);
    std::vector<long long> counts(10, 0);
    counts[0] = 6;
    CHECK(ordered_failure_probability(make_allocation(counts, p10), p10) ==
          Rational(4, 5));

    // Every node holds the file: nothing fails.
    const Problem full = make_problem(5, 2, 3, 15);
    CHECK(ordered_failure_probability(make_allocation({3, 3, 3, 3, 3}, full), full) == 0);

    // The identity psi = C(n,r) * P[failure] holds by construction; check the
    // two sides reconcile on a random instance.
    const Problem q = make_problem(8, 3, 4, 13);
    const Allocation alloc = random_allocation(q, 7, 0);
    const ExactResult res = count_failing_subsets(alloc, q);
    CHECK(Rational(res.psi, 1) ==
          ordered_failure_probability(alloc, q) * Rational(res.total, 1));
}

TEST_CASE("brute_force_optimal concentrates a minimal budget") {
    const Problem p = make_problem(4, 2, 2, 2);
    const BruteForceReport report = brute_force_optimal(p, BigInt(1000));
    CHECK(report.best_psi == 3);  // C(4,2) - C(3,1)
    REQUIRE(report.optimal_allocations.size() == 1);
    CHECK(report.optimal_allocations[0] == std::vector<long long>{2, 0, 0, 0});
    CHECK(report.search_space_size == 2);  // (2,0,0,0) and (1,1,0,0)
}

TEST_CASE("brute_force_optimal saturated budget is all-full") {
    const Problem p = make_problem(4, 2, 3, 12);
    const BruteForceReport report = brute_force_optimal(p, BigInt(100000));
    CHECK(report.best_psi == 0);
    CHECK(report.optimal_allocations[0] == std::vector<long long>{3, 3, 3, 3});
}

TEST_CASE("brute_force_optimal truncates budgets above n*F") {
    const Problem p = make_problem(3, 2, 2, 100);
    const BruteForceReport report = brute_force_optimal(p, BigInt(100000));
    CHECK(report.best_psi == 0);
    REQUIRE(report.optimal_allocations.size() == 1);
    CHECK(report.optimal_allocations[0] == std::vector<long long>{2, 2, 2});
}

TEST_CASE("brute_force_optimal refuses oversized spaces and reports the bound") {
    const Problem p = make_problem(10, 2, 10, 45);
    CHECK_THROWS_AS(brute_force_optimal(p, BigInt(10)), SearchSpaceTooLarge);
    try {
        brute_force_optimal(p, BigInt(10));
    } catch (const SearchSpaceTooLarge& e) {
        CHECK(e.bound() == "5095");
    }
}

TEST_CASE("dominance reductions lose nothing against unreduced enumeration") {
    // Unreduced: every ordered composition of T, entries uncapped.
    const auto unreduced_best = [](const Problem& p) {
        long long best = -1;
        std::vector<long long> counts(static_cast<size_t>(p.n), 0);
        std::function<void(int, long long)> walk = [&](int node, long long left) {
            if (node == p.n - 1) {
                counts[static_cast<size_t>(node)] = left;
                const long long v = naive_psi(counts, p.r, p.F);
                if (best < 0 || v < best) best = v;
                return;
            }
            for (long long x = 0; x <= left; ++x) {
                counts[static_cast<size_t>(node)] = x;
                walk(node + 1, left - x);
            }
        };
        walk(0, p.T);
        return best;
    };

    for (const auto& [n, r, F, T] : std::vector<std::array<long long, 4>>{
             {4, 2, 2, 5}, {5, 2, 3, 6}, {5, 3, 2, 4}, {3, 2, 4, 9}, {4, 3, 3, 7}}) {
        const Problem p = make_problem(static_cast<int>(n), static_cast<int>(r),
                                       static_cast<int>(F), T);
        const BruteForceReport report = brute_force_optimal(p, BigInt(1000000));
        CHECK(report.best_psi == unreduced_best(p));
    }
}

TEST_CASE("every reported optimum evaluates to best_psi") {
    const Problem p = make_problem(6, 2, 4, 9);
    const BruteForceReport report = brute_force_optimal(p, BigInt(1000000));
    CHECK(!report.optimal_allocations.empty());
    for (const auto& counts : report.optimal_allocations) {
        CHECK(failing_subsets_of_counts(counts, p.r, p.F) == report.best_psi);
        CHECK(std::is_sorted(counts.rbegin(), counts.rend()));
    }
}

TEST_CASE("best_symmetric_exact picks the paper transition at T=44 vs 45") {
    const auto [j44, res44] = best_symmetric_exact(make_problem(10, 2, 10, 44));
    CHECK(j44 == 10);
    CHECK(res44.success == Rational(2, 3));

    const auto [j45, res45] = best_symmetric_exact(make_problem(10, 2, 10, 45));
    CHECK(j45 == 5);
    CHECK(res45.success == Rational(4, 5));
}

TEST_CASE("best_symmetric_exact concentrates when T equals F") {
    const auto [j, res] = best_symmetric_exact(make_problem(10, 2, 4, 4));
    CHECK(j == 4);
    CHECK(res.psi == binomial(10, 2) - binomial(9, 1));

    // n == r: every feasible plan succeeds; the tie goes to the larger j.
    const auto [jr, rr] = best_symmetric_exact(make_problem(3, 3, 2, 2));
    CHECK(jr == 2);
    CHECK(rr.psi == 0);
}

TEST_CASE("best_symmetric_exact rejects budgets beyond total capacity") {
    CHECK_THROWS_AS(best_symmetric_exact(make_problem(2, 1, 1, 3)), DoesNotFit);
}

TEST_CASE("brute force is never beaten by a symmetric plan") {
    for (int n = 2; n <= 5; ++n) {
        for (int F = 1; F <= 3; ++F) {
            for (long long T = F; T <= 2LL * n * F && T <= 10; ++T) {
                const Problem p = make_problem(n, 2 > n ? n : 2, F, T);
                const BigInt brute = brute_force_optimal(p, BigInt(100000)).best_psi;
                if (p.T / p.F > p.n) continue;  // no symmetric plan fits
                const auto [j, res] = best_symmetric_exact(p);
                CHECK(brute <= res.psi);
            }
        }
    }
}
