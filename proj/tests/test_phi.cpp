#include <doctest.h>

#include <cmath>
#include <vector>

#include "storalloc/phi.hpp"
#include "storalloc/sampler.hpp"

using namespace storalloc;

TEST_CASE("phi of the (1/4, 1/2, 1/4) profile at r=2 keeps degrees below 2") {
    const std::vector<Rational> alpha = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    CHECK(phi_from_alpha(alpha, 2, 2) == Rational(5, 16));
}

TEST_CASE("phi degenerate profiles") {
    // All mass at degree F: the truncation removes everything.
    const std::vector<Rational> full = {0, 0, 0, 1};
    CHECK(phi_from_alpha(full, 3, 3) == 0);
    CHECK(phi_from_alpha(full, 1, 3) == 0);

    // All mass at degree 0: nothing is ever removed.
    const std::vector<Rational> empty = {1, 0, 0, 0};
    CHECK(phi_from_alpha(empty, 4, 3) == 1);
}

TEST_CASE("phi_enumerate on the hand-counted example") {
    const Problem p = make_problem(4, 2, 2, 4);
    const Allocation alloc = make_allocation({2, 1, 1, 0}, p);
    CHECK(phi_enumerate(alloc, p) == Rational(5, 16));
    CHECK(phi_from_profile(alpha_of_allocation(alloc, p), p.r) == Rational(5, 16));
}

TEST_CASE("phi_enumerate trivial cases") {
    const Problem full = make_problem(3, 2, 2, 6);
    CHECK(phi_enumerate(make_allocation({2, 2, 2}, full), full) == 0);

    const Problem single = make_problem(2, 1, 3, 3);
    CHECK(phi_enumerate(make_allocation({3, 0}, single), single) == Rational(1, 2));
}

TEST_CASE("phi_enumerate refuses oversized instances") {
    const Problem p = make_problem(200, 4, 2, 2);  // 200^4 = 1.6e9 draws
    std::vector<long long> counts(200, 0);
    counts[0] = 2;
    CHECK_THROWS_AS(phi_enumerate(make_allocation(counts, p), p), InstanceTooLarge);
}

TEST_CASE("generating-function phi equals enumeration on small instances") {
    // Exhaustive over symmetric plans, n <= 7, r <= 3.
    for (int n = 1; n <= 7; ++n) {
        for (int r = 1; r <= std::min(n, 3); ++r) {
            for (int F = 1; F <= 4; ++F) {
                for (long long T = F; T <= static_cast<long long>(n) * F; ++T) {
                    const Problem p = make_problem(n, r, F, T);
                    for (int j = 1; j <= F; ++j) {
                        if (T / j > n) continue;
                        const Allocation alloc = symmetric_allocation(p, j);
                        CHECK(phi_from_profile(alpha_of_allocation(alloc, p), r) ==
                              phi_enumerate(alloc, p));
                    }
                }
            }
        }
    }
    // Plus random allocations.
    const Problem p = make_problem(6, 3, 5, 14);
    for (std::uint64_t i = 0; i < 60; ++i) {
        const Allocation alloc = random_allocation(p, 5150, i);
        CHECK(phi_from_profile(alpha_of_allocation(alloc, p), p.r) ==
              phi_enumerate(alloc, p));
    }
}

TEST_CASE("floating phi tracks the rational path to 1e-12 relative") {
    const Problem p = make_problem(9, 4, 6, 21);
    for (std::uint64_t i = 0; i < 40; ++i) {
        const Allocation alloc = random_allocation(p, 31337, i);
        const AlphaProfile profile = alpha_of_allocation(alloc, p);
        std::vector<double> alpha_fp;
        alpha_fp.reserve(profile.alpha.size());
        for (const Rational& a : profile.alpha) alpha_fp.push_back(to_double(a));
        const double fast = phi_from_alpha_fast(alpha_fp, p.r, p.F);
        const double exact = to_double(phi_from_profile(profile, p.r));
        CHECK(std::fabs(fast - exact) <= 1e-12 * std::max(1.0, std::fabs(exact)));
    }
}

TEST_CASE("tv_exact closed form and bound") {
    CHECK(tv_exact(10, 3) == Rational(7, 25));
    CHECK(tv_bound(10, 3) == Rational(2, 5));

    CHECK(tv_exact(7, 1) == 0);
    CHECK(tv_bound(7, 1) == 0);

    // Bound is tight at r = 2.
    CHECK(tv_exact(10, 2) == Rational(1, 10));
    CHECK(tv_bound(10, 2) == Rational(1, 10));
}

TEST_CASE("tv_exact <= tv_bound whenever (r-1)^2 <= n") {
    for (int n = 1; n <= 60; ++n) {
        for (int r = 1; r <= n; ++r) {
            if ((r - 1) * (r - 1) > n) continue;
            CHECK(tv_exact(n, r) <= tv_bound(n, r));
        }
    }
}

TEST_CASE("sandwich holds on the worked example") {
    const Problem p = make_problem(4, 2, 2, 4);
    const SandwichReport report = sandwich_check(make_allocation({2, 1, 1, 0}, p), p);
    CHECK(report.scaled_psi == Rational(1, 4));
    CHECK(report.phi == Rational(5, 16));
    CHECK(report.bound == Rational(1, 2));
    CHECK(report.slack_upper == Rational(1, 16));
    CHECK(report.lower_holds);
    CHECK(report.upper_holds);
}

TEST_CASE("sandwich is an equality pair when every node is full") {
    const Problem p = make_problem(5, 3, 2, 10);
    const SandwichReport report =
        sandwich_check(make_allocation({2, 2, 2, 2, 2}, p), p);
    CHECK(report.phi == 0);
    CHECK(report.scaled_psi == 0);
    CHECK(report.lower_holds);
    CHECK(report.upper_holds);
}

TEST_CASE("sandwich holds for random allocations at n=20, r=4, F=8") {
    const Problem p = make_problem(20, 4, 8, 37);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const Allocation alloc = random_allocation(p, 4242, i);
        const SandwichReport report = sandwich_check(alloc, p);
        CHECK(report.lower_holds);
        CHECK(report.upper_holds);
    }
}
