#include "storalloc/phi.hpp"

#include <algorithm>
#include <numeric>

namespace storalloc {

namespace {

// Truncated product: coefficients of a*b up to degree < F.
template <typename Coeff>
std::vector<Coeff> multiply_truncated(const std::vector<Coeff>& a,
                                      const std::vector<Coeff>& b, int F) {
    std::vector<Coeff> out(std::min<size_t>(F, a.size() + b.size() - 1), Coeff(0));
    for (size_t i = 0; i < a.size() && i < out.size(); ++i) {
        if (a[i] == Coeff(0)) continue;
        for (size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

template <typename Coeff>
Coeff truncated_power_at_one(std::span<const Coeff> alpha, int r, int F) {
    // Base PGF truncated below F; r-1 further truncated multiplications.
    std::vector<Coeff> base(alpha.begin(),
                            alpha.begin() + std::min<size_t>(alpha.size(), F));
    std::vector<Coeff> acc = base;
    for (int step = 1; step < r; ++step) acc = multiply_truncated(acc, base, F);
    Coeff sum(0);
    for (const Coeff& c : acc) sum += c;
    return sum;
}

}  // namespace

Rational phi_from_alpha(std::span<const Rational> alpha, int r, int F) {
    return truncated_power_at_one<Rational>(alpha, r, F);
}

Rational phi_from_profile(const AlphaProfile& profile, int r) {
    const int F = static_cast<int>(profile.alpha.size()) - 1;
    return phi_from_alpha(profile.alpha, r, F);
}

double phi_from_alpha_fast(std::span<const double> alpha, int r, int F) {
    return truncated_power_at_one<double>(alpha, r, F);
}

Rational phi_enumerate(const Allocation& alloc, const Problem& problem) {
    const BigInt draws = ipow(problem.n, problem.r);
    if (draws > 10'000'000) {
        throw InstanceTooLarge("n^r = " + draws.str() + " exceeds the 10^7 oracle limit");
    }

    const int n = problem.n;
    const int r = problem.r;
    long long failures = 0;
    std::vector<int> index(static_cast<size_t>(r), 0);
    while (true) {
        long long sum = 0;
        for (int k = 0; k < r; ++k) sum += alloc.counts[static_cast<size_t>(index[k])];
        if (sum < problem.F) ++failures;
        int pos = r - 1;
        while (pos >= 0 && ++index[pos] == n) index[pos--] = 0;
        if (pos < 0) break;
    }
    return Rational(failures, draws);
}

Rational tv_exact(int n, int r) {
    return Rational(1) - Rational(falling_factorial(n, r), ipow(n, r));
}

Rational tv_bound(int n, int r) {
    return Rational(static_cast<long long>(r - 1) * (r - 1), n);
}

SandwichReport sandwich_check(const Allocation& alloc, const Problem& problem) {
    const BigInt psi = failing_subsets_of_counts(alloc.counts, problem.r, problem.F);

    SandwichReport report;
    report.phi = phi_from_profile(alpha_of_allocation(alloc, problem), problem.r);
    report.scaled_psi = Rational(factorial(problem.r) * psi, ipow(problem.n, problem.r));
    report.slack_upper = report.phi - report.scaled_psi;
    report.bound = 2 * tv_bound(problem.n, problem.r);
    report.lower_holds = report.scaled_psi <= report.phi;
    report.upper_holds = report.scaled_psi >= report.phi - report.bound;
    return report;
}

}  // namespace storalloc
