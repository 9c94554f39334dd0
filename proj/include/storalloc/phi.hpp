#pragma once

#include <span>
#include <vector>

#include "storalloc/exact.hpp"
#include "storalloc/model.hpp"
#include "storalloc/numeric.hpp"

namespace storalloc {

// phi: the failure probability when the r nodes are drawn uniformly WITH
// repetition. Computed as the degree-truncated r-th power of the profile's
// probability generating function, evaluated at u = 1. Truncating to degrees
// < F after every multiplication is safe: coefficients are non-negative and a
// product term that reaches degree >= F can never fall back below F.
Rational phi_from_alpha(std::span<const Rational> alpha, int r, int F);

Rational phi_from_profile(const AlphaProfile& profile, int r);

// Floating-point fast path for sweeps; validated against the rational path
// to 1e-12 relative in the test suite.
double phi_from_alpha_fast(std::span<const double> alpha, int r, int F);

// Direct count over all n^r ordered draws with repetition. Oracle only;
// throws InstanceTooLarge when n^r > 10^7.
Rational phi_enumerate(const Allocation& alloc, const Problem& problem);

// Total variation between the uniform laws on [n]^r and on its
// distinct-entry subset: exactly 1 - n^[r]/n^r, and at most (r-1)^2/n.
Rational tv_exact(int n, int r);
Rational tv_bound(int n, int r);

// Per-allocation two-sided check: the scaled subset count r!*psi/n^r is
// sandwiched between phi - 2(r-1)^2/n and phi.
struct SandwichReport {
    Rational phi;
    Rational scaled_psi;   // r! * psi / n^r
    Rational slack_upper;  // phi - scaled_psi
    Rational bound;        // 2 (r-1)^2 / n
    bool lower_holds = false;  // scaled_psi <= phi
    bool upper_holds = false;  // scaled_psi >= phi - bound
};

SandwichReport sandwich_check(const Allocation& alloc, const Problem& problem);

}  // namespace storalloc
