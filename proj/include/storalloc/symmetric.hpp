#pragma once

#include <string>
#include <vector>

#include "storalloc/model.hpp"
#include "storalloc/numeric.hpp"

namespace storalloc {

enum class Method { binomial_phi, hypergeometric_exact };

std::string method_name(Method method);

// A symmetric plan: m non-empty nodes storing j symbols each. Chunks are
// placed until the budget or the nodes run out, so m = min(floor(T/j), n);
// `capped` marks plans where floor(T/j) > n and the excess budget is
// discarded. For uncapped plans m*j <= T < (m+1)*j.
struct SymmetricPlan {
    int j = 0;
    long long m = 0;
    Rational alpha_j;  // m/n, in (0, 1]
    bool capped = false;
    Method method = Method::hypergeometric_exact;
};

SymmetricPlan make_plan(const Problem& problem, int j,
                        Method method = Method::hypergeometric_exact);

// Binomial-CDF failure probability of the idealized two-point profile with
// the constraint-exact fractional alpha_j = (T/n)/j (not floor(T/j)/n): 1
// when r*j < F, otherwise the CDF of Binomial(r, alpha_j) at floor((F-1)/j).
// Throws InvalidChunk for j outside [1..F] and InfeasibleProfile when
// alpha_j > 1.
Rational phi_symmetric_exact(int j, const Problem& problem);
double phi_symmetric(int j, const Problem& problem);

// Same formula for a free alpha in [0, 1], used for limit comparisons.
double phi_symmetric_alpha(int j, double alpha_j, int r, int F);

// Chunk sizes that can be local minima of the symmetric failure probability:
// union of ceil(F/i) and ceil((F-1)/i) over i in [1..r], clipped to [1..F],
// deduplicated, descending.
std::vector<int> candidate_js(int F, int r);

// Probability that a receiver draws at least ceil(F/j) of the plan's m
// non-empty nodes: hypergeometric tail sum over d, normalized by C(n, r).
// Exact rational; the remainder node of symmetric_allocation is ignored.
Rational hypergeo_success_exact(const SymmetricPlan& plan, const Problem& problem);
double hypergeo_success(const SymmetricPlan& plan, const Problem& problem);

enum class ScanMode { candidates_only, full_scan };

struct SweepRow {
    long long T = 0;
    Rational budget_ratio;  // T/F
    int j_star = 0;
    double success = 0.0;
    Method method = Method::hypergeometric_exact;
};

struct SymmetricOptimum {
    int j_star = 0;
    Rational success_exact;
    double success = 0.0;
    SymmetricPlan plan;
    SweepRow row;
};

// argmax of hypergeo_success over candidate_js (candidates_only) or all of
// [1..F] (full_scan). Success ties break toward the smaller j: on the
// saturated plateau the maximal spread is the representative optimum.
SymmetricOptimum optimize_symmetric(const Problem& problem, ScanMode mode);

// One SweepRow per budget in [t_min..t_max], each via full_scan (or the
// candidate set when asked). Deterministic; rows ordered by T.
std::vector<SweepRow> sweep_budget(int n, int r, int F, long long t_min, long long t_max,
                                   long long step = 1,
                                   ScanMode mode = ScanMode::full_scan);

// Per-chunk-size success curves for figure data.
struct PerJRow {
    long long T = 0;
    Rational budget_ratio;
    int j = 0;
    double success = 0.0;
};

std::vector<PerJRow> sweep_budget_per_j(int n, int r, int F, long long t_min,
                                        long long t_max, long long step = 1);

}  // namespace storalloc
