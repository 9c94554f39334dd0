#include "storalloc/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace storalloc {

std::string method_name(Method method) {
    switch (method) {
        case Method::binomial_phi: return "binomial_phi";
        case Method::hypergeometric_exact: return "hypergeometric_exact";
    }
    return "unknown";
}

SymmetricPlan make_plan(const Problem& problem, int j, Method method) {
    if (j < 1 || j > problem.F) {
        throw InvalidChunk("chunk size j=" + std::to_string(j) + " outside [1.." +
                           std::to_string(problem.F) + "]");
    }
    SymmetricPlan plan;
    plan.j = j;
    const long long chunks = problem.T / j;
    plan.capped = chunks > problem.n;
    plan.m = plan.capped ? problem.n : chunks;
    plan.alpha_j = Rational(plan.m, problem.n);
    plan.method = method;
    return plan;
}

Rational phi_symmetric_exact(int j, const Problem& problem) {
    if (j < 1 || j > problem.F) {
        throw InvalidChunk("chunk size j=" + std::to_string(j) + " outside [1.." +
                           std::to_string(problem.F) + "]");
    }
    const Rational alpha(problem.T, static_cast<long long>(problem.n) * j);
    if (alpha > 1) {
        throw InfeasibleProfile("alpha_j = " + fraction_string(alpha) +
                                " > 1 for j=" + std::to_string(j));
    }
    if (static_cast<long long>(problem.r) * j < problem.F) {
        // The truncation removes nothing: every term of the expansion has
        // degree below F.
        return Rational(1);
    }
    const int cutoff = (problem.F - 1) / j;
    const Rational complement = Rational(1) - alpha;
    Rational sum = 0;
    for (int i = 0; i <= cutoff; ++i) {
        Rational term(binomial(problem.r, i));
        for (int k = 0; k < i; ++k) term *= alpha;
        for (int k = 0; k < problem.r - i; ++k) term *= complement;
        sum += term;
    }
    return sum;
}

double phi_symmetric(int j, const Problem& problem) {
    return to_double(phi_symmetric_exact(j, problem));
}

double phi_symmetric_alpha(int j, double alpha_j, int r, int F) {
    if (static_cast<long long>(r) * j < F) return 1.0;
    const int cutoff = (F - 1) / j;
    double sum = 0.0;
    for (int i = 0; i <= cutoff; ++i) {
        sum += to_double(Rational(binomial(r, i))) * std::pow(alpha_j, i) *
               std::pow(1.0 - alpha_j, r - i);
    }
    return sum;
}

std::vector<int> candidate_js(int F, int r) {
    std::set<int, std::greater<int>> values;
    for (int i = 1; i <= r; ++i) {
        const int a = (F + i - 1) / i;
        const int b = (F - 1 + i - 1) / i;
        if (a >= 1 && a <= F) values.insert(a);
        if (b >= 1 && b <= F) values.insert(b);
    }
    return {values.begin(), values.end()};
}

Rational hypergeo_success_exact(const SymmetricPlan& plan, const Problem& problem) {
    const int i_min = (problem.F + plan.j - 1) / plan.j;
    BigInt successful = 0;
    for (int d = i_min; d <= problem.r; ++d) {
        successful += binomial(plan.m, d) * binomial(problem.n - plan.m, problem.r - d);
    }
    return Rational(successful, binomial(problem.n, problem.r));
}

double hypergeo_success(const SymmetricPlan& plan, const Problem& problem) {
    return to_double(hypergeo_success_exact(plan, problem));
}

namespace {

SymmetricOptimum optimize_over(const Problem& problem, const std::vector<int>& js) {
    SymmetricOptimum best;
    bool have_best = false;
    for (int j : js) {
        const SymmetricPlan plan = make_plan(problem, j, Method::hypergeometric_exact);
        Rational success = hypergeo_success_exact(plan, problem);
        const bool better =
            !have_best || success > best.success_exact ||
            (success == best.success_exact && j < best.j_star);
        if (better) {
            have_best = true;
            best.j_star = j;
            best.success_exact = std::move(success);
            best.plan = plan;
        }
    }
    best.success = to_double(best.success_exact);
    best.row = SweepRow{problem.T, Rational(problem.T, problem.F), best.j_star,
                        best.success, Method::hypergeometric_exact};
    return best;
}

}  // namespace

SymmetricOptimum optimize_symmetric(const Problem& problem, ScanMode mode) {
    std::vector<int> js;
    if (mode == ScanMode::candidates_only) {
        js = candidate_js(problem.F, problem.r);
    } else {
        js.resize(static_cast<size_t>(problem.F));
        for (int j = 1; j <= problem.F; ++j) js[static_cast<size_t>(j - 1)] = j;
    }
    return optimize_over(problem, js);
}

std::vector<SweepRow> sweep_budget(int n, int r, int F, long long t_min, long long t_max,
                                   long long step, ScanMode mode) {
    if (step < 1) throw InvalidParameter("t-step must be >= 1");
    if (t_min < F) throw InvalidParameter("t-min must be >= F");
    std::vector<SweepRow> rows;
    for (long long T = t_min; T <= t_max; T += step) {
        const Problem problem = make_problem(n, r, F, T);
        rows.push_back(optimize_symmetric(problem, mode).row);
    }
    return rows;
}

std::vector<PerJRow> sweep_budget_per_j(int n, int r, int F, long long t_min,
                                        long long t_max, long long step) {
    if (step < 1) throw InvalidParameter("t-step must be >= 1");
    if (t_min < F) throw InvalidParameter("t-min must be >= F");
    // Curves for the per-node budgets ceil(F/i), one per i in [r].
    std::set<int, std::greater<int>> js;
    for (int i = 1; i <= r; ++i) js.insert((F + i - 1) / i);
    std::vector<PerJRow> rows;
    for (long long T = t_min; T <= t_max; T += step) {
        const Problem problem = make_problem(n, r, F, T);
        for (int j : js) {
            const SymmetricPlan plan = make_plan(problem, j);
            rows.push_back(PerJRow{T, Rational(T, F), j,
                                   hypergeo_success(plan, problem)});
        }
    }
    return rows;
}

}  // namespace storalloc
