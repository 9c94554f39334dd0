#include "storalloc/exact.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace storalloc {

namespace {

// dp indexed by [chosen][capped sum]; flattened to keep the hot loop simple.
class PsiTable {
public:
    PsiTable(int r, int F) : r_(r), F_(F), cells_((r + 1) * (F + 1)) {}
    BigInt& at(int chosen, int sum) { return cells_[chosen * (F_ + 1) + sum]; }

private:
    int r_;
    int F_;
    std::vector<BigInt> cells_;

public:
    int r() const { return r_; }
    int F() const { return F_; }
};

}  // namespace

BigInt failing_subsets_of_counts(std::span<const long long> counts, int r, int F) {
    // Multiplicity per clamped value.
    std::map<int, int> groups;
    for (long long x : counts) {
        const int v = static_cast<int>(std::min<long long>(x, F));
        ++groups[v];
    }

    PsiTable dp(r, F);
    dp.at(0, 0) = 1;
    int processed = 0;
    for (const auto& [value, mult] : groups) {
        PsiTable next(r, F);
        const int reachable = std::min(processed, r);
        for (int chosen = 0; chosen <= reachable; ++chosen) {
            for (int sum = 0; sum <= F; ++sum) {
                const BigInt& ways = dp.at(chosen, sum);
                if (ways == 0) continue;
                const int take_max = std::min(mult, r - chosen);
                for (int take = 0; take <= take_max; ++take) {
                    const int new_sum =
                        std::min<long long>(sum + static_cast<long long>(take) * value, F);
                    next.at(chosen + take, new_sum) += ways * binomial(mult, take);
                }
            }
        }
        dp = std::move(next);
        processed += mult;
    }

    BigInt psi = 0;
    for (int sum = 0; sum < F; ++sum) psi += dp.at(r, sum);
    return psi;
}

ExactResult count_failing_subsets(const Allocation& alloc, const Problem& problem) {
    ExactResult result;
    result.psi = failing_subsets_of_counts(alloc.counts, problem.r, problem.F);
    result.total = binomial(problem.n, problem.r);
    result.success = Rational(1) - Rational(result.psi, result.total);
    return result;
}

Rational ordered_failure_probability(const Allocation& alloc, const Problem& problem) {
    const BigInt psi = failing_subsets_of_counts(alloc.counts, problem.r, problem.F);
    return Rational(psi, binomial(problem.n, problem.r));
}

BigInt bounded_partition_count(long long total, int max_part, int max_len) {
    if (total < 0) return 0;
    if (total == 0) return 1;
    if (max_part < 1 || max_len < 1) return 0;
    // count[l][s]: partitions of s into at most l parts, parts <= p; built up
    // one part value at a time.
    const size_t S = static_cast<size_t>(total);
    std::vector<std::vector<BigInt>> count(
        static_cast<size_t>(max_len) + 1, std::vector<BigInt>(S + 1));
    for (int l = 0; l <= max_len; ++l) count[l][0] = 1;
    for (int p = 1; p <= max_part; ++p) {
        // Allow any number of additional parts equal to p.
        for (int l = 1; l <= max_len; ++l) {
            for (long long s = p; s <= total; ++s) {
                count[l][s] += count[l - 1][s - p];
            }
        }
    }
    return count[max_len][S];
}

namespace {

void enumerate_partitions(long long remaining, int max_part, int slots_left,
                          std::vector<long long>& prefix,
                          const std::function<void(const std::vector<long long>&)>& visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    if (slots_left == 0) return;
    const long long cap = std::min<long long>(remaining, max_part);
    for (long long part = cap; part >= 1; --part) {
        // Parts are non-increasing; prune when even filling all slots with
        // `part` cannot reach the remaining sum.
        if (part * slots_left < remaining) break;
        prefix.push_back(part);
        enumerate_partitions(remaining - part, static_cast<int>(part), slots_left - 1,
                             prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

BruteForceReport brute_force_optimal(const Problem& problem, const BigInt& max_space) {
    const long long target =
        std::min<long long>(problem.T, static_cast<long long>(problem.n) * problem.F);

    BruteForceReport report;
    report.search_space_size = bounded_partition_count(target, problem.F, problem.n);
    if (report.search_space_size > max_space) {
        throw SearchSpaceTooLarge(
            "brute force space " + report.search_space_size.str() + " exceeds limit " +
                max_space.str(),
            report.search_space_size.str());
    }

    bool have_best = false;
    std::vector<long long> prefix;
    enumerate_partitions(
        target, problem.F, problem.n, prefix,
        [&](const std::vector<long long>& parts) {
            std::vector<long long> counts = parts;
            counts.resize(static_cast<size_t>(problem.n), 0);
            const BigInt psi = failing_subsets_of_counts(counts, problem.r, problem.F);
            if (!have_best || psi < report.best_psi) {
                have_best = true;
                report.best_psi = psi;
                report.optimal_allocations.clear();
                report.optimal_allocations.push_back(std::move(counts));
            } else if (psi == report.best_psi) {
                report.optimal_allocations.push_back(std::move(counts));
            }
        });
    return report;
}

std::pair<int, ExactResult> best_symmetric_exact(const Problem& problem) {
    bool have_best = false;
    int best_j = 0;
    ExactResult best;
    for (int j = 1; j <= problem.F; ++j) {
        if (problem.T / j > problem.n) continue;
        const Allocation alloc = symmetric_allocation(problem, j);
        ExactResult result = count_failing_subsets(alloc, problem);
        // Ties go to the larger j: fewer non-empty nodes for equal success.
        if (!have_best || result.psi <= best.psi) {
            have_best = true;
            best_j = j;
            best = std::move(result);
        }
    }
    if (!have_best) {
        throw DoesNotFit("budget T=" + std::to_string(problem.T) +
                         " exceeds total capacity n*F=" +
                         std::to_string(static_cast<long long>(problem.n) * problem.F) +
                         "; no symmetric allocation fits");
    }
    return {best_j, best};
}

}  // namespace storalloc
