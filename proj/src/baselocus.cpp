#include "lindim/baselocus.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindim {

long long k_value(const LinearSystem& sys, const MultiIndex& index) {
    validate_multi_index(index, sys.s());
    long long sum = 0;
    for (int i : index.indices)
        sum += sys.mults[i - 1];
    long long r = index.r();
    long long raw = sum - r * static_cast<long long>(sys.d);
    return std::max(raw, 0LL);
}

namespace detail {

void walk_subsets(const LinearSystem& sys, int max_size,
                  const std::function<void(const std::vector<int>&, int, long long)>& visit) {
    const int s = sys.s();
    const int d = sys.d;
    std::vector<int> stack;
    if (max_size < 0)
        max_size = s;

    std::function<void(int, long long)> rec = [&](int next, long long K) {
        visit(stack, static_cast<int>(stack.size()) - 1, K);
        if (static_cast<int>(stack.size()) == max_size)
            return;
        // Multiplicities are sorted non-increasing, so once the next
        // candidate is at most d the whole remaining tail is too and K can
        // only decrease from here on.
        if (K <= 0 && (next > s || sys.mults[next - 1] <= d))
            return;
        for (int i = next; i <= s; ++i) {
            stack.push_back(i);
            rec(i + 1, K + sys.mults[i - 1] - d);
            stack.pop_back();
        }
    };
    rec(1, sys.d);
}

}  // namespace detail

BaseLocusReport enumerate_base_cycles(const LinearSystem& sys) {
    BaseLocusReport report;
    report.mult_exceeds_degree = !sys.mults.empty() && sys.mults.front() > sys.d;
    const bool exact = sys.s() <= sys.n + 2;
    const int max_size = std::min(sys.n, sys.s());

    detail::walk_subsets(sys, max_size, [&](const std::vector<int>& indices, int r, long long K) {
        if (r < 0 || K <= 0)
            return;
        report.cycles.push_back(BaseCycle{MultiIndex{indices}, r, K, exact});
        report.rbar = std::max(report.rbar, r);
    });

    std::sort(report.cycles.begin(), report.cycles.end(),
              [](const BaseCycle& a, const BaseCycle& b) {
                  if (a.r != b.r)
                      return a.r < b.r;
                  return a.index_set.indices < b.index_set.indices;
              });
    return report;
}

SplitResult split_hyperplanes(const LinearSystem& sys) {
    if (sys.s() < sys.n)
        throw std::invalid_argument("split_hyperplanes: needs at least n points");

    SplitResult result;
    result.residual = to_picard(sys);

    detail::walk_subsets(sys, sys.n, [&](const std::vector<int>& indices, int r, long long K) {
        if (r != sys.n - 1 || K <= 0)
            return;
        result.splits.push_back(HyperplaneSplit{MultiIndex{indices}, K});
        result.residual.degree -= K;
        for (int i : indices)
            result.residual.mults[i - 1] -= K;
    });

    std::sort(result.splits.begin(), result.splits.end(),
              [](const HyperplaneSplit& a, const HyperplaneSplit& b) {
                  return a.index_set.indices < b.index_set.indices;
              });

    result.non_effective = result.residual.degree < 0 ||
                           std::any_of(result.residual.mults.begin(), result.residual.mults.end(),
                                       [](long long m) { return m < 0; });
    return result;
}

ConeReduction reduce_cones(const LinearSystem& sys) {
    ConeReduction result;
    if (sys.d == 0) {
        result.system = sys;
        return result;
    }
    const int cone_points =
        static_cast<int>(std::count(sys.mults.begin(), sys.mults.end(), sys.d));
    if (cone_points >= sys.n + 1) {
        result.empty = true;
        result.removed = cone_points;
        return result;
    }
    result.removed = std::min(cone_points, sys.n - 1);
    std::vector<int> rest = sys.mults;
    for (int k = 0; k < result.removed; ++k)
        rest.erase(std::find(rest.begin(), rest.end(), sys.d));
    result.system = canonicalize(sys.n - result.removed, sys.d, std::move(rest));
    return result;
}

}  // namespace lindim
