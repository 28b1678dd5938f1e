#include "lindim/dimensions.hpp"

#include "lindim/baselocus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace lindim {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::non_special: return "non-special";
        case Classification::linearly_non_special_but_special:
            return "linearly-non-special-but-special";
        case Classification::linearly_special: return "linearly-special";
        case Classification::empty_system: return "empty";
    }
    return "?";
}

BigInt virtual_dimension(const LinearSystem& sys) {
    BigInt v = binomial(sys.n + sys.d, sys.n);
    for (int m : sys.mults)
        v -= binomial(sys.n + m - 1, sys.n);
    return v - 1;
}

BigInt expected_dimension(const LinearSystem& sys) {
    BigInt v = virtual_dimension(sys);
    return v < -1 ? BigInt(-1) : v;
}

BigInt linear_virtual_dimension(const LinearSystem& sys) {
    BigInt total = 0;
    detail::walk_subsets(sys, -1, [&](const std::vector<int>&, int r, long long K) {
        long long k = std::max(K, 0LL);
        if (k <= r)
            return;  // binomial term vanishes
        BigInt term = binomial(sys.n + k - r - 1, sys.n);
        if ((r + 1) % 2 == 0)
            total += term;
        else
            total -= term;
    });
    return total - 1;
}

namespace {

// Distinct canonical systems obtained by dropping points. Multiplicity
// multisets collapse hard here: only distinct sub-multisets matter.
bool deletion_universe_has_negative(const LinearSystem& sys) {
    std::map<int, int> counts;
    for (int m : sys.mults)
        counts[m]++;
    std::vector<std::pair<int, int>> values(counts.begin(), counts.end());

    std::vector<int> kept;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == values.size()) {
            LinearSystem candidate = canonicalize(sys.n, sys.d, kept);
            return linear_virtual_dimension(candidate) < 0;
        }
        auto [value, avail] = values[pos];
        for (int take = avail; take >= 0; --take) {
            kept.insert(kept.end(), take, value);
            if (rec(pos + 1))
                return true;
            kept.resize(kept.size() - take);
        }
        return false;
    };
    return rec(0);
}

bool exhaustive_universe_has_negative(const LinearSystem& sys) {
    if (sys.s() > 6)
        throw std::invalid_argument(
            "linear_expected_dimension: exhaustive containment policy is limited to s <= 6");
    std::set<LinearSystem> seen;
    std::vector<int> lowered(sys.mults.begin(), sys.mults.end());
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == lowered.size()) {
            LinearSystem candidate = canonicalize(sys.n, sys.d, lowered);
            if (!seen.insert(candidate).second)
                return false;
            return linear_virtual_dimension(candidate) < 0;
        }
        for (int v = sys.mults[pos]; v >= 0; --v) {
            lowered[pos] = v;
            if (rec(pos + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

BigInt linear_expected_dimension(const LinearSystem& sys, ContainmentPolicy policy) {
    bool negative_container = policy == ContainmentPolicy::deletion
                                  ? deletion_universe_has_negative(sys)
                                  : exhaustive_universe_has_negative(sys);
    if (negative_container)
        return -1;
    BigInt lv = linear_virtual_dimension(sys);
    return lv < -1 ? BigInt(-1) : lv;
}

Classification classify(const LinearSystem& sys, const BigInt& actual,
                        ContainmentPolicy policy) {
    if (actual < -1)
        throw std::invalid_argument("classify: actual dimension must be >= -1");
    BigInt edim = expected_dimension(sys);
    BigInt ldim = linear_expected_dimension(sys, policy);
    if (actual != ldim)
        return Classification::linearly_special;
    if (actual == -1)
        return Classification::empty_system;
    if (actual == edim)
        return Classification::non_special;
    return Classification::linearly_non_special_but_special;
}

DimensionReport dimension_report(const LinearSystem& sys, std::optional<long long> oracle_dim,
                                 ContainmentPolicy policy) {
    DimensionReport report;
    report.vdim = virtual_dimension(sys);
    report.edim = expected_dimension(sys);
    report.lvdim = linear_virtual_dimension(sys);
    report.ldim = linear_expected_dimension(sys, policy);
    report.oracle_dim = oracle_dim;
    report.predicted = !oracle_dim.has_value();
    BigInt actual = oracle_dim ? BigInt(*oracle_dim) : report.ldim;
    report.classification = classify(sys, actual, policy);
    return report;
}

N3Condition n3_condition(const LinearSystem& sys) {
    N3Condition cond;
    cond.s_d = static_cast<int>(std::count(sys.mults.begin(), sys.mults.end(), sys.d));
    if (sys.s() < sys.n + 3)
        return cond;  // out of scope
    cond.in_scope = true;
    cond.b = std::min<long long>(sys.n - cond.s_d, sys.s() - sys.n - 2);
    cond.satisfied = sys.mult_sum() <= static_cast<long long>(sys.n) * sys.d + cond.b;
    return cond;
}

ChandlerDecomposition chandler_decomposition(const LinearSystem& sys, int pivot) {
    if (pivot < 1 || pivot > sys.s())
        throw std::out_of_range("chandler_decomposition: pivot outside 1..s");
    if (sys.n < 2)
        throw std::invalid_argument("chandler_decomposition: needs ambient dimension >= 2");
    const int k = sys.mults[pivot - 1];
    if (k < 1)
        throw std::invalid_argument("chandler_decomposition: pivot multiplicity must be >= 1");
    for (int i = 0; i < sys.s(); ++i)
        if (i != pivot - 1 && sys.mults[i] > sys.d - 1)
            throw std::invalid_argument(
                "chandler_decomposition: non-pivot multiplicities must be at most d-1");

    std::vector<int> lowered = sys.mults;
    lowered[pivot - 1] = k - 1;

    std::vector<int> trace;
    for (int i = 0; i < sys.s(); ++i) {
        if (i == pivot - 1)
            continue;
        int c = std::max(k + sys.mults[i] - sys.d - 1, 0);
        if (c > 0)
            trace.push_back(c);
    }

    return ChandlerDecomposition{canonicalize(sys.n, sys.d, std::move(lowered)),
                                 canonicalize(sys.n - 1, k - 1, std::move(trace))};
}

}  // namespace lindim
