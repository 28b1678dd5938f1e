#include "lindim/cohomology.hpp"

#include "lindim/baselocus.hpp"
#include "lindim/dimensions.hpp"
#include "lindim/picard.hpp"

#include <algorithm>

namespace lindim {

StrictTransform strict_transform(const LinearSystem& sys, int level) {
    const int max_level = std::min(sys.n, sys.s()) - 1;
    if (level < 0 || level > max_level)
        throw std::out_of_range("strict_transform: level outside 0..min(n,s)-1");
    StrictTransform st;
    st.level = level;
    st.base = sys;
    for (const BaseCycle& cycle : enumerate_base_cycles(sys).cycles)
        if (cycle.r <= level)
            st.k_coeffs.emplace(cycle.index_set.indices, cycle.k);
    return st;
}

namespace {

// S_rho = sum over all (rho+1)-element index sets of binom(n + k - rho - 1, n).
// Entries with k <= rho contribute nothing.
std::vector<BigInt> level_sums(const LinearSystem& sys, const BaseLocusReport& report) {
    const int max_level = std::min(sys.n, sys.s()) - 1;
    std::vector<BigInt> sums(std::max(max_level + 1, 0), BigInt(0));
    for (const BaseCycle& cycle : report.cycles)
        if (cycle.k > cycle.r)
            sums[cycle.r] += binomial(sys.n + cycle.k - cycle.r - 1, sys.n);
    return sums;
}

void require_table_scope(const LinearSystem& sys) {
    if (sys.s() > sys.n + 2)
        throw ScopeError("cohomology table formulas require at most n+2 points");
    if (effectivity(sys) != Effectivity::nonempty)
        throw EmptySystemError("cohomology table formulas require a non-empty system");
}

}  // namespace

CohomologyTable cohomology_table(const LinearSystem& sys) {
    require_table_scope(sys);

    BaseLocusReport report = enumerate_base_cycles(sys);
    std::vector<BigInt> sums = level_sums(sys, report);

    CohomologyTable table;
    table.rbar = report.rbar;
    table.h0 = linear_expected_dimension(sys) + 1;
    const int max_level = std::min(sys.n, sys.s()) - 1;
    for (int r = 0; r <= max_level; ++r) {
        BigInt h = 0;
        for (int rho = r + 1; rho <= report.rbar; ++rho) {
            if ((rho - r - 1) % 2 == 0)
                h += sums[rho];
            else
                h -= sums[rho];
        }
        table.levels.push_back(CohomologyLevel{r, std::move(h)});
    }
    return table;
}

BigInt h1_speciality(const LinearSystem& sys) {
    require_table_scope(sys);
    BaseLocusReport report = enumerate_base_cycles(sys);
    std::vector<BigInt> sums = level_sums(sys, report);
    BigInt h1 = 0;
    for (int r = 1; r <= report.rbar; ++r) {
        if ((r - 1) % 2 == 0)
            h1 += sums[r];
        else
            h1 -= sums[r];
    }
    return h1;
}

BigInt euler_characteristic(const LinearSystem& sys) {
    return linear_virtual_dimension(sys) + 1;
}

BigInt cones_h1(int n, int d, int s) {
    if (s < 0 || s > n + 1)
        throw ScopeError("cones_h1: requires 0 <= s <= n+1");
    BigInt h1 = 0;
    for (int i = 2; i <= s; ++i) {
        BigInt term = binomial(n + d - i, n) * binomial(s, i);
        if (i % 2 == 0)
            h1 += term;
        else
            h1 -= term;
    }
    return h1;
}

BigInt cones_h0(int n, int d, int s) {
    if (s < 0 || s > n + 1)
        throw ScopeError("cones_h0: requires 0 <= s <= n+1");
    if (s == n + 1)
        return 0;
    return binomial(n - s + d, d);
}

}  // namespace lindim
