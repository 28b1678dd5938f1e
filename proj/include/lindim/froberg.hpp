#pragma once

#include "lindim/bigint.hpp"
#include "lindim/system.hpp"

#include <optional>
#include <vector>

namespace lindim {

/// Power-series expansion of prod (1 - t^a_i) / (1 - t)^(n+1) together with
/// its prefix-positivity truncation: coefficients are kept while every
/// earlier raw coefficient is positive and are zeroed from the first
/// non-positive one onward.
struct TruncatedSeries {
    std::vector<BigInt> raw;        // a_0 .. a_D
    std::vector<BigInt> truncated;  // b_0 .. b_D
    std::optional<int> truncation_index;
};

/// Exact expansion to order D (>= 0) followed by the truncation rule.
TruncatedSeries truncated_series(int n, const std::vector<int>& gen_degrees, int D);

/// Series-predicted dimension of the system: the fat points correspond to
/// an ideal generated by powers of general linear forms with exponents
/// d+1-m_i, read off in degree d. Returns b_d - 1. Requires every m_i <= d.
BigInt froberg_prediction(const LinearSystem& sys);

}  // namespace lindim
