#pragma once

#include "lindim/bigint.hpp"
#include "lindim/system.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lindim {

/// Search universe for the containing systems inspected by the linear
/// expected dimension: `deletion` drops subsets of points (the default),
/// `exhaustive` additionally lowers multiplicities through every value,
/// which is only tractable for s <= 6.
enum class ContainmentPolicy { deletion, exhaustive };

enum class Classification {
    non_special,
    linearly_non_special_but_special,
    linearly_special,
    empty_system,
};

std::string to_string(Classification c);

struct DimensionReport {
    BigInt vdim = 0;
    BigInt edim = 0;
    BigInt lvdim = 0;
    BigInt ldim = 0;
    std::optional<long long> oracle_dim;
    Classification classification = Classification::non_special;
    bool predicted = false;  // classification used ldim in place of a measured dimension
};

/// Naive dimension count: binom(n+d,n) - sum binom(n+m_i-1,n) - 1.
BigInt virtual_dimension(const LinearSystem& sys);

/// max(vdim, -1).
BigInt expected_dimension(const LinearSystem& sys);

/// Alternating sum over all index subsets, the empty set included, of
/// (-1)^(r+1) binom(n + k - r - 1, n), minus one. Terms with k <= r vanish
/// under the binomial convention, so the pruned enumerator is exact.
BigInt linear_virtual_dimension(const LinearSystem& sys);

/// -1 when some containing system found by the policy has negative linear
/// virtual dimension, otherwise max(lvdim, -1).
BigInt linear_expected_dimension(const LinearSystem& sys,
                                 ContainmentPolicy policy = ContainmentPolicy::deletion);

/// Compares a measured dimension against the expected and linear expected
/// values. `actual` must be >= -1.
Classification classify(const LinearSystem& sys, const BigInt& actual,
                        ContainmentPolicy policy = ContainmentPolicy::deletion);

/// Full report; when `oracle_dim` is absent the classification is the
/// prediction obtained by substituting ldim for the measured value.
DimensionReport dimension_report(const LinearSystem& sys, std::optional<long long> oracle_dim,
                                 ContainmentPolicy policy = ContainmentPolicy::deletion);

struct N3Condition {
    int s_d = 0;           // points of multiplicity d
    long long b = 0;       // min(n - s_d, s - n - 2)
    bool satisfied = false;
    bool in_scope = false;  // s >= n+3
};

/// Sufficient condition for many-point systems to behave as predicted:
/// sum of multiplicities <= n*d + b. Out of scope (s <= n+2) reports
/// satisfied = false with in_scope = false.
N3Condition n3_condition(const LinearSystem& sys);

struct ChandlerDecomposition {
    LinearSystem lowered;     // pivot multiplicity decreased by one
    LinearSystem hyperplane;  // the residual trace system in one dimension less
};

/// Splits off one multiplicity from the pivot point (1-based index k with
/// m_k >= 1; every other multiplicity must be <= d-1 and n >= 2). The trace
/// system lives in P^(n-1) with degree m_k - 1 and multiplicities
/// max(m_k + m_i - d - 1, 0).
ChandlerDecomposition chandler_decomposition(const LinearSystem& sys, int pivot);

}  // namespace lindim
