#pragma once

#include "lindim/picard.hpp"
#include "lindim/system.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lindim {

/// Containment multiplicity of the linear cycle spanned by the points of
/// `index`: the clamped value max(sum of the selected multiplicities - r*d, 0),
/// where r is the cycle dimension. The empty index set yields d.
long long k_value(const LinearSystem& sys, const MultiIndex& index);

/// A linear cycle forced into the base locus. `exact` is set when the
/// multiplicity is known to be attained (at most n+2 points); otherwise the
/// value is only a lower bound.
struct BaseCycle {
    MultiIndex index_set;
    int r = 0;
    long long k = 0;
    bool exact = false;
};

struct BaseLocusReport {
    std::vector<BaseCycle> cycles;  // ordered by (r, lexicographic indices)
    int rbar = -1;                  // dimension of the linear base locus
    // Some multiplicity exceeds the degree: the system is empty, the k-values
    // are still well defined arithmetic.
    bool mult_exceeds_degree = false;
};

/// All index sets of dimension 0 <= r <= min(n,s)-1 with positive k, via
/// depth-first enumeration with monotone pruning.
BaseLocusReport enumerate_base_cycles(const LinearSystem& sys);

struct HyperplaneSplit {
    MultiIndex index_set;  // n points spanning the hyperplane
    long long k = 0;       // number of times it splits off
};

struct SplitResult {
    PicardClass residual;
    std::vector<HyperplaneSplit> splits;
    // Negative residual degree or multiplicity: the input was not effective.
    bool non_effective = false;
};

/// Splits off every fixed hyperplane (spanned by n of the points) with its
/// full multiplicity and returns the residual class. Requires s >= n.
SplitResult split_hyperplanes(const LinearSystem& sys);

struct ConeReduction {
    bool empty = false;                   // degree-d points in excess force emptiness
    std::optional<LinearSystem> system;   // reduced system when not empty
    int removed = 0;                      // cone points peeled off
};

/// Peels off points whose multiplicity equals the degree (each one turns the
/// members into cones and drops the ambient dimension by one). With n+1 or
/// more such points and positive degree the system is empty. The ambient
/// dimension never drops below 1, so with exactly n cone points one of them
/// is retained on the final line.
ConeReduction reduce_cones(const LinearSystem& sys);

namespace detail {

/// Depth-first walk over index subsets of 1..s in lexicographic order,
/// carrying the unclamped value K = sum of selected multiplicities - r*d
/// (K = d for the empty set). `visit` receives (indices, r, K) for every
/// subset reached, the empty set included. A subtree is cut when K <= 0 and
/// every remaining candidate multiplicity is at most d, since extending can
/// then never bring K back above zero. `max_size` bounds the subset
/// cardinality (-1 for no bound).
void walk_subsets(const LinearSystem& sys, int max_size,
                  const std::function<void(const std::vector<int>&, int, long long)>& visit);

}  // namespace detail

}  // namespace lindim
