#pragma once

#include <compare>
#include <vector>

namespace lindim {

/// A linear system of degree-d hypersurfaces in projective n-space with
/// assigned base points of the given multiplicities at general position.
/// Canonical form: multiplicities sorted non-increasing, zeros dropped.
struct LinearSystem {
    int n = 1;                // ambient projective dimension, >= 1
    int d = 0;                // degree, >= 0
    std::vector<int> mults;   // non-increasing, all >= 1

    int s() const { return static_cast<int>(mults.size()); }
    long long mult_sum() const;

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
    friend auto operator<=>(const LinearSystem&, const LinearSystem&) = default;
};

/// Builds the canonical form. Zero multiplicities are dropped; values above
/// the degree are kept (emptiness is a predicate, not a parse error).
/// Throws std::invalid_argument for n < 1, d < 0 or a negative multiplicity.
LinearSystem canonicalize(int n, int d, std::vector<int> mults);

/// A set of base-point indices (1-based, strictly increasing). The empty
/// index set is allowed and stands for the dimension -1 cycle of the
/// alternating sums.
struct MultiIndex {
    std::vector<int> indices;

    int r() const { return static_cast<int>(indices.size()) - 1; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Validates strict monotonicity and the 1..s range; throws std::out_of_range
/// or std::invalid_argument on violation.
void validate_multi_index(const MultiIndex& index, int s);

}  // namespace lindim
