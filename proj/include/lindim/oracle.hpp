#pragma once

#include "lindim/fp.hpp"
#include "lindim/system.hpp"

#include <cstdint>
#include <vector>

namespace lindim {

std::uint64_t default_oracle_seed();  // LINDIM_SEED when set, a fixed constant otherwise

struct OracleConfig {
    int prime_bits = 62;  // bit length of the random primes; must keep p > d
    int trials = 3;       // independent random point sets
    std::uint64_t seed = default_oracle_seed();
};

struct OracleTrial {
    std::uint64_t prime = 0;
    long long dim = -1;
    long long rank = 0;
};

struct OracleResult {
    long long dim = -1;   // minimum over trials; general position only raises it
    long long rank = 0;   // matching maximal rank
    std::vector<OracleTrial> per_trial;
    bool agreed = false;
};

/// Actual dimension of the system measured as the corank of the matrix of
/// derivative vanishing conditions at random points over a large prime
/// field: dim = binom(n+d,n) - rank - 1. Disagreeing trials trigger one
/// automatic retry round with fresh primes.
OracleResult interpolation_dimension(const LinearSystem& sys, const OracleConfig& cfg = {});

/// Same quantity through the dual route: the codimension in degree d of the
/// span of all monomial multiples of random linear forms raised to the
/// powers d+1-m_i, minus one. Requires every m_i <= d.
OracleResult apolarity_dimension(const LinearSystem& sys, const OracleConfig& cfg = {});

/// Empirical containment multiplicity of the linear cycle through the
/// points selected by `index`: minimal vanishing order of a general member
/// restricted to a random transversal line through a random point of the
/// cycle. Requires a non-empty system.
long long cycle_multiplicity_probe(const LinearSystem& sys, const MultiIndex& index,
                                   const OracleConfig& cfg = {});

/// Exponent vectors of the degree-d monomials in n+1 variables, in a fixed
/// deterministic order. Exposed for the matrix-size arithmetic in reports.
std::vector<std::vector<int>> monomial_exponents(int n, int d);

}  // namespace lindim
