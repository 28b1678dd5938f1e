#pragma once

#include "lindim/bigint.hpp"
#include "lindim/errors.hpp"
#include "lindim/system.hpp"

#include <map>
#include <vector>

namespace lindim {

/// Divisor class of the system on the blow-up along all linear base cycles
/// of dimension at most `level`: the degree stays d and every blown-up cycle
/// carries its containment multiplicity as an exceptional coefficient.
struct StrictTransform {
    int level = 0;
    LinearSystem base;
    std::map<std::vector<int>, long long> k_coeffs;  // index set -> positive k
};

/// Collects the positive containment multiplicities of all index sets with
/// at most level+1 elements. Requires 0 <= level <= min(n,s)-1.
StrictTransform strict_transform(const LinearSystem& sys, int level);

struct CohomologyLevel {
    int r = 0;
    BigInt h_top = 0;  // h^(r+1) of the level-r strict transform
};

/// Sheaf cohomology of every strict transform of a non-empty system with at
/// most n+2 points: at level r only h^0 and h^(r+1) can be nonzero, and the
/// top entry vanishes once r reaches the dimension of the linear base locus.
struct CohomologyTable {
    BigInt h0 = 0;
    int rbar = -1;
    std::vector<CohomologyLevel> levels;  // r = 0 .. min(n,s)-1
};

CohomologyTable cohomology_table(const LinearSystem& sys);

/// Total first cohomology of the system on projective space (its
/// speciality). Same scope requirements as the table.
BigInt h1_speciality(const LinearSystem& sys);

/// Euler-characteristic stand-in for systems where the table formulas do
/// not apply: lvdim + 1.
BigInt euler_characteristic(const LinearSystem& sys);

/// Speciality and section count of the cone systems with s points of full
/// multiplicity d, for 0 <= s <= n+1.
BigInt cones_h1(int n, int d, int s);
BigInt cones_h0(int n, int d, int s);

}  // namespace lindim
