#pragma once

#include "lindim/system.hpp"

#include <vector>

namespace lindim {

/// Integer divisor class d*H - sum m_i * E_i on the blow-up of projective
/// n-space at s points. Degree and multiplicities may go negative while a
/// computation (Cremona reduction, orbit search) is in flight.
struct PicardClass {
    int n = 1;
    long long degree = 0;
    std::vector<long long> mults;

    int s() const { return static_cast<int>(mults.size()); }

    friend bool operator==(const PicardClass&, const PicardClass&) = default;
    friend auto operator<=>(const PicardClass&, const PicardClass&) = default;
};

/// The class of a linear system on the point blow-up.
PicardClass to_picard(const LinearSystem& sys);

/// Exceptional class E_i (1-based) on the lattice with s points.
PicardClass exceptional_class(int n, int s, int i);

/// Bilinear pairing: (n-1) deg(a) deg(b) - sum m_i(a) m_i(b).
/// Throws on a lattice mismatch (different n or s).
long long pairing(const PicardClass& a, const PicardClass& b);

/// Standard Cremona transformation based at the n+1 points of `base`
/// (1-based indices). Involutive on the same base.
PicardClass cremona(const PicardClass& a, const std::vector<int>& base);

/// True iff no standard Cremona transformation decreases the degree,
/// i.e. the n+1 largest multiplicities sum to at most (n-1)*degree.
/// Vacuously true for s <= n.
bool is_cremona_reduced(const PicardClass& a);

enum class ReductionVerdict { reduced, negative_degree };

struct CremonaReduction {
    PicardClass reduced;
    std::vector<std::vector<int>> moves;  // the base of each step, in order
    ReductionVerdict verdict = ReductionVerdict::reduced;
};

/// Repeatedly applies the Cremona transformation based at the n+1 largest
/// multiplicities while it strictly decreases the degree. Stops as soon as
/// the degree turns negative, which certifies non-effectivity.
CremonaReduction cremona_reduce(const PicardClass& a);

/// Closure of the exceptional classes {E_1..E_s} under standard Cremona
/// transformations on all (n+1)-point bases, deduplicated by class identity
/// and truncated after `depth` rounds of expansion. Deterministic, sorted.
std::vector<PicardClass> weyl_orbit(int n, int s, int depth);

struct WeylBaseLocusEntry {
    PicardClass divisor;
    long long mult = 0;  // containment multiplicity, -<D,F>; 0 entries are flagged
};

/// Orbit elements with non-positive pairing against D, each carrying its
/// containment multiplicity. The original exceptional classes only restate
/// the assigned point multiplicities, so they are excluded unless
/// `include_exceptional` is set.
std::vector<WeylBaseLocusEntry> weyl_base_locus(const PicardClass& D, int depth,
                                                bool include_exceptional = false);

enum class Effectivity { nonempty, empty, unknown };

/// Decides whether the system has any member at all. Exact for s <= n+2;
/// for more points it reports `nonempty` when the standard multiplicity
/// conditions hold, `empty` when a multiplicity exceeds the degree or
/// Cremona reduction drives the degree negative, and `unknown` otherwise.
Effectivity effectivity(const LinearSystem& sys);

}  // namespace lindim
