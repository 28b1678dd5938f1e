#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lindim {

/// Arithmetic modulo an odd prime p < 2^63, with Montgomery representation
/// for the multiplication-heavy kernels. Values in the Montgomery domain are
/// plain uint64_t; conversion is explicit via to_m / from_m.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t to_m(std::uint64_t a) const { return mul(a % p_, r2_); }
    std::uint64_t from_m(std::uint64_t a) const { return reduce(a); }
    std::uint64_t one_m() const { return one_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t pow(std::uint64_t base_m, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a_m) const { return pow(a_m, p_ - 2); }

private:
    std::uint64_t reduce(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
        std::uint64_t r = static_cast<std::uint64_t>(
            (t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_;
    std::uint64_t ninv_;  // -p^ -1 mod 2^64
    std::uint64_t r2_;    // 2^128 mod p
    std::uint64_t one_;   // 2^64 mod p
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Uniform random prime with the given bit length (4..63), drawn from rng.
std::uint64_t random_prime(int bits, std::mt19937_64& rng);

/// Stream for (seed, index): statistically independent generators with
/// reproducible derivation.
std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t index);

/// Dense row-major matrix over a prime field, entries in Montgomery form.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t* row(std::size_t i) { return data.data() + i * cols; }
    const std::uint64_t* row(std::size_t i) const { return data.data() + i * cols; }
};

/// Rank via forward elimination with partial pivoting. Destroys the matrix.
std::size_t fp_rank(FpMatrix& m, const PrimeField& f);

/// Reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> fp_rref(FpMatrix& m, const PrimeField& f);

/// Basis of the right nullspace (solutions of m x = 0), plain (non-Montgomery)
/// entries. Destroys the matrix.
std::vector<std::vector<std::uint64_t>> fp_nullspace(FpMatrix& m, const PrimeField& f);

}  // namespace lindim
