#include "lindim/fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindim {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= (1ULL << 63))
        throw std::invalid_argument("PrimeField: modulus must be an odd prime below 2^63");
    // Newton iteration for the inverse of p modulo 2^64.
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i)
        inv *= 2 - p * inv;
    ninv_ = ~inv + 1;  // -inv
    std::uint64_t r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
    r2_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * r % p);
    one_ = r;
}

std::uint64_t PrimeField::pow(std::uint64_t base_m, std::uint64_t e) const {
    std::uint64_t result = one_;
    while (e) {
        if (e & 1)
            result = mul(result, base_m);
        base_m = mul(base_m, base_m);
        e >>= 1;
    }
    return result;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // This base set is a proven deterministic witness family below 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::uint64_t random_prime(int bits, std::mt19937_64& rng) {
    if (bits < 4 || bits > 63)
        throw std::invalid_argument("random_prime: bit length must be in 4..63");
    const std::uint64_t lo = 1ULL << (bits - 1);
    const std::uint64_t hi = (bits == 63) ? ~0ULL >> 1 : (1ULL << bits) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (;;) {
        std::uint64_t candidate = dist(rng) | 1;
        if (is_prime_u64(candidate))
            return candidate;
    }
}

std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 scramble of (seed, index) to decouple the streams.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

std::size_t fp_rank(FpMatrix& m, const PrimeField& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.row(pivot)[col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols, m.row(rank));
        const std::uint64_t* prow = m.row(rank);
        const std::uint64_t pinv = f.inv(prow[col]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            std::uint64_t* row = m.row(r);
            if (row[col] == 0)
                continue;
            std::uint64_t factor = f.mul(row[col], pinv);
            row[col] = 0;
            for (std::size_t j = col + 1; j < m.cols; ++j)
                row[j] = f.sub(row[j], f.mul(factor, prow[j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> fp_rref(FpMatrix& m, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.row(pivot)[col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols, m.row(rank));
        std::uint64_t* prow = m.row(rank);
        const std::uint64_t pinv = f.inv(prow[col]);
        for (std::size_t j = col; j < m.cols; ++j)
            prow[j] = f.mul(prow[j], pinv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank)
                continue;
            std::uint64_t* row = m.row(r);
            if (row[col] == 0)
                continue;
            std::uint64_t factor = row[col];
            for (std::size_t j = col; j < m.cols; ++j)
                row[j] = f.sub(row[j], f.mul(factor, prow[j]));
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> fp_nullspace(FpMatrix& m, const PrimeField& f) {
    std::vector<std::size_t> pivots = fp_rref(m, f);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<std::uint64_t> vec(m.cols, 0);
        vec[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint64_t entry = m.row(i)[free_col];
            if (entry != 0)
                vec[pivots[i]] = f.from_m(f.neg(entry));
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace lindim
