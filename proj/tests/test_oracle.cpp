#include "lindim/oracle.hpp"

#include "lindim/baselocus.hpp"
#include "lindim/dimensions.hpp"
#include "lindim/errors.hpp"
#include "lindim/fp.hpp"
#include "lindim/froberg.hpp"
#include "lindim/picard.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace lindim;

namespace {

OracleConfig quick_config(std::uint64_t seed = 0xfeedULL) {
    OracleConfig cfg;
    cfg.seed = seed;
    cfg.trials = 2;
    return cfg;
}

}  // namespace

TEST_CASE("prime field arithmetic round-trips") {
    std::mt19937_64 rng(17);
    PrimeField f(random_prime(62, rng));
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    for (int iter = 0; iter < 2000; ++iter) {
        std::uint64_t a = dist(rng), b = dist(rng);
        std::uint64_t am = f.to_m(a), bm = f.to_m(b);
        CHECK(f.from_m(am) == a);
        CHECK(f.from_m(f.mul(am, bm)) ==
              static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % f.modulus()));
        CHECK(f.from_m(f.add(am, bm)) == (a + b) % f.modulus());
        if (a != 0)
            CHECK(f.from_m(f.mul(f.inv(am), am)) == 1);
    }
}

TEST_CASE("primality testing") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));         // Carmichael
    CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
    std::mt19937_64 rng(3);
    for (int bits : {20, 40, 62}) {
        std::uint64_t p = random_prime(bits, rng);
        CHECK(p >= (1ULL << (bits - 1)));
        CHECK(is_prime_u64(p));
    }
}

TEST_CASE("rank and nullspace of a small explicit matrix") {
    PrimeField f(101);
    // Rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2.
    FpMatrix m(3, 3);
    int plain[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.row(i)[j] = f.to_m(plain[i][j]);
    FpMatrix copy = m;
    CHECK(fp_rank(copy, f) == 2);

    auto basis = fp_nullspace(m, f);
    REQUIRE(basis.size() == 1);
    // Verify m * v = 0 in plain arithmetic.
    for (int i = 0; i < 3; ++i) {
        unsigned __int128 acc = 0;
        for (int j = 0; j < 3; ++j)
            acc += static_cast<unsigned __int128>(plain[i][j]) * basis[0][j];
        CHECK(static_cast<std::uint64_t>(acc % f.modulus()) == 0);
    }
}

TEST_CASE("oracle on systems with known dimensions") {
    OracleConfig cfg = quick_config();
    SUBCASE("no points at all") {
        OracleResult r = interpolation_dimension(canonicalize(3, 4, {}), cfg);
        CHECK(r.dim == binomial(7, 3) - 1);
        CHECK(r.agreed);
    }
    SUBCASE("one simple point") {
        OracleResult r = interpolation_dimension(canonicalize(2, 3, {1}), cfg);
        CHECK(r.dim == binomial(5, 2) - 2);
    }
    SUBCASE("double conic through two points") {
        OracleResult r = interpolation_dimension(canonicalize(2, 2, {2, 2}), cfg);
        CHECK(r.dim == 0);  // exactly the doubled line
        CHECK(r.rank == 5);
    }
    SUBCASE("an empty system") {
        OracleResult r = interpolation_dimension(canonicalize(2, 2, {2, 2, 2}), cfg);
        CHECK(r.dim == -1);
    }
    SUBCASE("plane quintics with three triple points") {
        OracleResult r = interpolation_dimension(canonicalize(2, 5, {3, 3, 3}), cfg);
        CHECK(r.dim == 2);
    }
    SUBCASE("quartic threefolds with four triple points: one member") {
        OracleResult r = interpolation_dimension(canonicalize(3, 4, {3, 3, 3, 3}), cfg);
        CHECK(r.dim == 0);
    }
}

TEST_CASE("the two oracle routes agree") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nd(1, 4), dd(1, 6), sd(0, 6);
    OracleConfig cfg = quick_config(0xabcdULL);
    cfg.trials = 1;
    for (int iter = 0; iter < 25; ++iter) {
        int d = dd(rng);
        std::uniform_int_distribution<int> md(1, d);
        std::vector<int> mults(sd(rng));
        for (int& m : mults)
            m = md(rng);
        LinearSystem sys = canonicalize(nd(rng), d, mults);
        OracleResult a = interpolation_dimension(sys, cfg);
        OracleResult b = apolarity_dimension(sys, cfg);
        CHECK(a.dim == b.dim);
        CHECK(BigInt(a.dim) >= virtual_dimension(sys));
    }
}

TEST_CASE("oracle dimension is invariant under valid Cremona moves") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> nd(2, 3), dd(2, 7);
    OracleConfig cfg = quick_config(0x777ULL);
    cfg.trials = 1;
    int tested = 0;
    for (int iter = 0; iter < 300 && tested < 15; ++iter) {
        int n = nd(rng), d = dd(rng);
        int s = n + 1 + std::uniform_int_distribution<int>(0, 2)(rng);
        std::uniform_int_distribution<int> md(1, d);
        std::vector<int> mults(s);
        for (int& m : mults)
            m = md(rng);
        LinearSystem sys = canonicalize(n, d, mults);
        std::vector<int> base(n + 1);
        std::iota(base.begin(), base.end(), 1);
        PicardClass image = cremona(to_picard(sys), base);
        if (image.degree < 1)
            continue;
        bool valid = true;
        std::vector<int> image_mults;
        for (long long m : image.mults) {
            if (m < 0 || m > image.degree)
                valid = false;
            else if (m > 0)
                image_mults.push_back(static_cast<int>(m));
        }
        if (!valid)
            continue;
        LinearSystem image_sys =
            canonicalize(n, static_cast<int>(image.degree), image_mults);
        if (image_sys == sys)
            continue;
        ++tested;
        CHECK(interpolation_dimension(sys, cfg).dim ==
              interpolation_dimension(image_sys, cfg).dim);
    }
    CHECK(tested >= 15);
}

TEST_CASE("vanishing order probe along base cycles") {
    OracleConfig cfg = quick_config(0x5151ULL);
    cfg.trials = 2;
    SUBCASE("the doubled line") {
        CHECK(cycle_multiplicity_probe(canonicalize(2, 2, {2, 2}), MultiIndex{{1, 2}}, cfg) == 2);
    }
    SUBCASE("pair values at small scale") {
        CHECK(cycle_multiplicity_probe(canonicalize(2, 5, {3, 3, 3}), MultiIndex{{1, 2}}, cfg) ==
              1);
        CHECK(cycle_multiplicity_probe(canonicalize(3, 3, {3, 3}), MultiIndex{{1, 2}}, cfg) == 3);
        CHECK(cycle_multiplicity_probe(canonicalize(3, 4, {2, 2, 2}), MultiIndex{{1, 2}}, cfg) ==
              0);
    }
    SUBCASE("probing an empty system fails loudly") {
        CHECK_THROWS_AS(
            cycle_multiplicity_probe(canonicalize(2, 2, {2, 2, 2}), MultiIndex{{1, 2}}, cfg),
            EmptySystemError);
    }
    SUBCASE("the heavy line of the sextic example") {
        CHECK(cycle_multiplicity_probe(canonicalize(4, 6, {5, 5, 5, 4, 3, 2}),
                                       MultiIndex{{1, 2}}, cfg) == 4);
    }
}

TEST_CASE("probed orders match the predicted k-values on small systems") {
    OracleConfig cfg = quick_config(0x6161ULL);
    cfg.trials = 1;
    const std::vector<LinearSystem> systems = {
        canonicalize(2, 4, {3, 2, 2}),
        canonicalize(3, 5, {4, 3, 2}),
        canonicalize(3, 6, {4, 4, 3, 2}),
        canonicalize(2, 3, {2, 2, 1, 1}),
    };
    for (const LinearSystem& sys : systems) {
        REQUIRE(effectivity(sys) == Effectivity::nonempty);
        for (const BaseCycle& cycle : enumerate_base_cycles(sys).cycles) {
            if (cycle.r == 0)
                continue;  // point multiplicities are the input data
            CHECK(cycle_multiplicity_probe(sys, cycle.index_set, cfg) == cycle.k);
        }
    }
}

TEST_CASE("peeling cone points preserves ldim and the measured dimension") {
    OracleConfig cfg = quick_config(0x7272ULL);
    cfg.trials = 1;
    const std::vector<LinearSystem> systems = {
        canonicalize(4, 6, {6, 6, 3, 3}),
        canonicalize(3, 4, {4, 2, 2, 1}),
        canonicalize(5, 3, {3, 3, 2, 1}),
        canonicalize(2, 5, {5, 3, 2}),
    };
    for (const LinearSystem& sys : systems) {
        ConeReduction red = reduce_cones(sys);
        REQUIRE(red.system.has_value());
        REQUIRE(red.removed > 0);
        CHECK(linear_expected_dimension(sys) == linear_expected_dimension(*red.system));
        CHECK(interpolation_dimension(sys, cfg).dim ==
              interpolation_dimension(*red.system, cfg).dim);
    }
}

TEST_CASE("series prediction matches the measurement in the proven regimes") {
    OracleConfig cfg = quick_config(0x4b4bULL);
    cfg.trials = 1;
    std::mt19937 rng(0x4b);
    int small_checked = 0, many_checked = 0;
    while (small_checked < 25 || many_checked < 15) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        int d = std::uniform_int_distribution<int>(2, 6)(rng);
        int s = std::uniform_int_distribution<int>(0, n + 6)(rng);
        std::vector<int> mults(s);
        for (int& m : mults)
            m = std::uniform_int_distribution<int>(1, std::max(1, d / 2 + 1))(rng);
        LinearSystem sys = canonicalize(n, d, mults);
        bool in_small = sys.s() <= sys.n + 2 && effectivity(sys) == Effectivity::nonempty;
        bool in_many = sys.s() >= sys.n + 3 && n3_condition(sys).satisfied;
        if (!in_small && !in_many)
            continue;
        if (in_small && small_checked >= 40)
            continue;
        (in_small ? small_checked : many_checked)++;
        CHECK(froberg_prediction(sys) == apolarity_dimension(sys, cfg).dim);
    }
}

TEST_CASE("oracle guard rails") {
    OracleConfig cfg;
    cfg.prime_bits = 3;
    CHECK_THROWS_AS(interpolation_dimension(canonicalize(2, 2, {1}), cfg),
                    std::invalid_argument);
    OracleConfig small;
    small.prime_bits = 5;
    CHECK_THROWS_AS(interpolation_dimension(canonicalize(2, 40, {}), small),
                    std::invalid_argument);
    CHECK_THROWS_AS(apolarity_dimension(canonicalize(2, 3, {4})), std::invalid_argument);
}
