#include "lindim/bigint.hpp"
#include "lindim/system.hpp"

#include <doctest.h>

#include <random>

using namespace lindim;

TEST_CASE("binomial values and the zero extension") {
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(1, 4) == 0);
    CHECK(binomial(14, 4) == 1001);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence under the zero extension") {
    for (long long a = 1; a <= 60; ++a)
        for (long long k = 1; k <= 12; ++k)
            CHECK(binomial(a, k) == binomial(a - 1, k) + binomial(a - 1, k - 1));
}

TEST_CASE("canonicalize sorts, drops zeros, keeps oversized multiplicities") {
    LinearSystem sys = canonicalize(4, 6, {3, 5, 5, 2, 4, 5, 0});
    CHECK(sys.n == 4);
    CHECK(sys.d == 6);
    CHECK(sys.mults == std::vector<int>{5, 5, 5, 4, 3, 2});

    LinearSystem triple = canonicalize(3, 6, std::vector<int>(9, 3));
    CHECK(triple.mults == std::vector<int>(9, 3));

    LinearSystem empty_points = canonicalize(2, 1, {});
    CHECK(empty_points.s() == 0);

    LinearSystem oversized = canonicalize(2, 3, {5, 1});
    CHECK(oversized.mults == std::vector<int>{5, 1});

    CHECK_THROWS_AS(canonicalize(0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, -1, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, 1, {-2}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nd(1, 6), dd(0, 9), sd(0, 8), md(0, 12);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> mults(sd(rng));
        for (int& m : mults)
            m = md(rng);
        LinearSystem once = canonicalize(nd(rng), dd(rng), mults);
        LinearSystem twice = canonicalize(once.n, once.d, once.mults);
        CHECK(once == twice);
    }
}

TEST_CASE("multi-index validation") {
    CHECK_NOTHROW(validate_multi_index(MultiIndex{{1, 3, 5}}, 5));
    CHECK_NOTHROW(validate_multi_index(MultiIndex{{}}, 0));
    CHECK(MultiIndex{{}}.r() == -1);
    CHECK(MultiIndex{{2, 4}}.r() == 1);
    CHECK_THROWS_AS(validate_multi_index(MultiIndex{{0}}, 3), std::out_of_range);
    CHECK_THROWS_AS(validate_multi_index(MultiIndex{{4}}, 3), std::out_of_range);
    CHECK_THROWS_AS(validate_multi_index(MultiIndex{{2, 2}}, 3), std::invalid_argument);
}
