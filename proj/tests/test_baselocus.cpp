#include "lindim/baselocus.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace lindim;

namespace {

// Independent reference enumeration: every subset, no pruning.
std::vector<std::pair<std::vector<int>, long long>> naive_positive_subsets(
    const LinearSystem& sys, int max_size) {
    std::vector<std::pair<std::vector<int>, long long>> found;
    const int s = sys.s();
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> indices;
        long long sum = 0;
        for (int i = 0; i < s; ++i) {
            if (mask & (1u << i)) {
                indices.push_back(i + 1);
                sum += sys.mults[i];
            }
        }
        int r = static_cast<int>(indices.size()) - 1;
        if (r + 1 > max_size)
            continue;
        long long K = sum - static_cast<long long>(r) * sys.d;
        if (K > 0)
            found.emplace_back(std::move(indices), K);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return found;
}

}  // namespace

TEST_CASE("k values") {
    LinearSystem sextics = canonicalize(4, 6, {5, 5, 5, 4, 3, 2});
    CHECK(k_value(sextics, MultiIndex{{1, 2}}) == 4);
    CHECK(k_value(sextics, MultiIndex{{}}) == 6);

    LinearSystem triples = canonicalize(3, 6, std::vector<int>(9, 3));
    CHECK(k_value(triples, MultiIndex{{1, 2}}) == 0);
    CHECK(k_value(triples, MultiIndex{{}}) == 6);

    CHECK_THROWS_AS(k_value(sextics, MultiIndex{{7}}), std::out_of_range);
}

TEST_CASE("base cycles of the sextic example") {
    LinearSystem sys = canonicalize(4, 6, {5, 5, 5, 4, 3, 2});
    BaseLocusReport report = enumerate_base_cycles(sys);
    CHECK(report.rbar == 3);
    CHECK_FALSE(report.mult_exceeds_degree);

    std::map<int, int> per_dim;
    for (const BaseCycle& cycle : report.cycles) {
        per_dim[cycle.r]++;
        CHECK(cycle.exact);  // six points is within the exactness range
    }
    CHECK(per_dim[0] == 6);
    CHECK(per_dim[1] == 13);  // all pairs with multiplicity sum above the degree
    CHECK(per_dim[2] == 7);
    CHECK(per_dim[3] == 1);

    // The plane through the three quintuple points is triply contained,
    // the 3-cycle through the top four points simply.
    std::map<std::vector<int>, long long> k_of;
    for (const BaseCycle& cycle : report.cycles)
        k_of[cycle.index_set.indices] = cycle.k;
    CHECK(k_of[{1, 2, 3}] == 3);
    CHECK(k_of[{1, 2, 3, 4}] == 1);
    CHECK(k_of[{1, 2}] == 4);
    CHECK(k_of[{1, 4}] == 3);
    CHECK(k_of[{1, 5}] == 2);
    CHECK(k_of[{1, 6}] == 1);
    CHECK(k_of[{4, 5}] == 1);
}

TEST_CASE("triple points in P3 leave only points in the base locus") {
    LinearSystem sys = canonicalize(3, 6, std::vector<int>(9, 3));
    BaseLocusReport report = enumerate_base_cycles(sys);
    CHECK(report.rbar == 0);
    CHECK(report.cycles.size() == 9);
    for (const BaseCycle& cycle : report.cycles) {
        CHECK(cycle.r == 0);
        CHECK(cycle.k == 3);
        CHECK_FALSE(cycle.exact);  // nine points exceeds n+2
    }
}

TEST_CASE("full-multiplicity points force every spanned cycle with k = d") {
    LinearSystem sys = canonicalize(4, 5, {5, 5, 5});
    BaseLocusReport report = enumerate_base_cycles(sys);
    CHECK(report.rbar == 2);
    CHECK(report.cycles.size() == 7);  // all nonempty subsets of three points
    for (const BaseCycle& cycle : report.cycles)
        CHECK(cycle.k == 5);
}

TEST_CASE("pruned enumeration matches the naive one") {
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> nd(1, 6), dd(1, 9), sd(0, 12);
    for (int iter = 0; iter < 300; ++iter) {
        int n = nd(rng), d = dd(rng), s = sd(rng);
        std::uniform_int_distribution<int> md(1, d + 3);  // some above the degree
        std::vector<int> mults(s);
        for (int& m : mults)
            m = md(rng);
        LinearSystem sys = canonicalize(n, d, mults);

        auto expected = naive_positive_subsets(sys, std::min(n, sys.s()));
        BaseLocusReport report = enumerate_base_cycles(sys);
        REQUIRE(report.cycles.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(report.cycles[i].index_set.indices == expected[i].first);
            CHECK(report.cycles[i].k == expected[i].second);
        }
        CHECK(report.mult_exceeds_degree ==
              (!sys.mults.empty() && sys.mults.front() > sys.d));
    }
}

TEST_CASE("hyperplane splitting") {
    SUBCASE("three double points on plane cubics") {
        SplitResult split = split_hyperplanes(canonicalize(2, 3, {2, 2, 2}));
        CHECK(split.splits.size() == 3);
        for (const HyperplaneSplit& s : split.splits)
            CHECK(s.k == 1);
        CHECK(split.residual.degree == 0);
        for (long long m : split.residual.mults)
            CHECK(m == 0);
        CHECK_FALSE(split.non_effective);
    }
    SUBCASE("no plane reaches positive multiplicity") {
        LinearSystem sys = canonicalize(3, 10, {5, 5, 5, 5});
        SplitResult split = split_hyperplanes(sys);
        CHECK(split.splits.empty());
        CHECK(split.residual.degree == sys.d);
        CHECK_FALSE(split.non_effective);
    }
    SUBCASE("a line splitting twice") {
        SplitResult split = split_hyperplanes(canonicalize(2, 2, {2, 2}));
        REQUIRE(split.splits.size() == 1);
        CHECK(split.splits[0].k == 2);
        CHECK(split.residual.degree == 0);
    }
    SUBCASE("negative residual flags non-effectivity") {
        SplitResult split = split_hyperplanes(canonicalize(2, 2, {2, 2, 2}));
        CHECK(split.non_effective);
    }
    CHECK_THROWS_AS(split_hyperplanes(canonicalize(3, 2, {1, 1})), std::invalid_argument);
}

TEST_CASE("cone reduction") {
    SUBCASE("two cone points peel off") {
        ConeReduction red = reduce_cones(canonicalize(4, 6, {6, 6, 3, 3}));
        REQUIRE(red.system.has_value());
        CHECK_FALSE(red.empty);
        CHECK(red.removed == 2);
        CHECK(*red.system == canonicalize(2, 6, {3, 3}));
    }
    SUBCASE("n+1 full points make the system empty") {
        ConeReduction red = reduce_cones(canonicalize(3, 4, {4, 4, 4, 4}));
        CHECK(red.empty);
    }
    SUBCASE("no cone point, unchanged") {
        LinearSystem sys = canonicalize(3, 5, {4, 3});
        ConeReduction red = reduce_cones(sys);
        REQUIRE(red.system.has_value());
        CHECK(*red.system == sys);
        CHECK(red.removed == 0);
    }
    SUBCASE("the ambient dimension never drops below one") {
        ConeReduction red = reduce_cones(canonicalize(2, 4, {4, 4}));
        REQUIRE(red.system.has_value());
        CHECK(red.system->n == 1);
        CHECK(red.system->mults == std::vector<int>{4});
    }
}
