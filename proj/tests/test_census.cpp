#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "qwalk/census.hpp"

using namespace qwalk;

TEST_CASE("binomial") {
    CHECK(binomial(36, 4) == 58905);
    CHECK(binomial(36, 32) == 58905);
    CHECK(binomial(15, 8) == 6435);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
}

TEST_CASE("tiny censuses") {
    const auto n2 = census(2);
    REQUIRE(n2.entries.size() == 1);
    CHECK(n2.entries[0].n_b == 1);

    const auto n3 = census(3);
    REQUIRE(n3.entries.size() == 2);  // b_max(3) = 1
    CHECK(n3.entries[0].n_b == 1);
    CHECK(n3.entries[1].n_b == 1);

    CHECK(clan_curve(n3) ==
          std::vector<std::pair<int, unsigned long long>>{{0, 1}, {1, 1}});
}

TEST_CASE("clan counts sum to C(b_max, b) and endpoints are singletons") {
    for (int n : {5, 6, 7}) {
        const auto report = census(n);
        const int m = static_cast<int>(b_max(n));
        REQUIRE(static_cast<int>(report.entries.size()) == m + 1);
        CHECK(report.entries.front().n_b == 1);
        CHECK(report.entries.back().n_b == 1);
        for (const auto& e : report.entries) {
            const auto rec = enumerate_clan(n, e.b);
            unsigned long long total = 0;
            for (const auto& [fp, bucket] : rec.fingerprints) total += bucket.count;
            CHECK(total == binomial(m, e.b));
            CHECK(rec.fingerprints.size() == e.n_b);
        }
    }
}

TEST_CASE("N_B(7, 8) and the clan-curve peak") {
    // 23 is exact: cross-checked against an independent floating-point
    // enumeration and bounded by the 24 isomorphism classes of 6-vertex
    // 8-edge graphs.
    const auto report = census(7);
    CHECK(report.entries[8].n_b == 23);

    const auto curve = clan_curve(report);
    const auto peak = std::max_element(curve.begin(), curve.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    CHECK(peak->first >= 6);
    CHECK(peak->first <= 9);
    CHECK(peak->second >= 23);
}

TEST_CASE("observed clan-size symmetry N_B(b) = N_B(b_max - b) for n <= 7") {
    for (int n : {4, 5, 6, 7}) {
        const auto curve = clan_curve(census(n));
        const size_t m = curve.size() - 1;
        for (size_t b = 0; b <= m; ++b) CHECK(curve[b].second == curve[m - b].second);
    }
}

TEST_CASE("fingerprint grouping agrees with numeric grouping (full n=7)") {
    const int n = 7;
    const int m = static_cast<int>(b_max(n));
    const auto pairs = leaf_pairs(n);
    // Numeric route: distinct sorted eigenvalue lists at tolerance 1e-8,
    // clustered greedily against representatives (lexicographic sorting on
    // raw doubles is not noise-safe).
    std::vector<std::vector<std::vector<double>>> reps(m + 1);
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Edge> chosen;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) chosen.push_back(pairs[i]);
        const auto values =
            eigendecompose(connectivity_matrix(star_plus_bonds(n, chosen))).spectrum.values;
        auto& bucket = reps[__builtin_popcountll(mask)];
        bool found = false;
        for (const auto& rep : bucket) {
            double max_diff = 0.0;
            for (int k = 0; k < n; ++k)
                max_diff = std::max(max_diff, std::abs(rep[k] - values[k]));
            if (max_diff <= 1e-8) {
                found = true;
                break;
            }
        }
        if (!found) bucket.push_back(values);
    }
    for (int b = 0; b <= m; ++b)
        CHECK(enumerate_clan(n, b).fingerprints.size() == reps[b].size());
}

TEST_CASE("census is schedule-independent") {
    const auto one = census(6, {}, 1);
    const auto four = census(6, {}, 4);
    REQUIRE(one.entries.size() == four.entries.size());
    for (size_t i = 0; i < one.entries.size(); ++i) {
        CHECK(one.entries[i].n_b == four.entries[i].n_b);
        CHECK(one.entries[i].most_probable.fingerprint == four.entries[i].most_probable.fingerprint);
        CHECK(one.entries[i].most_probable.representative == four.entries[i].most_probable.representative);
        CHECK(one.entries[i].least_probable.fingerprint == four.entries[i].least_probable.fingerprint);
        CHECK(one.entries[i].least_probable.representative == four.entries[i].least_probable.representative);
    }
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(census(9), capacity_error);
    CHECK_NOTHROW(census(9, {0}, 1, /*force=*/true));
}

TEST_CASE("verify_eigenvalue_set") {
    // Witness search at a small size: star(5) plus one bond has spectrum
    // {0, 1, 1, 3, 5} for every single-bond placement.
    const auto witness = verify_eigenvalue_set(5, 1, {0.0, 1.0, 1.0, 3.0, 5.0}, 1e-8);
    REQUIRE(witness.has_value());
    CHECK(witness->edges().size() == 5);

    CHECK(!verify_eigenvalue_set(5, 1, {0.0, 0.0, 0.0, 0.0, 0.0}, 1e-8).has_value());
    CHECK_THROWS_AS(verify_eigenvalue_set(8, 10, std::vector<double>(8, 1.0), 1e-8, 10),
                    capacity_error);
    CHECK_THROWS_AS(verify_eigenvalue_set(5, 9, std::vector<double>(5, 0.0), 1e-8),
                    invalid_argument_error);
}
