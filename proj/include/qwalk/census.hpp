#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qwalk/spectral.hpp"

namespace qwalk {

// One eigenvalue-set bucket: how many b-subsets of leaf pairs produce it,
// plus the smallest bond mask seen (the deterministic representative).
struct FingerprintBucket {
    unsigned long long count = 0;
    uint64_t representative_mask = ~0ull;
};

struct ClanRecord {
    int b = 0;
    std::unordered_map<SpectralFingerprint, FingerprintBucket> fingerprints;
};

struct CensusExtreme {
    SpectralFingerprint fingerprint;
    unsigned long long count = 0;
    std::vector<Edge> representative;   // added bonds only
    std::vector<double> eigenvalues;    // ascending, numeric
};

struct CensusEntry {
    int b = 0;
    unsigned long long n_b = 0;             // distinct eigenvalue sets in the clan
    unsigned long long total_subsets = 0;   // C(b_max, b)
    CensusExtreme most_probable;
    CensusExtreme least_probable;
};

struct CensusReport {
    int n = 0;
    std::vector<CensusEntry> entries;
};

inline constexpr int census_n_cap = 8;

unsigned long long binomial(int n, int k);

// Exhaustive clan enumeration over all b-subsets of leaf pairs, grouped by
// exact fingerprint. Guarded at n <= census_n_cap unless force is set.
// Extremes use max/min occurrence count, ties broken by the lexicographically
// smallest coefficient vector.
CensusReport census(int n, const std::vector<int>& b_filter = {}, int threads = 0,
                    bool force = false);

ClanRecord enumerate_clan(int n, int b, int threads = 0);

// Search the b-subsets for a graph whose sorted spectrum matches `target`
// within tol per entry. Enumerates at most `budget` subsets; throws
// capacity_error (stating coverage) when the budget runs out first.
std::optional<Graph> verify_eigenvalue_set(int n, int b, std::vector<double> target,
                                           double tol, unsigned long long budget = 100000000ull);

// (b, N_B) pairs for plotting the clan-size curve.
std::vector<std::pair<int, unsigned long long>> clan_curve(const CensusReport& report);

}  // namespace qwalk
