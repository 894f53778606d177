#include "qwalk/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace qwalk {

namespace {

Graph graph_from_mask(int n, const std::vector<Edge>& pairs, uint64_t mask) {
    std::vector<Edge> chosen;
    chosen.reserve(static_cast<size_t>(__builtin_popcountll(mask)));
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) chosen.push_back(pairs[i]);
    return star_plus_bonds(n, chosen);
}

// Next bond mask with the same popcount (Gosper); masks ascend numerically,
// i.e. subsets come in colex order.
uint64_t next_subset(uint64_t mask) {
    const uint64_t c = mask & (~mask + 1);
    const uint64_t r = mask + c;
    return (((r ^ mask) >> 2) / c) | r;
}

// Colex unranking: rank r in [0, C(m,b)) -> the r-th mask in numeric order.
uint64_t unrank_subset(int m, int b, unsigned long long rank) {
    uint64_t mask = 0;
    for (int i = b; i >= 1; --i) {
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        mask |= 1ull << c;
        rank -= binomial(c, i);
    }
    (void)m;
    return mask;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

ClanRecord enumerate_clan(int n, int b, int threads) {
    const int m = static_cast<int>(b_max(n));
    if (m > 63) throw capacity_error("enumerate_clan: more than 63 leaf pairs");
    if (b < 0 || b > m) throw invalid_argument_error("enumerate_clan: b out of range");
    const auto pairs = leaf_pairs(n);
    const unsigned long long total = binomial(m, b);

    constexpr unsigned long long kChunk = 16384;
    const int chunks = static_cast<int>((total + kChunk - 1) / kChunk);
    std::vector<std::unordered_map<SpectralFingerprint, FingerprintBucket>> partial(chunks);

    const int workers = std::min(resolve_threads(threads), chunks);
    std::atomic<int> next{0};
    auto run = [&] {
        for (;;) {
            const int ci = next.fetch_add(1);
            if (ci >= chunks) return;
            auto& map = partial[ci];
            const unsigned long long lo = static_cast<unsigned long long>(ci) * kChunk;
            const unsigned long long hi = std::min(total, lo + kChunk);
            uint64_t mask = unrank_subset(m, b, lo);
            for (unsigned long long r = lo; r < hi; ++r) {
                const auto fp = fingerprint(connectivity_matrix(graph_from_mask(n, pairs, mask)));
                auto& bucket = map[fp];
                ++bucket.count;
                bucket.representative_mask = std::min(bucket.representative_mask, mask);
                if (b > 0) mask = next_subset(mask);
            }
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }

    ClanRecord rec;
    rec.b = b;
    for (auto& map : partial)
        for (auto& [fp, bucket] : map) {
            auto& dst = rec.fingerprints[fp];
            dst.count += bucket.count;
            dst.representative_mask = std::min(dst.representative_mask, bucket.representative_mask);
        }
    return rec;
}

CensusReport census(int n, const std::vector<int>& b_filter, int threads, bool force) {
    if (n < 2) throw invalid_argument_error("census: need n >= 2");
    const int m = static_cast<int>(b_max(n));
    if (n > census_n_cap && !force)
        throw capacity_error("census: n=" + std::to_string(n) + " exceeds the n<=" +
                             std::to_string(census_n_cap) +
                             " cap (2^" + std::to_string(m) + " subsets); pass force to override");

    std::vector<int> bs = b_filter;
    if (bs.empty()) {
        bs.resize(m + 1);
        for (int b = 0; b <= m; ++b) bs[b] = b;
    }
    const auto pairs = leaf_pairs(n);

    CensusReport report;
    report.n = n;
    for (int b : bs) {
        ClanRecord rec = enumerate_clan(n, b, threads);
        CensusEntry entry;
        entry.b = b;
        entry.n_b = rec.fingerprints.size();
        entry.total_subsets = binomial(m, b);

        auto better = [](const auto& lhs, const auto& rhs, bool want_max) {
            // (count, then lexicographically smallest coefficients on ties)
            if (lhs.second.count != rhs.second.count)
                return want_max ? lhs.second.count > rhs.second.count
                                : lhs.second.count < rhs.second.count;
            return lhs.first < rhs.first;
        };
        const auto* most = &*rec.fingerprints.begin();
        const auto* least = most;
        for (const auto& item : rec.fingerprints) {
            if (better(item, *most, true)) most = &item;
            if (better(item, *least, false)) least = &item;
        }
        auto fill = [&](const auto& item) {
            CensusExtreme ex;
            ex.fingerprint = item.first;
            ex.count = item.second.count;
            uint64_t mask = item.second.representative_mask;
            for (int i = 0; mask; ++i, mask >>= 1)
                if (mask & 1) ex.representative.push_back(pairs[i]);
            const Graph g = star_plus_bonds(n, ex.representative);
            ex.eigenvalues = eigendecompose(connectivity_matrix(g)).spectrum.values;
            return ex;
        };
        entry.most_probable = fill(*most);
        entry.least_probable = fill(*least);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::optional<Graph> verify_eigenvalue_set(int n, int b, std::vector<double> target,
                                           double tol, unsigned long long budget) {
    const int m = static_cast<int>(b_max(n));
    if (b < 0 || b > m) throw invalid_argument_error("verify_eigenvalue_set: b out of range");
    if (static_cast<int>(target.size()) != n)
        throw invalid_argument_error("verify_eigenvalue_set: target size must equal n");
    std::sort(target.begin(), target.end());

    const auto pairs = leaf_pairs(n);
    const unsigned long long total = binomial(m, b);
    uint64_t mask = unrank_subset(m, b, 0);
    for (unsigned long long r = 0; r < total; ++r) {
        if (r >= budget)
            throw capacity_error("verify_eigenvalue_set: budget exhausted after " +
                                 std::to_string(r) + " of " + std::to_string(total) +
                                 " subsets");
        const Graph g = graph_from_mask(n, pairs, mask);
        const auto values = eigendecompose(connectivity_matrix(g)).spectrum.values;
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            match = std::abs(values[i] - target[i]) <= tol;
        if (match) return g;
        if (b > 0) mask = next_subset(mask);
    }
    return std::nullopt;
}

std::vector<std::pair<int, unsigned long long>> clan_curve(const CensusReport& report) {
    std::vector<std::pair<int, unsigned long long>> curve;
    curve.reserve(report.entries.size());
    for (const auto& e : report.entries) curve.emplace_back(e.b, e.n_b);
    return curve;
}

}  // namespace qwalk
