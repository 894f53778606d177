#include "qwalk/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qwalk {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw invalid_argument_error("Graph: need n >= 2");
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a == b) throw invalid_argument_error("Graph: self-loop");
        if (a < 1 || b > n_) throw invalid_argument_error("Graph: node label out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw invalid_argument_error("Graph: duplicate edge");
}

bool Graph::has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

int Graph::degree(int node) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == node || b == node) ++d;
    return d;
}

ConnectivityMatrix::ConnectivityMatrix(const Graph& g)
    : n_(g.node_count()), a_(static_cast<size_t>(n_) * n_, 0) {
    for (const auto& [i, j] : g.edges()) {
        a_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = -1;
        a_[static_cast<size_t>(j - 1) * n_ + (i - 1)] = -1;
        a_[static_cast<size_t>(i - 1) * n_ + (i - 1)] += 1;
        a_[static_cast<size_t>(j - 1) * n_ + (j - 1)] += 1;
    }
}

long long ConnectivityMatrix::trace() const {
    long long t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Graph build_star(int n) {
    if (n < 2) throw invalid_argument_error("build_star: need n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int j = 2; j <= n; ++j) edges.emplace_back(1, j);
    return Graph(n, std::move(edges));
}

Graph build_complete(int n) {
    if (n < 2) throw invalid_argument_error("build_complete: need n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph star_plus_bonds(int n, const std::vector<Edge>& chosen) {
    if (n < 2) throw invalid_argument_error("star_plus_bonds: need n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n - 1) + chosen.size());
    for (int j = 2; j <= n; ++j) edges.emplace_back(1, j);
    for (auto [a, b] : chosen) {
        if (a > b) std::swap(a, b);
        if (a == b) throw invalid_argument_error("star_plus_bonds: self-pair");
        if (a <= 1 || b > n)
            throw invalid_argument_error("star_plus_bonds: bond must join two leaves in 2..n");
        edges.emplace_back(a, b);
    }
    // Graph ctor rejects duplicates among the chosen pairs.
    return Graph(n, std::move(edges));
}

std::vector<Edge> leaf_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<size_t>(b_max(n)));
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << "n=" << g.node_count() << "\n";
    for (const auto& [a, b] : g.edges()) os << a << " " << b << "\n";
}

Graph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
        throw invalid_argument_error("edge list: missing n=<N> header");
    int n = 0;
    try {
        n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw invalid_argument_error("edge list: bad node count");
    }
    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int a, b;
        if (!(ss >> a >> b)) throw invalid_argument_error("edge list: bad edge line: " + line);
        edges.push_back(make_edge(a, b));
    }
    return Graph(n, std::move(edges));
}

}  // namespace qwalk
