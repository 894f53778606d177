#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

// Unordered node pair, stored with first < second. Nodes are 1-based;
// node 1 is the star center by convention.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
    if (a == b) throw invalid_argument_error("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph: node count plus a sorted, duplicate-free edge list.
class Graph {
  public:
    Graph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int a, int b) const;
    int degree(int node) const;

    bool operator==(const Graph& other) const = default;

  private:
    int n_;
    std::vector<Edge> edges_;  // sorted, unique
};

// Integer-valued graph Laplacian: degrees on the diagonal, -1 for bonds.
// Doubles as the walk Hamiltonian (H = A) and the negative transfer
// matrix (T = -A).
class ConnectivityMatrix {
  public:
    explicit ConnectivityMatrix(const Graph& g);

    int dim() const { return n_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    long long trace() const;

  private:
    int n_;
    std::vector<int> a_;  // row-major
};

Graph build_star(int n);
Graph build_complete(int n);

// Star skeleton plus the given leaf-leaf bonds. Pairs touching the center,
// self-pairs, and duplicates are rejected.
Graph star_plus_bonds(int n, const std::vector<Edge>& chosen);

inline ConnectivityMatrix connectivity_matrix(const Graph& g) {
    return ConnectivityMatrix(g);
}

// Number of leaf pairs: bonds needed to turn SG(n) into CG(n).
inline long long b_max(int n) {
    if (n < 2) throw invalid_argument_error("b_max: need n >= 2");
    return static_cast<long long>(n - 1) * (n - 2) / 2;
}

// All leaf-leaf pairs of SG(n) in lexicographic order; index into this
// array is the bond id used by ensemble sampling and census enumeration.
std::vector<Edge> leaf_pairs(int n);

// Edge-list text format: header line "n=<N>", then one "i j" pair per line.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace qwalk
