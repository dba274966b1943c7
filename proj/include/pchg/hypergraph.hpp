#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pchg/multimatrix.hpp"

namespace pchg {

// 0/1 matrix; incidence matrices and their blocks live here.
struct Matrix01 {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries; // row-major

    std::uint8_t at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(c)];
    }
    std::uint8_t& at(int r, int c) {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(c)];
    }

    friend bool operator==(const Matrix01& a, const Matrix01& b) = default;
};

// Vertices are dense 0-based ids; hyperedges are stored as sorted vertex
// lists. The edge list order is preserved from construction, and repeats are
// rejected unless multi_allowed is set.
class Hypergraph {
public:
    static Hypergraph create(int n, std::vector<std::vector<int>> edges,
                             bool multi_allowed = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    bool multi_allowed() const { return multi_allowed_; }

    int degree(int v) const;
    std::vector<std::vector<int>> incident_edges() const; // per vertex, edge ids ascending

private:
    Hypergraph() = default;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    bool multi_allowed_ = false;
};

struct Profile {
    std::optional<int> uniform_d;
    std::optional<int> regular_r;
    std::vector<int> degrees;
    std::vector<int> sizes;
};

Matrix01 incidence_matrix(const Hypergraph& h);

// Interchanges vertices and hyperedges; incidence_matrix(dual(h)) is the
// transpose of incidence_matrix(h). Rejects isolated vertices, which would
// produce an empty hyperedge.
Hypergraph dual(const Hypergraph& h);

Profile profile(const Hypergraph& h);

// Berge connectivity; a hypergraph on at most one vertex is connected.
bool is_connected(const Hypergraph& h);

// Bipartite (Levi) graph on n + m vertices: vertices 0..n-1 are the original
// vertices, n..n+m-1 are the hyperedges.
Hypergraph incidence_graph(const Hypergraph& h);

// d-dimensional adjacency matrix of a d-uniform hypergraph: each hyperedge
// contributes 1/(d-1)! at every permutation of its vertices, so repeated
// hyperedges accumulate.
MultiMatrix adjacency_tensor(const Hypergraph& h);

// All vertex subsets meeting every hyperedge in exactly k vertices, in
// lexicographic order of their sorted vertex lists. Guarded at n <= 30.
std::vector<std::vector<int>> enumerate_k_transversals(const Hypergraph& h, int k,
                                                       int threads = 1);

// Complete d-uniform hypergraph on n vertices.
Hypergraph complete_uniform(int n, int d);

// The Fano plane hypergraph, vertices x1..x7 mapped to 0..6.
Hypergraph fano_hypergraph();

} // namespace pchg
