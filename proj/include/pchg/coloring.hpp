#pragma once

#include <utility>
#include <vector>

#include "pchg/hypergraph.hpp"
#include "pchg/multimatrix.hpp"

namespace pchg {

// Surjective vertex coloring with colors 0..k-1.
class Coloring {
public:
    static Coloring create(std::vector<int> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return k_; }
    int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const { return colors_; }

    std::vector<long long> class_sizes() const;

    friend bool operator==(const Coloring& a, const Coloring& b) = default;

private:
    Coloring() = default;
    std::vector<int> colors_;
    int k_ = 0;
};

// Color range of a hyperedge: the multiset of its vertex colors, kept as a
// sorted list. Ranges compare and order lexicographically on that list.
using ColorRange = std::vector<int>;

struct IncidenceParams {
    std::vector<std::vector<long long>> V; // k x l, hyperedges of each range at a vertex
    std::vector<std::vector<long long>> W; // l x k, vertices of each color in an edge
    std::vector<ColorRange> ranges;        // canonical (sorted lexicographic) order
    std::vector<long long> N;              // vertices per color
    std::vector<long long> M;              // hyperedges per range
};

std::vector<ColorRange> color_ranges(const Hypergraph& h, const Coloring& f);

// Incidence parameters (V, W) with counts (N, M); throws errc::not_perfect
// with a witness pair when two same-colored vertices see different range
// multisets.
IncidenceParams incidence_parameters(const Hypergraph& h, const Coloring& f);

bool is_perfect(const Hypergraph& h, const Coloring& f);

// n x k 0/1 color matrix of f.
MultiMatrix color_matrix(const Coloring& f);

// d-dimensional parameter matrix S of order k with entries
// v[gamma_1, range(gamma)] / multinomial(d-1; tail color counts); satisfies
// A ∘ P = P ∘ S exactly.
MultiMatrix parameter_tensor(const Hypergraph& h, const Coloring& f);

// Same matrix rebuilt from counts alone: d * (m_range / n_color) divided by
// multinomial(d; per-color counts of the whole index). Cross-checks
// parameter_tensor.
MultiMatrix parameter_tensor_from_counts(int d, const std::vector<long long>& range_counts,
                                         const std::vector<long long>& color_counts,
                                         const std::vector<ColorRange>& ranges);

// Exact check of A ∘ P = P ∘ S.
bool verify_tensor_equation(const MultiMatrix& a, const MultiMatrix& p, const MultiMatrix& s);

// N ∘ S; symmetric for every parameter matrix of a perfect coloring.
MultiMatrix symmetrized(const MultiMatrix& s, const std::vector<long long>& n_counts);

// Builds a (multi)hypergraph and a perfect coloring realizing the given
// incidence parameters. Requires NV = W^T M with positive diagonals, and
// distinct range rows in W.
std::pair<Hypergraph, Coloring> construct_from_params(
    const std::vector<std::vector<long long>>& V, const std::vector<std::vector<long long>>& W,
    const std::vector<long long>& N, const std::vector<long long>& M);

Coloring monochromatic_coloring(int n);

} // namespace pchg
