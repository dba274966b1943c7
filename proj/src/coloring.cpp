#include "pchg/coloring.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pchg {

Coloring Coloring::create(std::vector<int> colors) {
    int k = 0;
    for (int c : colors) {
        if (c < 0) fail(errc::validation, "colors must be nonnegative");
        k = std::max(k, c + 1);
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int c : colors) seen[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < k; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            fail(errc::validation, "coloring is not surjective: color " + std::to_string(c) +
                                       " unused");
    Coloring f;
    f.colors_ = std::move(colors);
    f.k_ = k;
    return f;
}

std::vector<long long> Coloring::class_sizes() const {
    std::vector<long long> sizes(static_cast<std::size_t>(k_), 0);
    for (int c : colors_) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

Coloring monochromatic_coloring(int n) {
    return Coloring::create(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<ColorRange> color_ranges(const Hypergraph& h, const Coloring& f) {
    if (f.size() != h.vertex_count())
        fail(errc::validation, "coloring length does not match vertex count");
    std::vector<ColorRange> ranges;
    ranges.reserve(static_cast<std::size_t>(h.edge_count()));
    for (const auto& e : h.edges()) {
        ColorRange r;
        r.reserve(e.size());
        for (int v : e) r.push_back(f.color(v));
        std::sort(r.begin(), r.end());
        ranges.push_back(std::move(r));
    }
    return ranges;
}

IncidenceParams incidence_parameters(const Hypergraph& h, const Coloring& f) {
    auto edge_ranges = color_ranges(h, f);
    const int k = f.color_count();

    // Canonical range labels: distinct ranges in sorted lexicographic order.
    std::map<ColorRange, int> label;
    for (const auto& r : edge_ranges) label.emplace(r, 0);
    int l = 0;
    for (auto& [range, idx] : label) idx = l++;

    IncidenceParams params;
    params.ranges.resize(static_cast<std::size_t>(l));
    params.M.assign(static_cast<std::size_t>(l), 0);
    for (const auto& [range, idx] : label) params.ranges[static_cast<std::size_t>(idx)] = range;
    for (const auto& r : edge_ranges) ++params.M[static_cast<std::size_t>(label[r])];

    // Per-vertex range signatures; perfectness means they agree per color.
    std::vector<std::vector<long long>> signature(
        static_cast<std::size_t>(h.vertex_count()),
        std::vector<long long>(static_cast<std::size_t>(l), 0));
    for (int e = 0; e < h.edge_count(); ++e) {
        int idx = label[edge_ranges[static_cast<std::size_t>(e)]];
        for (int v : h.edge(e)) ++signature[static_cast<std::size_t>(v)][static_cast<std::size_t>(idx)];
    }

    std::vector<int> representative(static_cast<std::size_t>(k), -1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        int c = f.color(v);
        int& rep = representative[static_cast<std::size_t>(c)];
        if (rep < 0) {
            rep = v;
        } else if (signature[static_cast<std::size_t>(rep)] !=
                   signature[static_cast<std::size_t>(v)]) {
            fail(errc::not_perfect,
                 "coloring is not perfect: vertices " + std::to_string(rep) + " and " +
                     std::to_string(v) + " have color " + std::to_string(c) +
                     " but different range multisets",
                 "{\"witness\": [" + std::to_string(rep) + ", " + std::to_string(v) + "]}");
        }
    }

    params.V.assign(static_cast<std::size_t>(k), {});
    for (int c = 0; c < k; ++c)
        params.V[static_cast<std::size_t>(c)] =
            signature[static_cast<std::size_t>(representative[static_cast<std::size_t>(c)])];
    params.W.assign(static_cast<std::size_t>(l),
                    std::vector<long long>(static_cast<std::size_t>(k), 0));
    for (int j = 0; j < l; ++j)
        for (int c : params.ranges[static_cast<std::size_t>(j)])
            ++params.W[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    params.N = f.class_sizes();
    return params;
}

bool is_perfect(const Hypergraph& h, const Coloring& f) {
    try {
        incidence_parameters(h, f);
        return true;
    } catch (const error& err) {
        if (err.code() == errc::not_perfect) return false;
        throw;
    }
}

MultiMatrix color_matrix(const Coloring& f) {
    MultiMatrix p(std::vector<int>{f.size(), f.color_count()});
    for (int v = 0; v < f.size(); ++v) p.at({v, f.color(v)}) = Rational(1);
    return p;
}

MultiMatrix parameter_tensor(const Hypergraph& h, const Coloring& f) {
    Profile prof = profile(h);
    if (!prof.uniform_d)
        fail(errc::validation, "parameter matrix requires a uniform hypergraph");
    const int d = *prof.uniform_d;
    IncidenceParams params = incidence_parameters(h, f);
    const int k = f.color_count();

    std::map<ColorRange, int> label;
    for (int j = 0; j < static_cast<int>(params.ranges.size()); ++j)
        label[params.ranges[static_cast<std::size_t>(j)]] = j;

    MultiMatrix s(d, k);
    std::vector<int> index;
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        s.unflatten(flat, index);
        ColorRange range = index;
        std::sort(range.begin(), range.end());
        auto it = label.find(range);
        if (it == label.end()) continue;
        long long v = params.V[static_cast<std::size_t>(index[0])][static_cast<std::size_t>(it->second)];
        if (v == 0) continue;
        std::vector<long long> tail_counts(static_cast<std::size_t>(k), 0);
        for (std::size_t pos = 1; pos < index.size(); ++pos)
            ++tail_counts[static_cast<std::size_t>(index[pos])];
        s[flat] = Rational(v) / multinomial(d - 1, tail_counts);
    }
    return s;
}

MultiMatrix parameter_tensor_from_counts(int d, const std::vector<long long>& range_counts,
                                         const std::vector<long long>& color_counts,
                                         const std::vector<ColorRange>& ranges) {
    if (range_counts.size() != ranges.size())
        fail(errc::validation, "range count list does not match range labels");
    const int k = static_cast<int>(color_counts.size());
    for (long long n : color_counts)
        if (n <= 0) fail(errc::validation, "color counts must be positive");
    for (long long m : range_counts)
        if (m <= 0) fail(errc::validation, "range counts must be positive");

    std::map<ColorRange, int> label;
    for (int j = 0; j < static_cast<int>(ranges.size()); ++j) {
        const auto& r = ranges[static_cast<std::size_t>(j)];
        if (static_cast<int>(r.size()) != d)
            fail(errc::validation, "range size does not match edge size d");
        if (!std::is_sorted(r.begin(), r.end()))
            fail(errc::validation, "range labels must be sorted");
        for (int c : r)
            if (c < 0 || c >= k) fail(errc::validation, "range color out of range");
        if (!label.emplace(r, j).second)
            fail(errc::validation, "range labels must be distinct");
    }

    // Consistency: the implied XE counts w * m / n must be integers.
    for (const auto& [range, j] : label) {
        std::vector<long long> w(static_cast<std::size_t>(k), 0);
        for (int c : range) ++w[static_cast<std::size_t>(c)];
        for (int c = 0; c < k; ++c) {
            if (w[static_cast<std::size_t>(c)] == 0) continue;
            long long num = w[static_cast<std::size_t>(c)] * range_counts[static_cast<std::size_t>(j)];
            if (num % color_counts[static_cast<std::size_t>(c)] != 0)
                fail(errc::validation, "inconsistent counts: implied XE parameters not integral");
        }
    }

    MultiMatrix s(d, k);
    std::vector<int> index;
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        s.unflatten(flat, index);
        ColorRange range = index;
        std::sort(range.begin(), range.end());
        auto it = label.find(range);
        if (it == label.end()) continue;
        std::vector<long long> w(static_cast<std::size_t>(k), 0);
        for (int c : index) ++w[static_cast<std::size_t>(c)];
        Rational value = Rational(d) *
                         Rational(range_counts[static_cast<std::size_t>(it->second)],
                                  color_counts[static_cast<std::size_t>(index[0])]) /
                         multinomial(d, w);
        s[flat] = value;
    }
    return s;
}

bool verify_tensor_equation(const MultiMatrix& a, const MultiMatrix& p, const MultiMatrix& s) {
    if (p.dim() != 2) fail(errc::validation, "color matrix must be 2-dimensional");
    if (!a.cubical() || !s.cubical())
        fail(errc::validation, "tensor equation requires cubical operands");
    if (a.order() != p.extent(0) || s.order() != p.extent(1) || a.dim() != s.dim())
        fail(errc::validation, "tensor equation operands have mismatched shapes");
    return mm_product(a, p) == mm_product(p, s);
}

MultiMatrix symmetrized(const MultiMatrix& s, const std::vector<long long>& n_counts) {
    if (!s.cubical() || s.order() != static_cast<int>(n_counts.size()))
        fail(errc::validation, "count diagonal does not match matrix order");
    return mm_product(diagonal_matrix(n_counts), s);
}

std::pair<Hypergraph, Coloring> construct_from_params(
    const std::vector<std::vector<long long>>& V, const std::vector<std::vector<long long>>& W,
    const std::vector<long long>& N, const std::vector<long long>& M) {
    const int k = static_cast<int>(V.size());
    const int l = static_cast<int>(W.size());
    if (k == 0 || static_cast<int>(N.size()) != k)
        fail(errc::validation, "V and N must describe the same colors");
    if (static_cast<int>(M.size()) != l)
        fail(errc::validation, "W and M must describe the same ranges");
    for (const auto& row : V)
        if (static_cast<int>(row.size()) != l)
            fail(errc::validation, "V must be k x l");
    for (const auto& row : W)
        if (static_cast<int>(row.size()) != k)
            fail(errc::validation, "W must be l x k");
    for (long long n : N)
        if (n <= 0) fail(errc::validation, "diagonal entries of N must be positive");
    for (long long m : M)
        if (m <= 0) fail(errc::validation, "diagonal entries of M must be positive");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            long long v = V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            long long w = W[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (v < 0 || w < 0) fail(errc::validation, "parameters must be nonnegative");
            if (N[static_cast<std::size_t>(i)] * v != w * M[static_cast<std::size_t>(j)])
                fail(errc::validation,
                     "count consistency N*V = W^T*M violated at color " + std::to_string(i) +
                         ", range " + std::to_string(j));
            if (v > M[static_cast<std::size_t>(j)])
                fail(errc::validation, "XE parameter exceeds the number of range-" +
                                           std::to_string(j) + " hyperedges");
            if (w > N[static_cast<std::size_t>(i)])
                fail(errc::validation, "EX parameter exceeds the number of color-" +
                                           std::to_string(i) + " vertices");
        }
    for (int j = 0; j < l; ++j) {
        long long size = 0;
        for (int i = 0; i < k; ++i) size += W[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (size == 0)
            fail(errc::validation, "range " + std::to_string(j) + " would give empty hyperedges");
        for (int jj = 0; jj < j; ++jj)
            if (W[static_cast<std::size_t>(j)] == W[static_cast<std::size_t>(jj)])
                fail(errc::validation, "ranges must be distinct color multisets");
    }

    std::vector<long long> vertex_base(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i)
        vertex_base[static_cast<std::size_t>(i) + 1] =
            vertex_base[static_cast<std::size_t>(i)] + N[static_cast<std::size_t>(i)];
    std::vector<long long> edge_base(static_cast<std::size_t>(l) + 1, 0);
    for (int j = 0; j < l; ++j)
        edge_base[static_cast<std::size_t>(j) + 1] =
            edge_base[static_cast<std::size_t>(j)] + M[static_cast<std::size_t>(j)];

    const long long n_total = vertex_base[static_cast<std::size_t>(k)];
    const long long m_total = edge_base[static_cast<std::size_t>(l)];
    std::vector<std::vector<int>> edges(static_cast<std::size_t>(m_total));

    // Block fill: position z in [0, n_i * v) maps to row z / v, column
    // z mod m_j. Rows get v consecutive residues (distinct since v <= m_j);
    // columns receive exactly w ones since z spans w * m_j integers.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            long long v = V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v == 0) continue;
            long long mj = M[static_cast<std::size_t>(j)];
            for (long long z = 0; z < N[static_cast<std::size_t>(i)] * v; ++z) {
                long long row = vertex_base[static_cast<std::size_t>(i)] + z / v;
                long long col = edge_base[static_cast<std::size_t>(j)] + z % mj;
                edges[static_cast<std::size_t>(col)].push_back(static_cast<int>(row));
            }
        }

    std::vector<int> colors(static_cast<std::size_t>(n_total));
    for (int i = 0; i < k; ++i)
        for (long long z = vertex_base[static_cast<std::size_t>(i)];
             z < vertex_base[static_cast<std::size_t>(i) + 1]; ++z)
            colors[static_cast<std::size_t>(z)] = i;

    Hypergraph h = Hypergraph::create(static_cast<int>(n_total), std::move(edges), true);
    return {std::move(h), Coloring::create(std::move(colors))};
}

} // namespace pchg
