#include "pchg/covering.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace pchg {

namespace {

[[noreturn]] void not_covering(const std::string& what, const std::string& detail = {}) {
    if (detail.empty()) fail(errc::not_a_covering, "not a covering: " + what);
    fail(errc::not_a_covering, "not a covering: " + what, detail);
}

// Assigns each source hyperedge a target hyperedge id with the same vertex
// set so that ids are distinct around every source vertex. Candidate sets
// are per duplicate class; backtracking with a fewest-candidates-first pick
// resolves repeated target hyperedges.
bool assign_edges(const Hypergraph& g, const std::vector<std::vector<int>>& candidates,
                  std::vector<int>& assignment) {
    const int m = g.edge_count();
    std::vector<std::set<int>> used(static_cast<std::size_t>(g.vertex_count()));
    assignment.assign(static_cast<std::size_t>(m), -1);

    auto feasible = [&](int e, std::vector<int>& out) {
        out.clear();
        for (int u : candidates[static_cast<std::size_t>(e)]) {
            bool ok = true;
            for (int v : g.edge(e))
                if (used[static_cast<std::size_t>(v)].count(u)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(u);
        }
    };

    std::vector<int> options;
    std::function<bool(int)> solve = [&](int remaining) -> bool {
        if (remaining == 0) return true;
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        for (int e = 0; e < m; ++e) {
            if (assignment[static_cast<std::size_t>(e)] >= 0) continue;
            feasible(e, options);
            if (options.size() < best_count) {
                best_count = options.size();
                best = e;
                if (best_count <= 1) break;
            }
        }
        if (best_count == 0) return false;
        feasible(best, options);
        auto choices = options;
        for (int u : choices) {
            assignment[static_cast<std::size_t>(best)] = u;
            for (int v : g.edge(best)) used[static_cast<std::size_t>(v)].insert(u);
            if (solve(remaining - 1)) return true;
            for (int v : g.edge(best)) used[static_cast<std::size_t>(v)].erase(u);
            assignment[static_cast<std::size_t>(best)] = -1;
        }
        return false;
    };
    return solve(m);
}

} // namespace

CoveringCheck verify_covering(const Hypergraph& g, const Hypergraph& h, const CoveringMap& map) {
    const auto& phi = map.phi;
    if (static_cast<int>(phi.size()) != g.vertex_count())
        fail(errc::validation, "covering map length does not match source vertex count");
    for (int p : phi)
        if (p < 0 || p >= h.vertex_count())
            fail(errc::validation, "covering map value out of target range");
    if (h.vertex_count() == 0) fail(errc::validation, "covering target has no vertices");

    std::vector<int> fiber(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int p : phi) ++fiber[static_cast<std::size_t>(p)];
    const int k = fiber[0];
    for (int y = 0; y < h.vertex_count(); ++y)
        if (fiber[static_cast<std::size_t>(y)] != k || k == 0)
            not_covering("vertex fibers have unequal sizes (vertex " + std::to_string(y) + ")");
    if (g.edge_count() != k * h.edge_count())
        not_covering("hyperedge count is not k times the covered hyperedge count");

    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.degree(x) != h.degree(phi[static_cast<std::size_t>(x)]))
            not_covering("vertex " + std::to_string(x) + " has degree " +
                             std::to_string(g.degree(x)) + ", its image has degree " +
                             std::to_string(h.degree(phi[static_cast<std::size_t>(x)])),
                         "{\"witness_vertex\": " + std::to_string(x) + "}");

    // Group target hyperedges by vertex set; repeated hyperedges share a class.
    std::map<std::vector<int>, std::vector<int>> target_class;
    for (int u = 0; u < h.edge_count(); ++u) target_class[h.edge(u)].push_back(u);

    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(g.edge_count()));
    std::map<std::vector<int>, int> image_count;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> image;
        image.reserve(g.edge(e).size());
        for (int v : g.edge(e)) image.push_back(phi[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            not_covering("hyperedge " + std::to_string(e) + " maps two vertices to one target",
                         "{\"witness_edge\": " + std::to_string(e) + "}");
        auto it = target_class.find(image);
        if (it == target_class.end())
            not_covering("image of hyperedge " + std::to_string(e) +
                             " is not a covered hyperedge",
                         "{\"witness_edge\": " + std::to_string(e) + "}");
        candidates[static_cast<std::size_t>(e)] = it->second;
        ++image_count[image];
    }
    for (const auto& [set, ids] : target_class)
        if (image_count[set] != k * static_cast<int>(ids.size()))
            not_covering("hyperedge fibers have unequal sizes");

    CoveringCheck check;
    check.k = k;
    if (!assign_edges(g, candidates, check.edge_map))
        not_covering("no hyperedge correspondence is bijective around every vertex");

    // Permutation-block decomposition of the source incidence matrix: order
    // vertices by (phi, id) and hyperedges by (assigned id, id); the block at
    // (y, u) must be a k x k permutation matrix when y is in u, zero otherwise.
    std::vector<int> vslot(static_cast<std::size_t>(g.vertex_count()), -1);
    {
        std::vector<int> seen(static_cast<std::size_t>(h.vertex_count()), 0);
        for (int x = 0; x < g.vertex_count(); ++x)
            vslot[static_cast<std::size_t>(x)] = seen[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])]++;
    }
    std::vector<int> eslot(static_cast<std::size_t>(g.edge_count()), -1);
    {
        std::vector<int> seen(static_cast<std::size_t>(h.edge_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            eslot[static_cast<std::size_t>(e)] =
                seen[static_cast<std::size_t>(check.edge_map[static_cast<std::size_t>(e)])]++;
    }
    std::vector<std::vector<std::pair<int, int>>> block(
        static_cast<std::size_t>(h.vertex_count()) * static_cast<std::size_t>(h.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        for (int x : g.edge(e)) {
            std::size_t cell = static_cast<std::size_t>(phi[static_cast<std::size_t>(x)]) *
                                   static_cast<std::size_t>(h.edge_count()) +
                               static_cast<std::size_t>(check.edge_map[static_cast<std::size_t>(e)]);
            block[cell].push_back({vslot[static_cast<std::size_t>(x)],
                                   eslot[static_cast<std::size_t>(e)]});
        }
    auto b_target = incidence_matrix(h);
    for (int y = 0; y < h.vertex_count(); ++y)
        for (int u = 0; u < h.edge_count(); ++u) {
            const auto& ones = block[static_cast<std::size_t>(y) *
                                         static_cast<std::size_t>(h.edge_count()) +
                                     static_cast<std::size_t>(u)];
            if (!b_target.at(y, u)) {
                if (!ones.empty()) fail(errc::internal, "nonzero block over a zero incidence");
                continue;
            }
            if (static_cast<int>(ones.size()) != k)
                fail(errc::internal, "incidence block is not a permutation matrix");
            std::vector<char> row(static_cast<std::size_t>(k), 0), col(static_cast<std::size_t>(k), 0);
            for (auto [r, c] : ones) {
                if (row[static_cast<std::size_t>(r)]++ || col[static_cast<std::size_t>(c)]++)
                    fail(errc::internal, "incidence block is not a permutation matrix");
            }
        }
    return check;
}

std::pair<Coloring, MultiMatrix> covering_as_coloring(const Hypergraph& g, const Hypergraph& h,
                                                      const CoveringMap& map) {
    verify_covering(g, h, map);
    Coloring by_target = Coloring::create(map.phi);
    MultiMatrix s = parameter_tensor(g, by_target);
    if (!(s == adjacency_tensor(h)))
        fail(errc::internal, "covering parameter matrix differs from the target adjacency");
    return {std::move(by_target), std::move(s)};
}

namespace {

long long lcm_guarded(long long a, long long b) {
    long long g = std::gcd(a, b);
    long long result;
    if (__builtin_mul_overflow(a / g, b, &result) || result > 1'000'000'000'000LL)
        fail(errc::guard, "common cover plan exceeds the size guard");
    return result;
}

struct SideData {
    std::vector<std::vector<int>> vertices_of_color; // ascending ids per color
    std::vector<std::vector<int>> edges_of_range;    // ascending ids per range
    std::vector<int> vrank;                          // rank of vertex within its color
    std::vector<int> erank;                          // rank of edge within its range
    // mu[(edge, vertex)] = rank of vertex among same-colored vertices of edge;
    // nu[(vertex, edge)] = rank of edge among same-ranged edges at vertex.
    std::map<std::pair<int, int>, int> mu, nu;
};

SideData side_data(const Hypergraph& h, const Coloring& f, const std::vector<int>& edge_range) {
    SideData data;
    const int k = f.color_count();
    int l = 0;
    for (int r : edge_range) l = std::max(l, r + 1);
    data.vertices_of_color.resize(static_cast<std::size_t>(k));
    data.vrank.resize(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto& bucket = data.vertices_of_color[static_cast<std::size_t>(f.color(v))];
        data.vrank[static_cast<std::size_t>(v)] = static_cast<int>(bucket.size());
        bucket.push_back(v);
    }
    data.edges_of_range.resize(static_cast<std::size_t>(l));
    data.erank.resize(static_cast<std::size_t>(h.edge_count()));
    for (int e = 0; e < h.edge_count(); ++e) {
        auto& bucket = data.edges_of_range[static_cast<std::size_t>(edge_range[static_cast<std::size_t>(e)])];
        data.erank[static_cast<std::size_t>(e)] = static_cast<int>(bucket.size());
        bucket.push_back(e);
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        std::map<int, int> per_color;
        for (int v : h.edge(e)) data.mu[{e, v}] = per_color[f.color(v)]++;
    }
    std::vector<std::map<int, int>> per_range(static_cast<std::size_t>(h.vertex_count()));
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edge(e))
            data.nu[{v, e}] =
                per_range[static_cast<std::size_t>(v)][edge_range[static_cast<std::size_t>(e)]]++;
    return data;
}

} // namespace

CommonCover common_cover(const Hypergraph& h1, const Coloring& f1, const Hypergraph& h2,
                         const Coloring& f2) {
    if (!is_connected(h1) || !is_connected(h2))
        fail(errc::validation, "common cover requires connected hypergraphs");
    IncidenceParams p1 = incidence_parameters(h1, f1);
    IncidenceParams p2 = incidence_parameters(h2, f2);
    if (p1.V != p2.V || p1.W != p2.W || p1.ranges != p2.ranges)
        fail(errc::validation, "the colorings have different incidence parameters");

    const int k = static_cast<int>(p1.N.size());
    const int l = static_cast<int>(p1.M.size());

    if (l == 0) {
        // Connected and edgeless means a single vertex on both sides.
        CommonCover cc{Hypergraph::create(1, {}, true), CoveringMap{{0}}, CoveringMap{{0}}, {}, {}};
        return cc;
    }

    long long plan = 1, plan2 = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            long long v = p1.V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v == 0) continue;
            plan = lcm_guarded(plan, p1.N[static_cast<std::size_t>(i)] * v);
            plan2 = lcm_guarded(plan2, p2.N[static_cast<std::size_t>(i)] * v);
        }
    std::vector<long long> t(static_cast<std::size_t>(k)), s(static_cast<std::size_t>(l));
    for (int i = 0; i < k; ++i) {
        t[static_cast<std::size_t>(i)] = plan / p1.N[static_cast<std::size_t>(i)];
        if (plan % p1.N[static_cast<std::size_t>(i)] != 0 ||
            t[static_cast<std::size_t>(i)] != plan2 / p2.N[static_cast<std::size_t>(i)] ||
            plan2 % p2.N[static_cast<std::size_t>(i)] != 0)
            fail(errc::internal, "cover plan slot counts disagree between the two sides");
    }
    for (int j = 0; j < l; ++j) {
        s[static_cast<std::size_t>(j)] = plan / p1.M[static_cast<std::size_t>(j)];
        if (plan % p1.M[static_cast<std::size_t>(j)] != 0 ||
            s[static_cast<std::size_t>(j)] != plan2 / p2.M[static_cast<std::size_t>(j)] ||
            plan2 % p2.M[static_cast<std::size_t>(j)] != 0)
            fail(errc::internal, "cover plan slot counts disagree between the two sides");
    }

    auto range_index = [&](const IncidenceParams& params, const Hypergraph& h, const Coloring& f) {
        auto ranges = color_ranges(h, f);
        std::map<ColorRange, int> label;
        for (int j = 0; j < l; ++j) label[params.ranges[static_cast<std::size_t>(j)]] = j;
        std::vector<int> out(static_cast<std::size_t>(h.edge_count()));
        for (int e = 0; e < h.edge_count(); ++e) out[static_cast<std::size_t>(e)] = label[ranges[static_cast<std::size_t>(e)]];
        return out;
    };
    std::vector<int> range1 = range_index(p1, h1, f1);
    std::vector<int> range2 = range_index(p2, h2, f2);
    SideData d1 = side_data(h1, f1, range1);
    SideData d2 = side_data(h2, f2, range2);

    std::vector<long long> vertex_base(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i)
        vertex_base[static_cast<std::size_t>(i) + 1] =
            vertex_base[static_cast<std::size_t>(i)] +
            t[static_cast<std::size_t>(i)] * p1.N[static_cast<std::size_t>(i)] *
                p2.N[static_cast<std::size_t>(i)];
    std::vector<long long> edge_base(static_cast<std::size_t>(l) + 1, 0);
    for (int j = 0; j < l; ++j)
        edge_base[static_cast<std::size_t>(j) + 1] =
            edge_base[static_cast<std::size_t>(j)] +
            s[static_cast<std::size_t>(j)] * p1.M[static_cast<std::size_t>(j)] *
                p2.M[static_cast<std::size_t>(j)];
    const long long n_total = vertex_base[static_cast<std::size_t>(k)];
    const long long m_total = edge_base[static_cast<std::size_t>(l)];
    if (n_total > 10'000'000 || m_total > 10'000'000)
        fail(errc::guard, "common cover exceeds the size guard");

    auto vid = [&](int i, int x, int x2, long long slot) {
        return vertex_base[static_cast<std::size_t>(i)] +
               (static_cast<long long>(d1.vrank[static_cast<std::size_t>(x)]) *
                    p2.N[static_cast<std::size_t>(i)] +
                d2.vrank[static_cast<std::size_t>(x2)]) *
                   t[static_cast<std::size_t>(i)] +
               slot;
    };
    auto eid = [&](int j, int e, int e2, long long slot) {
        return edge_base[static_cast<std::size_t>(j)] +
               (static_cast<long long>(d1.erank[static_cast<std::size_t>(e)]) *
                    p2.M[static_cast<std::size_t>(j)] +
                d2.erank[static_cast<std::size_t>(e2)]) *
                   s[static_cast<std::size_t>(j)] +
               slot;
    };

    std::vector<std::vector<int>> edges(static_cast<std::size_t>(m_total));

    // Block rule: for incident pairs (x in e, x' in e') of the same color i
    // and range j, the slot pairing is sigma = nu - nu' (mod v) stepped by v
    // against delta = mu - mu' (mod w) stepped by w, one 1 per designated
    // row and column.
    for (int j = 0; j < l; ++j) {
        for (int e : d1.edges_of_range[static_cast<std::size_t>(j)])
            for (int e2 : d2.edges_of_range[static_cast<std::size_t>(j)])
                for (int x : h1.edge(e))
                    for (int x2 : h2.edge(e2)) {
                        const int i = f1.color(x);
                        if (f2.color(x2) != i) continue;
                        const long long v = p1.V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        const long long w = p1.W[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                        const long long copies =
                            t[static_cast<std::size_t>(i)] / v; // = s_j / w
                        long long sigma = ((d1.nu[{x, e}] - d2.nu[{x2, e2}]) % v + v) % v;
                        long long delta = ((d1.mu[{e, x}] - d2.mu[{e2, x2}]) % w + w) % w;
                        for (long long c = 0; c < copies; ++c) {
                            long long vertex = vid(i, x, x2, sigma + c * v);
                            long long edge = eid(j, e, e2, delta + c * w);
                            edges[static_cast<std::size_t>(edge)].push_back(
                                static_cast<int>(vertex));
                        }
                    }
    }

    CommonCover cc{Hypergraph::create(static_cast<int>(n_total), std::move(edges), true),
                   CoveringMap{}, CoveringMap{}, {}, {}};
    cc.phi1.phi.resize(static_cast<std::size_t>(n_total));
    cc.phi2.phi.resize(static_cast<std::size_t>(n_total));
    for (int i = 0; i < k; ++i)
        for (int x : d1.vertices_of_color[static_cast<std::size_t>(i)])
            for (int x2 : d2.vertices_of_color[static_cast<std::size_t>(i)])
                for (long long slot = 0; slot < t[static_cast<std::size_t>(i)]; ++slot) {
                    long long id = vid(i, x, x2, slot);
                    cc.phi1.phi[static_cast<std::size_t>(id)] = x;
                    cc.phi2.phi[static_cast<std::size_t>(id)] = x2;
                }
    cc.edge_map1.resize(static_cast<std::size_t>(m_total));
    cc.edge_map2.resize(static_cast<std::size_t>(m_total));
    for (int j = 0; j < l; ++j)
        for (int e : d1.edges_of_range[static_cast<std::size_t>(j)])
            for (int e2 : d2.edges_of_range[static_cast<std::size_t>(j)])
                for (long long slot = 0; slot < s[static_cast<std::size_t>(j)]; ++slot) {
                    long long id = eid(j, e, e2, slot);
                    cc.edge_map1[static_cast<std::size_t>(id)] = e;
                    cc.edge_map2[static_cast<std::size_t>(id)] = e2;
                }
    return cc;
}

MultipartiteCover multipartite_cover(const Hypergraph& h) {
    Profile prof = profile(h);
    if (!prof.uniform_d || !prof.regular_r)
        fail(errc::validation, "multipartite cover requires a uniform regular hypergraph");
    if (!is_connected(h)) fail(errc::validation, "multipartite cover requires a connected hypergraph");
    const int d = *prof.uniform_d;
    const int r = *prof.regular_r;

    std::vector<int> all(static_cast<std::size_t>(d));
    std::iota(all.begin(), all.end(), 0);
    Hypergraph f = Hypergraph::create(
        d, std::vector<std::vector<int>>(static_cast<std::size_t>(r), all), true);

    CommonCover cc = common_cover(h, monochromatic_coloring(h.vertex_count()), f,
                                  monochromatic_coloring(d));

    MultipartiteCover out{std::move(cc.cover), std::move(cc.phi1), {}, {}};
    out.parts.resize(static_cast<std::size_t>(d));
    for (int x = 0; x < out.cover.vertex_count(); ++x)
        out.parts[static_cast<std::size_t>(cc.phi2.phi[static_cast<std::size_t>(x)])].push_back(x);
    out.matchings.resize(static_cast<std::size_t>(r));
    for (int e = 0; e < out.cover.edge_count(); ++e)
        out.matchings[static_cast<std::size_t>(cc.edge_map2[static_cast<std::size_t>(e)])].push_back(e);
    return out;
}

Coloring lift_coloring(const CoveringMap& phi, const Coloring& f) {
    std::vector<int> lifted(phi.phi.size());
    for (std::size_t x = 0; x < phi.phi.size(); ++x) {
        if (phi.phi[x] < 0 || phi.phi[x] >= f.size())
            fail(errc::validation, "covering map value out of coloring range");
        lifted[x] = f.color(phi.phi[x]);
    }
    return Coloring::create(std::move(lifted));
}

} // namespace pchg
