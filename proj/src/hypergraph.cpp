#include "pchg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <thread>

namespace pchg {

Hypergraph Hypergraph::create(int n, std::vector<std::vector<int>> edges, bool multi_allowed) {
    if (n < 0) fail(errc::validation, "vertex count must be nonnegative");
    for (auto& e : edges) {
        if (e.empty()) fail(errc::validation, "hyperedges must be nonempty");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                fail(errc::validation,
                     "vertex id " + std::to_string(e[i]) + " out of range [0, " +
                         std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                fail(errc::validation,
                     "hyperedge contains repeated vertex " + std::to_string(e[i]));
        }
    }
    if (!multi_allowed) {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            fail(errc::validation, "repeated hyperedge requires the multi flag");
    }
    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    h.multi_allowed_ = multi_allowed;
    return h;
}

int Hypergraph::degree(int v) const {
    int deg = 0;
    for (const auto& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) ++deg;
    return deg;
}

std::vector<std::vector<int>> Hypergraph::incident_edges() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edges_[static_cast<std::size_t>(e)])
            inc[static_cast<std::size_t>(v)].push_back(e);
    return inc;
}

Matrix01 incidence_matrix(const Hypergraph& h) {
    Matrix01 b;
    b.rows = h.vertex_count();
    b.cols = h.edge_count();
    b.entries.assign(static_cast<std::size_t>(b.rows) * static_cast<std::size_t>(b.cols), 0);
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edge(e)) b.at(v, e) = 1;
    return b;
}

Hypergraph dual(const Hypergraph& h) {
    auto inc = h.incident_edges();
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (inc[static_cast<std::size_t>(v)].empty())
            fail(errc::validation,
                 "dual undefined: vertex " + std::to_string(v) + " is isolated");
        edges.push_back(inc[static_cast<std::size_t>(v)]);
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    return Hypergraph::create(h.edge_count(), std::move(edges), repeats);
}

Profile profile(const Hypergraph& h) {
    Profile p;
    for (const auto& e : h.edges()) p.sizes.push_back(static_cast<int>(e.size()));
    p.degrees.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const auto& e : h.edges())
        for (int v : e) ++p.degrees[static_cast<std::size_t>(v)];
    if (!p.sizes.empty() &&
        std::all_of(p.sizes.begin(), p.sizes.end(), [&](int s) { return s == p.sizes[0]; }))
        p.uniform_d = p.sizes[0];
    if (!p.degrees.empty() &&
        std::all_of(p.degrees.begin(), p.degrees.end(),
                    [&](int d) { return d == p.degrees[0]; }))
        p.regular_r = p.degrees[0];
    return p;
}

bool is_connected(const Hypergraph& h) {
    if (h.vertex_count() <= 1) return true;
    auto inc = h.incident_edges();
    std::vector<char> seen_v(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<char> seen_e(static_cast<std::size_t>(h.edge_count()), 0);
    std::queue<int> queue;
    queue.push(0);
    seen_v[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int e : inc[static_cast<std::size_t>(v)]) {
            if (seen_e[static_cast<std::size_t>(e)]) continue;
            seen_e[static_cast<std::size_t>(e)] = 1;
            for (int u : h.edge(e)) {
                if (seen_v[static_cast<std::size_t>(u)]) continue;
                seen_v[static_cast<std::size_t>(u)] = 1;
                ++reached;
                queue.push(u);
            }
        }
    }
    return reached == h.vertex_count();
}

Hypergraph incidence_graph(const Hypergraph& h) {
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edge(e)) edges.push_back({v, h.vertex_count() + e});
    return Hypergraph::create(h.vertex_count() + h.edge_count(), std::move(edges));
}

MultiMatrix adjacency_tensor(const Hypergraph& h) {
    Profile p = profile(h);
    if (!p.uniform_d)
        fail(errc::validation, "adjacency matrix requires a uniform hypergraph");
    const int d = *p.uniform_d;
    if (d < 2) fail(errc::validation, "adjacency matrix requires edge size at least 2");
    MultiMatrix a(d, h.vertex_count());
    const Rational weight = Rational(1) / factorial(d - 1);
    for (const auto& e : h.edges()) {
        std::vector<int> perm = e;
        do {
            a.at(perm) += weight;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return a;
}

namespace {

struct TransversalSearch {
    const Hypergraph& h;
    int k;
    std::vector<std::vector<int>> edges_of_vertex;
    // suffix[e][v] = number of vertices of edge e with id >= v
    std::vector<std::vector<int>> suffix;
    std::vector<int> count;
    std::vector<int> current;
    std::vector<std::vector<int>> found;

    TransversalSearch(const Hypergraph& hg, int kk) : h(hg), k(kk) {
        edges_of_vertex.assign(static_cast<std::size_t>(h.vertex_count()), {});
        for (int e = 0; e < h.edge_count(); ++e)
            for (int v : h.edge(e)) edges_of_vertex[static_cast<std::size_t>(v)].push_back(e);
        suffix.assign(static_cast<std::size_t>(h.edge_count()),
                      std::vector<int>(static_cast<std::size_t>(h.vertex_count()) + 1, 0));
        for (int e = 0; e < h.edge_count(); ++e)
            for (int v = h.vertex_count() - 1; v >= 0; --v)
                suffix[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)] =
                    suffix[static_cast<std::size_t>(e)][static_cast<std::size_t>(v) + 1] +
                    (std::binary_search(h.edge(e).begin(), h.edge(e).end(), v) ? 1 : 0);
        count.assign(static_cast<std::size_t>(h.edge_count()), 0);
    }

    bool feasible(int next) const {
        for (int e = 0; e < h.edge_count(); ++e) {
            int c = count[static_cast<std::size_t>(e)];
            if (c > k) return false;
            if (c + suffix[static_cast<std::size_t>(e)][static_cast<std::size_t>(next)] < k)
                return false;
        }
        return true;
    }

    bool satisfied() const {
        return std::all_of(count.begin(), count.end(), [&](int c) { return c == k; });
    }

    // Emits subsets in lexicographic order of their sorted vertex lists:
    // the current prefix first, then its extensions by ascending next vertex.
    void visit(int next) {
        if (satisfied()) found.push_back(current);
        for (int v = next; v < h.vertex_count(); ++v) {
            bool over = false;
            for (int e : edges_of_vertex[static_cast<std::size_t>(v)])
                if (count[static_cast<std::size_t>(e)] == k) {
                    over = true;
                    break;
                }
            if (over) continue;
            for (int e : edges_of_vertex[static_cast<std::size_t>(v)])
                ++count[static_cast<std::size_t>(e)];
            current.push_back(v);
            if (feasible(v + 1)) visit(v + 1);
            current.pop_back();
            for (int e : edges_of_vertex[static_cast<std::size_t>(v)])
                --count[static_cast<std::size_t>(e)];
        }
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_k_transversals(const Hypergraph& h, int k, int threads) {
    if (k < 1) fail(errc::validation, "transversal parameter k must be positive");
    if (h.vertex_count() > 30)
        fail(errc::guard, "transversal search supports at most 30 vertices");

    if (threads <= 1 || h.vertex_count() == 0) {
        TransversalSearch search(h, k);
        if (search.feasible(0)) search.visit(0);
        return std::move(search.found);
    }

    // Split by the first chosen vertex; lexicographic order is preserved by
    // concatenating branch results in order. The empty set is checked once.
    const int n = h.vertex_count();
    std::vector<std::vector<std::vector<int>>> branch(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> result;
    {
        TransversalSearch probe(h, k);
        if (probe.satisfied()) result.push_back({});
    }
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int v = w; v < n; v += workers) {
                TransversalSearch search(h, k);
                bool over = false;
                for (int e : search.edges_of_vertex[static_cast<std::size_t>(v)])
                    if (++search.count[static_cast<std::size_t>(e)] > k) over = true;
                if (over) continue;
                search.current.push_back(v);
                if (search.feasible(v + 1)) search.visit(v + 1);
                branch[static_cast<std::size_t>(v)] = std::move(search.found);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& part : branch)
        for (auto& subset : part) result.push_back(std::move(subset));
    return result;
}

Hypergraph complete_uniform(int n, int d) {
    if (d < 1 || d > n) fail(errc::validation, "complete hypergraph requires 1 <= d <= n");
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(static_cast<std::size_t>(d));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        edges.push_back(pick);
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Hypergraph::create(n, std::move(edges));
}

Hypergraph fano_hypergraph() {
    return Hypergraph::create(7, {{0, 1, 2},
                                  {0, 3, 4},
                                  {0, 5, 6},
                                  {1, 3, 5},
                                  {1, 4, 6},
                                  {2, 3, 6},
                                  {2, 4, 5}});
}

} // namespace pchg
