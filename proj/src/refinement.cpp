#include "pchg/refinement.hpp"

#include <algorithm>
#include <map>

namespace pchg {

bool is_refinement(const Coloring& f, const Coloring& g) {
    if (f.size() != g.size()) fail(errc::validation, "colorings have different lengths");
    std::vector<int> image(static_cast<std::size_t>(f.color_count()), -1);
    for (int v = 0; v < f.size(); ++v) {
        int& target = image[static_cast<std::size_t>(f.color(v))];
        if (target < 0)
            target = g.color(v);
        else if (target != g.color(v))
            return false;
    }
    return true;
}

Coloring wl_refine(const Hypergraph& h, const Coloring& seed) {
    if (seed.size() != h.vertex_count())
        fail(errc::validation, "seed coloring length does not match vertex count");
    const int n = h.vertex_count();
    const int m = h.edge_count();
    auto inc = h.incident_edges();

    // Node ids: 0..n-1 vertices, n..n+m-1 hyperedges, with disjoint color
    // namespaces kept by seeding edge colors above the vertex ones.
    std::vector<int> color(static_cast<std::size_t>(n + m));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = seed.color(v);
    {
        auto ranges = color_ranges(h, seed);
        std::map<ColorRange, int> range_id;
        for (const auto& r : ranges) range_id.emplace(r, 0);
        int next = seed.color_count();
        for (auto& [range, id] : range_id) id = next++;
        for (int e = 0; e < m; ++e)
            color[static_cast<std::size_t>(n + e)] = range_id[ranges[static_cast<std::size_t>(e)]];
    }

    auto count_classes = [&]() {
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    };

    long long classes = count_classes();
    while (true) {
        // Signature: own color plus the sorted multiset of neighbor colors in
        // the incidence graph.
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        std::vector<std::pair<int, std::vector<int>>> signature(
            static_cast<std::size_t>(n + m));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(inc[static_cast<std::size_t>(v)].size());
            for (int e : inc[static_cast<std::size_t>(v)])
                nb.push_back(color[static_cast<std::size_t>(n + e)]);
            std::sort(nb.begin(), nb.end());
            signature[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)],
                                                      std::move(nb)};
        }
        for (int e = 0; e < m; ++e) {
            std::vector<int> nb;
            nb.reserve(h.edge(e).size());
            for (int v : h.edge(e)) nb.push_back(color[static_cast<std::size_t>(v)]);
            std::sort(nb.begin(), nb.end());
            signature[static_cast<std::size_t>(n + e)] = {color[static_cast<std::size_t>(n + e)],
                                                          std::move(nb)};
        }
        int fresh = 0;
        for (int node = 0; node < n + m; ++node) {
            auto [it, inserted] =
                next_id.emplace(signature[static_cast<std::size_t>(node)], fresh);
            if (inserted) ++fresh;
            color[static_cast<std::size_t>(node)] = it->second;
        }
        long long refined = count_classes();
        if (refined == classes) break;
        classes = refined;
    }

    // Renumber the vertex part by first occurrence.
    std::map<int, int> relabel;
    std::vector<int> result(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        auto [it, inserted] = relabel.emplace(color[static_cast<std::size_t>(v)], next);
        if (inserted) ++next;
        result[static_cast<std::size_t>(v)] = it->second;
    }
    return Coloring::create(std::move(result));
}

} // namespace pchg
