#include <doctest.h>

#include <numeric>
#include <set>

#include "pchg/covering.hpp"

using namespace pchg;

namespace {

CoveringMap identity_map(int n) {
    CoveringMap phi;
    phi.phi.resize(static_cast<std::size_t>(n));
    std::iota(phi.phi.begin(), phi.phi.end(), 0);
    return phi;
}

// Covering of the incidence graphs induced by a verified covering.
void check_incidence_graph_covering(const Hypergraph& g, const Hypergraph& h,
                                    const CoveringMap& phi, const std::vector<int>& edge_map) {
    CoveringMap induced;
    induced.phi = phi.phi;
    for (int e : edge_map) induced.phi.push_back(h.vertex_count() + e);
    CoveringCheck check = verify_covering(incidence_graph(g), incidence_graph(h), induced);
    CHECK(check.k * h.vertex_count() == g.vertex_count());
}

} // namespace

TEST_CASE("identity covering") {
    Hypergraph fano = fano_hypergraph();
    CoveringCheck check = verify_covering(fano, fano, identity_map(7));
    CHECK(check.k == 1);
    std::vector<int> ids(7);
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(check.edge_map == ids);
    check_incidence_graph_covering(fano, fano, identity_map(7), check.edge_map);

    auto [coloring, tensor] = covering_as_coloring(fano, fano, identity_map(7));
    CHECK(coloring.color_count() == 7);
    CHECK(tensor == adjacency_tensor(fano));
}

TEST_CASE("collapsing adjacent vertices is not a covering") {
    Hypergraph fano = fano_hypergraph();
    CoveringMap squash = identity_map(7);
    squash.phi[1] = 0; // vertices 0 and 1 share a line
    bool rejected = false;
    try {
        verify_covering(fano, fano, squash);
    } catch (const error& e) {
        rejected = e.code() == errc::not_a_covering;
    }
    CHECK(rejected);
}

TEST_CASE("unequal fibers are rejected") {
    Hypergraph pair = Hypergraph::create(2, {});
    Hypergraph point = Hypergraph::create(1, {});
    Hypergraph triple = Hypergraph::create(3, {});
    CHECK_THROWS_AS(verify_covering(triple, pair, CoveringMap{{0, 0, 1}, {}, {}}), error);
    CHECK(verify_covering(pair, point, CoveringMap{{0, 0}, {}, {}}).k == 2);
}

TEST_CASE("doubled edge target needs a proper 2-factorization") {
    // C6 with alternating map covers the doubled edge on two vertices...
    Hypergraph doubled = Hypergraph::create(2, {{0, 1}, {0, 1}}, true);
    Hypergraph c6 = Hypergraph::create(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CoveringMap alternating{{0, 1, 0, 1, 0, 1}, {}, {}};
    CoveringCheck check = verify_covering(c6, doubled, alternating);
    CHECK(check.k == 3);
    check_incidence_graph_covering(c6, doubled, alternating, check.edge_map);

    // ...but a tripartite 2-regular gadget with no perfect matching does not
    // cover the doubled 3-edge, even though all local counts agree.
    Hypergraph doubled3 = Hypergraph::create(3, {{0, 1, 2}, {0, 1, 2}}, true);
    Hypergraph gadget = Hypergraph::create(
        6, {{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}});
    CoveringMap layered{{0, 0, 1, 1, 2, 2}, {}, {}};
    bool rejected = false;
    try {
        verify_covering(gadget, doubled3, layered);
    } catch (const error& e) {
        rejected = e.code() == errc::not_a_covering;
    }
    CHECK(rejected);
}

TEST_CASE("trivial common cover of a single edge with itself") {
    Hypergraph edge = Hypergraph::create(3, {{0, 1, 2}});
    Coloring mono = monochromatic_coloring(3);
    CommonCover cc = common_cover(edge, mono, edge, mono);

    // Plan: pi = 3, t = 1, s = 3; three disjoint copies of the edge.
    CHECK(cc.cover.vertex_count() == 9);
    CHECK(cc.cover.edge_count() == 3);
    CHECK(profile(cc.cover).uniform_d == 3);
    CHECK(verify_covering(cc.cover, edge, cc.phi1).k == 3);
    CHECK(verify_covering(cc.cover, edge, cc.phi2).k == 3);
    for (const auto& e : cc.cover.edges()) {
        std::set<int> images1, images2;
        for (int v : e) {
            images1.insert(cc.phi1.phi[static_cast<std::size_t>(v)]);
            images2.insert(cc.phi2.phi[static_cast<std::size_t>(v)]);
        }
        CHECK(images1.size() == 3);
        CHECK(images2.size() == 3);
    }
}

TEST_CASE("common cover rejects mismatched parameters") {
    Hypergraph fano = fano_hypergraph();
    Coloring point = Coloring::create({0, 1, 1, 1, 1, 1, 1});
    Coloring line = Coloring::create({0, 0, 0, 1, 1, 1, 1});
    CHECK_THROWS_AS(common_cover(fano, point, fano, line), error);

    Hypergraph split = Hypergraph::create(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(
        common_cover(split, monochromatic_coloring(4), split, monochromatic_coloring(4)), error);
}

TEST_CASE("common cover of the Fano plane and the tripled edge") {
    Hypergraph fano = fano_hypergraph();
    Hypergraph f3 = Hypergraph::create(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, true);
    CommonCover cc = common_cover(fano, monochromatic_coloring(7), f3, monochromatic_coloring(3));
    CHECK(cc.cover.vertex_count() == 63);
    CHECK(cc.cover.edge_count() == 63);
    Profile prof = profile(cc.cover);
    CHECK(prof.uniform_d == 3);
    CHECK(prof.regular_r == 3);
    CoveringCheck fano_check = verify_covering(cc.cover, fano, cc.phi1);
    CoveringCheck f3_check = verify_covering(cc.cover, f3, cc.phi2);
    CHECK(fano_check.k == 9);
    CHECK(f3_check.k == 21);

    // The induced maps on the incidence (Levi) graphs are coverings too.
    check_incidence_graph_covering(cc.cover, fano, cc.phi1, fano_check.edge_map);
    check_incidence_graph_covering(cc.cover, f3, cc.phi2, f3_check.edge_map);

    // Read both coverings as perfect colorings: the parameter matrix is the
    // target adjacency matrix, and for the simple target the incidence
    // parameters are (C, C^T).
    auto [to_fano, s_fano] = covering_as_coloring(cc.cover, fano, cc.phi1);
    CHECK(s_fano == adjacency_tensor(fano));
    IncidenceParams p = incidence_parameters(cc.cover, to_fano);
    Matrix01 c = incidence_matrix(fano); // Fano's edge list is already sorted
    REQUIRE(p.V.size() == 7);
    REQUIRE(p.W.size() == 7);
    for (int y = 0; y < 7; ++y)
        for (int u = 0; u < 7; ++u) {
            CHECK(p.V[static_cast<std::size_t>(y)][static_cast<std::size_t>(u)] == c.at(y, u));
            CHECK(p.W[static_cast<std::size_t>(u)][static_cast<std::size_t>(y)] == c.at(y, u));
        }

    auto [to_f3, s_f3] = covering_as_coloring(cc.cover, f3, cc.phi2);
    CHECK(s_f3 == adjacency_tensor(f3));
    CHECK(s_f3.at({0, 1, 2}) == Rational(3, 2)); // three copies of 1/2
}

TEST_CASE("multipartite cover of a single edge") {
    // r = 1: the plan gives three disjoint copies of the edge, one perfect
    // matching holding all of them.
    Hypergraph edge = Hypergraph::create(3, {{0, 1, 2}});
    MultipartiteCover mc = multipartite_cover(edge);
    CHECK(mc.cover.vertex_count() == 9);
    CHECK(mc.cover.edge_count() == 3);
    CHECK(verify_covering(mc.cover, edge, mc.phi).k == 3);
    REQUIRE(mc.parts.size() == 3);
    for (const auto& part : mc.parts) CHECK(part.size() == 3);
    REQUIRE(mc.matchings.size() == 1);
    CHECK(mc.matchings[0].size() == 3);
    std::vector<int> covered(9, 0);
    for (int e : mc.matchings[0])
        for (int v : mc.cover.edge(e)) ++covered[static_cast<std::size_t>(v)];
    for (int c : covered) CHECK(c == 1);
}

TEST_CASE("multipartite cover of the 4-cycle") {
    Hypergraph c4 = Hypergraph::create(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    MultipartiteCover mc = multipartite_cover(c4);
    CHECK(verify_covering(mc.cover, c4, mc.phi).k == mc.cover.vertex_count() / 4);
    REQUIRE(mc.parts.size() == 2);
    REQUIRE(mc.matchings.size() == 2);

    // Each part meets every edge exactly once.
    for (const auto& part : mc.parts) {
        std::set<int> members(part.begin(), part.end());
        for (const auto& e : mc.cover.edges()) {
            int hits = 0;
            for (int v : e)
                if (members.count(v)) ++hits;
            CHECK(hits == 1);
        }
    }
    // The matchings partition the edges and cover every vertex once.
    std::size_t total = 0;
    for (const auto& matching : mc.matchings) {
        total += matching.size();
        std::vector<int> covered(static_cast<std::size_t>(mc.cover.vertex_count()), 0);
        for (int e : matching)
            for (int v : mc.cover.edge(e)) ++covered[static_cast<std::size_t>(v)];
        for (int c : covered) CHECK(c == 1);
    }
    CHECK(total == static_cast<std::size_t>(mc.cover.edge_count()));
}

TEST_CASE("lift_coloring") {
    Hypergraph edge = Hypergraph::create(3, {{0, 1, 2}});
    Coloring mono = monochromatic_coloring(3);
    CommonCover cc = common_cover(edge, mono, edge, mono);

    Coloring lifted = lift_coloring(cc.phi1, mono);
    CHECK(lifted.color_count() == 1);
    CHECK(is_perfect(cc.cover, lifted));
    CHECK(parameter_tensor(cc.cover, lifted) == parameter_tensor(edge, mono));

    Coloring split = Coloring::create({0, 1, 1});
    Coloring lifted_split = lift_coloring(cc.phi1, split);
    CHECK(is_perfect(cc.cover, lifted_split));
    CHECK(parameter_tensor(cc.cover, lifted_split) == parameter_tensor(edge, split));
}
