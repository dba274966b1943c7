#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pchg/coloring.hpp"
#include "pchg/hypergraph.hpp"

namespace pchg {

// Vertex map of a covering; phi[x] is the target vertex under x. The
// optional source/target fields carry file references when the map travels
// through JSON.
struct CoveringMap {
    std::vector<int> phi;
    std::string source;
    std::string target;
};

struct CoveringCheck {
    int k = 0;                 // fiber size
    std::vector<int> edge_map; // covered hyperedge id per source hyperedge
};

// Verifies that phi is a covering of h by g and returns the fiber size k
// together with a consistent hyperedge correspondence. Checks, in order:
// equal vertex fibers, hyperedge images, a hyperedge assignment that is
// bijective around every vertex, and the permutation-block decomposition of
// g's incidence matrix over h's. Throws errc::not_a_covering with a witness
// when any step fails.
CoveringCheck verify_covering(const Hypergraph& g, const Hypergraph& h, const CoveringMap& phi);

// Reads a verified covering as a perfect coloring of g by the vertices of h;
// its parameter matrix equals the adjacency matrix of h.
std::pair<Coloring, MultiMatrix> covering_as_coloring(const Hypergraph& g, const Hypergraph& h,
                                                      const CoveringMap& phi);

struct CommonCover {
    Hypergraph cover;
    CoveringMap phi1;
    CoveringMap phi2;
    std::vector<int> edge_map1;
    std::vector<int> edge_map2;
};

// Leighton-style common covering of two connected (multi)hypergraphs whose
// perfect colorings share the incidence parameters (V, W). The cover has
// sum_i t_i * n_i * n'_i vertices and sum_j s_j * m_j * m'_j hyperedges for
// t_i = lcm(pi)/n_i, s_j = lcm(pi)/m_j, pi_{i,j} = n_i v_{i,j}.
CommonCover common_cover(const Hypergraph& h1, const Coloring& f1, const Hypergraph& h2,
                         const Coloring& f2);

struct MultipartiteCover {
    Hypergraph cover;
    CoveringMap phi;
    std::vector<std::vector<int>> parts;     // d vertex classes, each meets every edge once
    std::vector<std::vector<int>> matchings; // r perfect matchings partitioning the edges
};

// Covers a d-uniform r-regular connected hypergraph by a d-partite one that
// splits into r perfect matchings, via the common cover with the all-ones
// d x r incidence multihypergraph.
MultipartiteCover multipartite_cover(const Hypergraph& h);

// Composition f ∘ phi; perfect on the source with the same parameter matrix.
Coloring lift_coloring(const CoveringMap& phi, const Coloring& f);

} // namespace pchg
