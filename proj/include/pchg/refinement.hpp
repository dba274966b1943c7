#pragma once

#include "pchg/coloring.hpp"
#include "pchg/hypergraph.hpp"

namespace pchg {

// True iff every color class of f lies inside a single class of g.
bool is_refinement(const Coloring& f, const Coloring& g);

// Coarsest perfect coloring refining the seed, computed by iterated
// signature refinement on the incidence graph. The vertex part starts from
// the seed, the edge part from the seed-induced color ranges; both sides are
// re-split each round until the class counts stabilize. Output colors are
// numbered by first occurrence in vertex id order.
Coloring wl_refine(const Hypergraph& h, const Coloring& seed);

} // namespace pchg
