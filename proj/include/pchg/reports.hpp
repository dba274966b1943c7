#pragma once

#include "pchg/json_io.hpp"

namespace pchg {

// Composite payloads backing the command-line subcommands. Pure assembly of
// library results into the documented JSON shapes.

Json verify_report(const Hypergraph& h, const Coloring& f);
Json params_report(const Hypergraph& h, const Coloring& f);
Json tensor_report(const Hypergraph& h, const Coloring* f);
Json transversals_report(const Hypergraph& h, int k, int threads);
Json construct_report(const IncidenceParams& p);
Json cover_verify_report(const Hypergraph& g, const Hypergraph& h, const CoveringMap& phi);
Json cover_common_report(const Hypergraph& h1, const Coloring& f1, const Hypergraph& h2,
                         const Coloring& f2);
Json cover_multipartite_report(const Hypergraph& h);
Json eigen_report(const MultiMatrix& s);
Json charpoly_report(const TwoColorThreeUniformParams& params);
Json transversal_spectrum_report(int d, int r, int k);
Json demo_fano_report();

} // namespace pchg
