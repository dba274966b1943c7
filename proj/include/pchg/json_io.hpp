#pragma once

#include <string>

#include <json.hpp>

#include "pchg/coloring.hpp"
#include "pchg/covering.hpp"
#include "pchg/hypergraph.hpp"
#include "pchg/multimatrix.hpp"
#include "pchg/spectra.hpp"

namespace pchg {

using Json = nlohmann::ordered_json;

// All numeric JSON output follows one convention: rationals are canonical
// "p/q" strings (integers without the /1), complex numbers are [re, im]
// pairs rounded to 12 significant digits.
double round_significant(double value, int digits = 12);
Json complex_to_json(Complex value);

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const Json& j);

Json matrix01_to_json(const Matrix01& m);

Json multimatrix_to_json(const MultiMatrix& a); // cubical only
MultiMatrix multimatrix_from_json(const Json& j);

Json incidence_params_to_json(const IncidenceParams& p);
IncidenceParams incidence_params_from_json(const Json& j);

Json covering_map_to_json(const CoveringMap& phi);
CoveringMap covering_map_from_json(const Json& j);

Json polynomial_to_json(const RatPoly& p);
RatPoly polynomial_from_json(const Json& j);

Json eigenpair_to_json(const EigenPair& pair);
Json profile_to_json(const Profile& p);

Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

} // namespace pchg
