#include "pchg/reports.hpp"

#include <algorithm>

#include "pchg/refinement.hpp"

namespace pchg {

Json verify_report(const Hypergraph& h, const Coloring& f) {
    Json j;
    try {
        IncidenceParams p = incidence_parameters(h, f);
        j["perfect"] = true;
        j["V"] = p.V;
        j["W"] = p.W;
        j["N"] = p.N;
        j["M"] = p.M;
        j["ranges"] = p.ranges;
        if (profile(h).uniform_d) j["S"] = multimatrix_to_json(parameter_tensor(h, f));
    } catch (const error& e) {
        if (e.code() != errc::not_perfect) throw;
        j["perfect"] = false;
        j["witness"] = e.detail_json().empty() ? Json() : parse_json(e.detail_json())["witness"];
        j["message"] = e.what();
    }
    return j;
}

Json params_report(const Hypergraph& h, const Coloring& f) {
    return incidence_params_to_json(incidence_parameters(h, f));
}

Json tensor_report(const Hypergraph& h, const Coloring* f) {
    if (f == nullptr) return multimatrix_to_json(adjacency_tensor(h));
    return multimatrix_to_json(parameter_tensor(h, *f));
}

Json transversals_report(const Hypergraph& h, int k, int threads) {
    auto found = enumerate_k_transversals(h, k, threads);
    Json j;
    j["k"] = k;
    j["count"] = found.size();
    j["transversals"] = found;
    return j;
}

Json construct_report(const IncidenceParams& p) {
    auto [h, f] = construct_from_params(p.V, p.W, p.N, p.M);
    Json j;
    j["hypergraph"] = hypergraph_to_json(h);
    j["coloring"] = coloring_to_json(f);
    return j;
}

Json cover_verify_report(const Hypergraph& g, const Hypergraph& h, const CoveringMap& phi) {
    CoveringCheck check = verify_covering(g, h, phi);
    Json j;
    j["k"] = check.k;
    j["edge_map"] = check.edge_map;
    return j;
}

Json cover_common_report(const Hypergraph& h1, const Coloring& f1, const Hypergraph& h2,
                         const Coloring& f2) {
    CommonCover cc = common_cover(h1, f1, h2, f2);
    Json j;
    j["cover"] = hypergraph_to_json(cc.cover);
    j["phi1"] = covering_map_to_json(cc.phi1);
    j["phi2"] = covering_map_to_json(cc.phi2);
    j["k1"] = h1.vertex_count() == 0 ? 0 : cc.cover.vertex_count() / h1.vertex_count();
    j["k2"] = h2.vertex_count() == 0 ? 0 : cc.cover.vertex_count() / h2.vertex_count();
    return j;
}

Json cover_multipartite_report(const Hypergraph& h) {
    MultipartiteCover mc = multipartite_cover(h);
    Json j;
    j["cover"] = hypergraph_to_json(mc.cover);
    j["phi"] = covering_map_to_json(mc.phi);
    j["parts"] = mc.parts;
    j["matchings"] = mc.matchings;
    return j;
}

Json eigen_report(const MultiMatrix& s) {
    auto pairs = eigen_order2(s);
    Json values = Json::array();
    Json detailed = Json::array();
    for (const EigenPair& pair : pairs) {
        values.push_back(complex_to_json(pair.lambda));
        detailed.push_back(eigenpair_to_json(pair));
    }
    Json j;
    j["eigenvalues"] = std::move(values);
    j["eigenpairs"] = std::move(detailed);
    return j;
}

Json charpoly_report(const TwoColorThreeUniformParams& params) {
    return polynomial_to_json(charpoly_2color_3uniform(params));
}

Json transversal_spectrum_report(int d, int r, int k) {
    Json j;
    j["d"] = d;
    j["r"] = r;
    j["k"] = k;
    j["S"] = multimatrix_to_json(transversal_parameter_tensor(d, r, k));
    Json values = Json::array();
    for (Complex value : transversal_eigenvalues(d, r, k)) values.push_back(complex_to_json(value));
    j["eigenvalues"] = std::move(values);
    return j;
}

Json demo_fano_report() {
    Hypergraph fano = fano_hypergraph();
    Json j;
    j["hypergraph"] = hypergraph_to_json(fano);

    std::vector<Coloring> colorings{Coloring::create({0, 1, 1, 1, 1, 1, 1}),
                                    Coloring::create({0, 0, 0, 1, 1, 1, 1})};
    Json per_coloring = Json::array();
    std::vector<Complex> all_values;
    for (const Coloring& f : colorings) {
        IncidenceParams p = incidence_parameters(fano, f);
        MultiMatrix s = parameter_tensor(fano, f);
        Json entry;
        entry["colors"] = f.colors();
        entry["V"] = p.V;
        entry["W"] = p.W;
        entry["S"] = multimatrix_to_json(s);
        entry["charpoly"] = polynomial_to_json(charpoly_2color_3uniform(two_color_params(fano, f)));
        Json values = Json::array();
        for (const EigenPair& pair : eigen_order2(s)) {
            values.push_back(complex_to_json(pair.lambda));
            bool fresh = true;
            for (Complex seen : all_values)
                if (std::abs(seen - pair.lambda) <= 1e-9) fresh = false;
            if (fresh) all_values.push_back(pair.lambda);
        }
        entry["eigenvalues"] = std::move(values);
        per_coloring.push_back(std::move(entry));
    }
    j["colorings"] = std::move(per_coloring);

    std::sort(all_values.begin(), all_values.end(), [](Complex lhs, Complex rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    Json values = Json::array();
    for (Complex value : all_values) values.push_back(complex_to_json(value));
    j["eigenvalues"] = std::move(values);
    return j;
}

} // namespace pchg
