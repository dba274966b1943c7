#include "pchg.h"

#include <cstring>
#include <string>

#include "pchg/json_io.hpp"
#include "pchg/refinement.hpp"
#include "pchg/reports.hpp"

using namespace pchg;

struct pchg_hypergraph {
    Hypergraph value;
};
struct pchg_coloring {
    Coloring value;
};
struct pchg_matrix {
    MultiMatrix value;
};
struct pchg_covering {
    CoveringMap value;
};

namespace {

thread_local std::string g_error_message;
thread_local std::string g_error_json;

pchg_status set_error(errc code, const std::string& message, const std::string& detail) {
    g_error_message = message;
    Json j;
    j["status"] = "error";
    j["code"] = static_cast<int>(code);
    j["message"] = message;
    if (!detail.empty()) j["detail"] = parse_json(detail);
    g_error_json = dump_json(j);
    return static_cast<pchg_status>(code);
}

template <typename Fn>
pchg_status guarded(Fn&& fn) {
    try {
        fn();
        return PCHG_OK;
    } catch (const error& e) {
        return set_error(e.code(), e.what(), e.detail_json());
    } catch (const std::exception& e) {
        return set_error(errc::internal, e.what(), {});
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

pchg_status to_json_string(const Json& j, char** out) {
    *out = copy_string(dump_json(j));
    return PCHG_OK;
}

} // namespace

extern "C" {

const char* pchg_last_error_message(void) { return g_error_message.c_str(); }
const char* pchg_last_error_json(void) { return g_error_json.c_str(); }

void pchg_string_free(char* text) { delete[] text; }

pchg_status pchg_hypergraph_from_json(const char* json, pchg_hypergraph** out) {
    return guarded([&] { *out = new pchg_hypergraph{hypergraph_from_json(parse_json(json))}; });
}

pchg_status pchg_hypergraph_to_json(const pchg_hypergraph* h, char** out) {
    return guarded([&] { to_json_string(hypergraph_to_json(h->value), out); });
}

void pchg_hypergraph_free(pchg_hypergraph* h) { delete h; }

int pchg_hypergraph_vertex_count(const pchg_hypergraph* h) { return h->value.vertex_count(); }
int pchg_hypergraph_edge_count(const pchg_hypergraph* h) { return h->value.edge_count(); }

pchg_status pchg_incidence_matrix_json(const pchg_hypergraph* h, char** out) {
    return guarded([&] { to_json_string(matrix01_to_json(incidence_matrix(h->value)), out); });
}

pchg_status pchg_dual(const pchg_hypergraph* h, pchg_hypergraph** out) {
    return guarded([&] { *out = new pchg_hypergraph{dual(h->value)}; });
}

pchg_status pchg_profile_json(const pchg_hypergraph* h, char** out) {
    return guarded([&] { to_json_string(profile_to_json(profile(h->value)), out); });
}

pchg_status pchg_is_connected(const pchg_hypergraph* h, int* out) {
    return guarded([&] { *out = is_connected(h->value) ? 1 : 0; });
}

pchg_status pchg_incidence_graph(const pchg_hypergraph* h, pchg_hypergraph** out) {
    return guarded([&] { *out = new pchg_hypergraph{incidence_graph(h->value)}; });
}

pchg_status pchg_adjacency_tensor(const pchg_hypergraph* h, pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{adjacency_tensor(h->value)}; });
}

pchg_status pchg_transversals_json(const pchg_hypergraph* h, int k, int threads, char** out) {
    return guarded([&] { to_json_string(transversals_report(h->value, k, threads), out); });
}

pchg_status pchg_coloring_from_json(const char* json, pchg_coloring** out) {
    return guarded([&] { *out = new pchg_coloring{coloring_from_json(parse_json(json))}; });
}

pchg_status pchg_coloring_to_json(const pchg_coloring* f, char** out) {
    return guarded([&] { to_json_string(coloring_to_json(f->value), out); });
}

void pchg_coloring_free(pchg_coloring* f) { delete f; }

pchg_status pchg_is_perfect(const pchg_hypergraph* h, const pchg_coloring* f, int* out) {
    return guarded([&] { *out = is_perfect(h->value, f->value) ? 1 : 0; });
}

pchg_status pchg_verify_json(const pchg_hypergraph* h, const pchg_coloring* f, char** out) {
    return guarded([&] { to_json_string(verify_report(h->value, f->value), out); });
}

pchg_status pchg_params_json(const pchg_hypergraph* h, const pchg_coloring* f, char** out) {
    return guarded([&] { to_json_string(params_report(h->value, f->value), out); });
}

pchg_status pchg_parameter_tensor(const pchg_hypergraph* h, const pchg_coloring* f,
                                  pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{parameter_tensor(h->value, f->value)}; });
}

pchg_status pchg_construct_json(const char* params_json, char** out) {
    return guarded([&] {
        IncidenceParams p = incidence_params_from_json(parse_json(params_json));
        to_json_string(construct_report(p), out);
    });
}

pchg_status pchg_wl_refine(const pchg_hypergraph* h, const pchg_coloring* seed,
                           pchg_coloring** out) {
    return guarded([&] { *out = new pchg_coloring{wl_refine(h->value, seed->value)}; });
}

pchg_status pchg_matrix_from_json(const char* json, pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{multimatrix_from_json(parse_json(json))}; });
}

pchg_status pchg_matrix_to_json(const pchg_matrix* a, char** out) {
    return guarded([&] { to_json_string(multimatrix_to_json(a->value), out); });
}

void pchg_matrix_free(pchg_matrix* a) { delete a; }

pchg_status pchg_identity_tensor(int dim, int order, pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{identity_tensor(dim, order)}; });
}

pchg_status pchg_mm_product(const pchg_matrix* a, const pchg_matrix* b, int threads,
                            pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{mm_product(a->value, b->value, threads)}; });
}

pchg_status pchg_matrix_is_symmetric(const pchg_matrix* a, int* out) {
    return guarded([&] { *out = is_symmetric(a->value) ? 1 : 0; });
}

pchg_status pchg_covering_from_json(const char* json, pchg_covering** out) {
    return guarded([&] { *out = new pchg_covering{covering_map_from_json(parse_json(json))}; });
}

void pchg_covering_free(pchg_covering* phi) { delete phi; }

const char* pchg_covering_source(const pchg_covering* phi) { return phi->value.source.c_str(); }
const char* pchg_covering_target(const pchg_covering* phi) { return phi->value.target.c_str(); }

pchg_status pchg_cover_verify_json(const pchg_hypergraph* g, const pchg_hypergraph* h,
                                   const pchg_covering* phi, char** out) {
    return guarded([&] { to_json_string(cover_verify_report(g->value, h->value, phi->value), out); });
}

pchg_status pchg_cover_common_json(const pchg_hypergraph* h1, const pchg_coloring* f1,
                                   const pchg_hypergraph* h2, const pchg_coloring* f2,
                                   char** out) {
    return guarded(
        [&] { to_json_string(cover_common_report(h1->value, f1->value, h2->value, f2->value), out); });
}

pchg_status pchg_cover_multipartite_json(const pchg_hypergraph* h, char** out) {
    return guarded([&] { to_json_string(cover_multipartite_report(h->value), out); });
}

pchg_status pchg_lift_coloring(const pchg_covering* phi, const pchg_coloring* f,
                               pchg_coloring** out) {
    return guarded([&] { *out = new pchg_coloring{lift_coloring(phi->value, f->value)}; });
}

pchg_status pchg_eigen_json(const pchg_matrix* s, char** out) {
    return guarded([&] { to_json_string(eigen_report(s->value), out); });
}

pchg_status pchg_charpoly_json(const pchg_matrix* s, const char* chi, char** out) {
    return guarded([&] {
        TwoColorThreeUniformParams params =
            chi == nullptr ? fit_two_color_params(s->value)
                           : fit_two_color_params(s->value, Rational::parse(chi));
        to_json_string(charpoly_report(params), out);
    });
}

pchg_status pchg_charpoly_coloring_json(const pchg_hypergraph* h, const pchg_coloring* f,
                                        char** out) {
    return guarded([&] { to_json_string(charpoly_report(two_color_params(h->value, f->value)), out); });
}

pchg_status pchg_transversal_tensor(int d, int r, int k, pchg_matrix** out) {
    return guarded([&] { *out = new pchg_matrix{transversal_parameter_tensor(d, r, k)}; });
}

pchg_status pchg_transversal_spectrum_json(int d, int r, int k, char** out) {
    return guarded([&] { to_json_string(transversal_spectrum_report(d, r, k), out); });
}

pchg_status pchg_demo_fano_json(char** out) {
    return guarded([&] { to_json_string(demo_fano_report(), out); });
}

} // extern "C"
