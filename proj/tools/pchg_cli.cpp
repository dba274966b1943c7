// Command-line front end for the pchg library. Every subcommand is a thin
// adapter: read JSON files, call the C API, print the payload. Exit codes
// follow pchg_status (0 ok, 2 validation, 3 not perfect, 4 not a covering,
// 5 guard exceeded, 6 io, 7 internal).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pchg.h"

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{PCHG_ERR_IO, "cannot open file: " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void check(pchg_status status) {
    if (status != PCHG_OK) throw CliError{static_cast<int>(status), pchg_last_error_message()};
}

using HypergraphPtr = std::unique_ptr<pchg_hypergraph, decltype(&pchg_hypergraph_free)>;
using ColoringPtr = std::unique_ptr<pchg_coloring, decltype(&pchg_coloring_free)>;
using MatrixPtr = std::unique_ptr<pchg_matrix, decltype(&pchg_matrix_free)>;
using CoveringPtr = std::unique_ptr<pchg_covering, decltype(&pchg_covering_free)>;

HypergraphPtr load_hypergraph(const std::string& path) {
    pchg_hypergraph* h = nullptr;
    check(pchg_hypergraph_from_json(read_file(path).c_str(), &h));
    return {h, pchg_hypergraph_free};
}

ColoringPtr load_coloring(const std::string& path) {
    pchg_coloring* f = nullptr;
    check(pchg_coloring_from_json(read_file(path).c_str(), &f));
    return {f, pchg_coloring_free};
}

MatrixPtr load_matrix(const std::string& path) {
    pchg_matrix* a = nullptr;
    check(pchg_matrix_from_json(read_file(path).c_str(), &a));
    return {a, pchg_matrix_free};
}

CoveringPtr load_covering(const std::string& path) {
    pchg_covering* phi = nullptr;
    check(pchg_covering_from_json(read_file(path).c_str(), &phi));
    return {phi, pchg_covering_free};
}

std::string take_string(char* text) {
    std::string out(text);
    pchg_string_free(text);
    return out;
}

// Resolve a hypergraph path for cover subcommands: an explicit flag wins,
// otherwise the file reference inside the covering-map JSON, relative to the
// map file's directory.
std::string resolve_ref(const std::string& flag_value, const char* reference,
                        const std::string& map_path, const std::string& what) {
    if (!flag_value.empty()) return flag_value;
    std::string ref(reference);
    if (ref.empty())
        throw CliError{PCHG_ERR_VALIDATION,
                       "missing " + what + ": pass the flag or add the reference to the map file"};
    std::filesystem::path p(ref);
    if (p.is_relative()) p = std::filesystem::path(map_path).parent_path() / p;
    return p.string();
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

void emit(const std::string& payload, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CliError{PCHG_ERR_IO, "cannot write file: " + output};
    out << payload;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect colorings of hypergraphs"};
    app.require_subcommand(1);

    std::string hypergraph_path, hypergraph2_path, coloring_path, coloring2_path, seed_path;
    std::string tensor_path, map_path, cover_path, params_path, output, chi, scenario;
    int k = 1, d = 3, r = 1, threads = 1;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "write the payload to a file instead of stdout");
        cmd->add_option("--threads", threads, "worker threads for parallel operations");
    };

    auto* verify = app.add_subcommand("verify", "check a coloring and report its parameters");
    verify->add_option("--hypergraph", hypergraph_path)->required();
    verify->add_option("--coloring", coloring_path)->required();
    add_output(verify);

    auto* params = app.add_subcommand("params", "incidence parameters of a perfect coloring");
    params->add_option("--hypergraph", hypergraph_path)->required();
    params->add_option("--coloring", coloring_path)->required();
    add_output(params);

    auto* tensor = app.add_subcommand(
        "tensor", "parameter matrix of a perfect coloring, or the adjacency matrix");
    tensor->add_option("--hypergraph", hypergraph_path)->required();
    tensor->add_option("--coloring", coloring_path);
    add_output(tensor);

    auto* refine = app.add_subcommand("refine", "coarsest perfect refinement of a seed coloring");
    refine->add_option("--hypergraph", hypergraph_path)->required();
    refine->add_option("--seed", seed_path)->required();
    add_output(refine);

    auto* construct = app.add_subcommand("construct", "hypergraph realizing incidence parameters");
    construct->add_option("--params", params_path)->required();
    add_output(construct);

    auto* cover_verify = app.add_subcommand("cover-verify", "verify a covering map");
    cover_verify->add_option("--cover", cover_path, "source hypergraph file");
    cover_verify->add_option("--hypergraph", hypergraph_path, "target hypergraph file");
    cover_verify->add_option("--map", map_path)->required();
    add_output(cover_verify);

    auto* cover_common = app.add_subcommand("cover-common", "common covering of two hypergraphs");
    cover_common->add_option("--hypergraph", hypergraph_path)->required();
    cover_common->add_option("--coloring", coloring_path)->required();
    cover_common->add_option("--hypergraph2", hypergraph2_path)->required();
    cover_common->add_option("--coloring2", coloring2_path)->required();
    add_output(cover_common);

    auto* cover_multi = app.add_subcommand(
        "cover-multipartite", "d-partite cover splitting into perfect matchings");
    cover_multi->add_option("--hypergraph", hypergraph_path)->required();
    add_output(cover_multi);

    auto* lift = app.add_subcommand("lift-coloring", "pull a coloring back through a covering");
    lift->add_option("--map", map_path)->required();
    lift->add_option("--coloring", coloring_path)->required();
    lift->add_option("--cover", cover_path, "source hypergraph file (else map reference)");
    lift->add_option("--hypergraph", hypergraph_path, "target hypergraph file (else map reference)");
    add_output(lift);

    auto* eigen = app.add_subcommand("eigen", "eigenpairs of an order-2 parameter matrix");
    eigen->add_option("--tensor", tensor_path);
    eigen->add_option("--hypergraph", hypergraph_path);
    eigen->add_option("--coloring", coloring_path);
    add_output(eigen);

    auto* charpoly = app.add_subcommand(
        "charpoly", "quartic characteristic polynomial of a 2-coloring of a 3-uniform hypergraph");
    charpoly->add_option("--tensor", tensor_path);
    charpoly->add_option("--chi", chi, "class-size ratio as p/q (inferred when omitted)");
    charpoly->add_option("--hypergraph", hypergraph_path);
    charpoly->add_option("--coloring", coloring_path);
    add_output(charpoly);

    auto* tspec = app.add_subcommand("transversal-spectrum",
                                     "parameter matrix and eigenvalues of a k-transversal");
    tspec->add_option("--d", d)->required();
    tspec->add_option("--r", r)->required();
    tspec->add_option("--k", k)->required();
    add_output(tspec);

    auto* transversals = app.add_subcommand("transversals", "enumerate k-transversals");
    transversals->add_option("--hypergraph", hypergraph_path)->required();
    transversals->add_option("--k", k)->required();
    add_output(transversals);

    auto* demo = app.add_subcommand("demo", "built-in scenarios");
    demo->add_option("scenario", scenario, "scenario name (fano)")->required();
    add_output(demo);

    CLI11_PARSE(app, argc, argv);

    try {
        char* text = nullptr;
        if (*verify) {
            auto h = load_hypergraph(hypergraph_path);
            auto f = load_coloring(coloring_path);
            check(pchg_verify_json(h.get(), f.get(), &text));
        } else if (*params) {
            auto h = load_hypergraph(hypergraph_path);
            auto f = load_coloring(coloring_path);
            check(pchg_params_json(h.get(), f.get(), &text));
        } else if (*tensor) {
            auto h = load_hypergraph(hypergraph_path);
            pchg_matrix* a = nullptr;
            if (coloring_path.empty()) {
                check(pchg_adjacency_tensor(h.get(), &a));
            } else {
                auto f = load_coloring(coloring_path);
                check(pchg_parameter_tensor(h.get(), f.get(), &a));
            }
            MatrixPtr owned(a, pchg_matrix_free);
            check(pchg_matrix_to_json(owned.get(), &text));
        } else if (*refine) {
            auto h = load_hypergraph(hypergraph_path);
            auto seed = load_coloring(seed_path);
            pchg_coloring* refined = nullptr;
            check(pchg_wl_refine(h.get(), seed.get(), &refined));
            ColoringPtr owned(refined, pchg_coloring_free);
            check(pchg_coloring_to_json(owned.get(), &text));
        } else if (*construct) {
            check(pchg_construct_json(read_file(params_path).c_str(), &text));
        } else if (*cover_verify) {
            auto map = load_covering(map_path);
            auto g = load_hypergraph(
                resolve_ref(cover_path, pchg_covering_source(map.get()), map_path, "--cover"));
            auto h = load_hypergraph(resolve_ref(hypergraph_path,
                                                 pchg_covering_target(map.get()), map_path,
                                                 "--hypergraph"));
            check(pchg_cover_verify_json(g.get(), h.get(), map.get(), &text));
        } else if (*cover_common) {
            auto h1 = load_hypergraph(hypergraph_path);
            auto f1 = load_coloring(coloring_path);
            auto h2 = load_hypergraph(hypergraph2_path);
            auto f2 = load_coloring(coloring2_path);
            check(pchg_cover_common_json(h1.get(), f1.get(), h2.get(), f2.get(), &text));
        } else if (*cover_multi) {
            auto h = load_hypergraph(hypergraph_path);
            check(pchg_cover_multipartite_json(h.get(), &text));
        } else if (*lift) {
            auto map = load_covering(map_path);
            auto f = load_coloring(coloring_path);
            auto g = load_hypergraph(
                resolve_ref(cover_path, pchg_covering_source(map.get()), map_path, "--cover"));
            auto h = load_hypergraph(resolve_ref(hypergraph_path,
                                                 pchg_covering_target(map.get()), map_path,
                                                 "--hypergraph"));
            char* ignored = nullptr;
            check(pchg_cover_verify_json(g.get(), h.get(), map.get(), &ignored));
            pchg_string_free(ignored);
            pchg_coloring* lifted = nullptr;
            check(pchg_lift_coloring(map.get(), f.get(), &lifted));
            ColoringPtr owned(lifted, pchg_coloring_free);
            check(pchg_coloring_to_json(owned.get(), &text));
        } else if (*eigen) {
            MatrixPtr s(nullptr, pchg_matrix_free);
            if (!tensor_path.empty()) {
                s = load_matrix(tensor_path);
            } else if (!hypergraph_path.empty() && !coloring_path.empty()) {
                auto h = load_hypergraph(hypergraph_path);
                auto f = load_coloring(coloring_path);
                pchg_matrix* built = nullptr;
                check(pchg_parameter_tensor(h.get(), f.get(), &built));
                s.reset(built);
            } else {
                throw CliError{PCHG_ERR_VALIDATION,
                               "eigen needs --tensor, or --hypergraph with --coloring"};
            }
            check(pchg_eigen_json(s.get(), &text));
        } else if (*charpoly) {
            if (!tensor_path.empty()) {
                auto s = load_matrix(tensor_path);
                check(pchg_charpoly_json(s.get(), chi.empty() ? nullptr : chi.c_str(), &text));
            } else if (!hypergraph_path.empty() && !coloring_path.empty()) {
                auto h = load_hypergraph(hypergraph_path);
                auto f = load_coloring(coloring_path);
                check(pchg_charpoly_coloring_json(h.get(), f.get(), &text));
            } else {
                throw CliError{PCHG_ERR_VALIDATION,
                               "charpoly needs --tensor, or --hypergraph with --coloring"};
            }
        } else if (*tspec) {
            check(pchg_transversal_spectrum_json(d, r, k, &text));
        } else if (*transversals) {
            auto h = load_hypergraph(hypergraph_path);
            check(pchg_transversals_json(h.get(), k, threads, &text));
        } else if (*demo) {
            if (scenario != "fano")
                throw CliError{PCHG_ERR_VALIDATION, "unknown demo scenario: " + scenario};
            check(pchg_demo_fano_json(&text));
        }
        if (text != nullptr) emit(take_string(text), output);
        return 0;
    } catch (const CliError& e) {
        const std::string last = pchg_last_error_json();
        if (!last.empty() && e.message == pchg_last_error_message()) {
            std::cout << last;
        } else {
            std::cout << "{\n  \"status\": \"error\",\n  \"code\": " << e.code
                      << ",\n  \"message\": \"" << escape(e.message) << "\"\n}\n";
        }
        return e.code;
    }
}
