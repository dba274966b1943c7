#include "pchg/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace pchg {

double round_significant(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return std::strtod(buffer, nullptr);
}

Json complex_to_json(Complex value) {
    return Json::array({round_significant(value.real()), round_significant(value.imag())});
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::validation, std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad_field(const std::string& what) {
    fail(errc::validation, "malformed JSON: " + what);
}

long long require_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad_field(what + " must be an integer");
    return j.get<long long>();
}

std::vector<int> require_int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) bad_field(what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(static_cast<int>(require_int(item, what + " entry")));
    return out;
}

std::vector<long long> require_count_array(const Json& j, const std::string& what) {
    if (!j.is_array()) bad_field(what + " must be an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(require_int(item, what + " entry"));
    return out;
}

std::vector<std::vector<long long>> require_count_matrix(const Json& j, const std::string& what) {
    if (!j.is_array()) bad_field(what + " must be an array of rows");
    std::vector<std::vector<long long>> out;
    out.reserve(j.size());
    for (const auto& row : j) out.push_back(require_count_array(row, what + " row"));
    return out;
}

Rational rational_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad_field(what + " must be an integer or a \"p/q\" string");
}

} // namespace

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.vertex_count();
    j["edges"] = Json::array();
    for (const auto& e : h.edges()) j["edges"].push_back(e);
    if (h.multi_allowed()) j["multi"] = true;
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        bad_field("hypergraph needs fields \"n\" and \"edges\"");
    int n = static_cast<int>(require_int(j.at("n"), "n"));
    if (!j.at("edges").is_array()) bad_field("edges must be an array");
    std::vector<std::vector<int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back(require_int_array(e, "edge"));
    bool multi = false;
    if (j.contains("multi")) {
        if (!j.at("multi").is_boolean()) bad_field("multi must be a boolean");
        multi = j.at("multi").get<bool>();
    }
    return Hypergraph::create(n, std::move(edges), multi);
}

Json coloring_to_json(const Coloring& f) {
    Json j;
    j["colors"] = f.colors();
    return j;
}

Coloring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("colors")) bad_field("coloring needs field \"colors\"");
    return Coloring::create(require_int_array(j.at("colors"), "colors"));
}

Json matrix01_to_json(const Matrix01& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json multimatrix_to_json(const MultiMatrix& a) {
    Json j;
    j["dim"] = a.dim();
    j["order"] = a.order();
    Json entries = Json::array();
    for (std::size_t flat = 0; flat < a.size(); ++flat) entries.push_back(a[flat].to_string());
    j["entries"] = std::move(entries);
    return j;
}

MultiMatrix multimatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("order") || !j.contains("entries"))
        bad_field("matrix needs fields \"dim\", \"order\" and \"entries\"");
    int dim = static_cast<int>(require_int(j.at("dim"), "dim"));
    int order = static_cast<int>(require_int(j.at("order"), "order"));
    MultiMatrix a(dim, order);
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != a.size())
        bad_field("entries must be an array of length order^dim");
    for (std::size_t flat = 0; flat < a.size(); ++flat)
        a[flat] = rational_from_json(entries[flat], "matrix entry");
    return a;
}

Json incidence_params_to_json(const IncidenceParams& p) {
    Json j;
    j["V"] = p.V;
    j["W"] = p.W;
    j["N"] = p.N;
    j["M"] = p.M;
    j["ranges"] = p.ranges;
    return j;
}

IncidenceParams incidence_params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("V") || !j.contains("W") || !j.contains("N") ||
        !j.contains("M"))
        bad_field("incidence parameters need fields \"V\", \"W\", \"N\" and \"M\"");
    IncidenceParams p;
    p.V = require_count_matrix(j.at("V"), "V");
    p.W = require_count_matrix(j.at("W"), "W");
    p.N = require_count_array(j.at("N"), "N");
    p.M = require_count_array(j.at("M"), "M");
    if (j.contains("ranges")) {
        if (!j.at("ranges").is_array()) bad_field("ranges must be an array");
        for (const auto& r : j.at("ranges")) p.ranges.push_back(require_int_array(r, "range"));
    }
    return p;
}

Json covering_map_to_json(const CoveringMap& phi) {
    Json j;
    j["phi"] = phi.phi;
    if (!phi.source.empty()) j["source"] = phi.source;
    if (!phi.target.empty()) j["target"] = phi.target;
    return j;
}

CoveringMap covering_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("phi")) bad_field("covering map needs field \"phi\"");
    CoveringMap map{require_int_array(j.at("phi"), "phi"), {}, {}};
    if (j.contains("source")) {
        if (!j.at("source").is_string()) bad_field("source must be a file path string");
        map.source = j.at("source").get<std::string>();
    }
    if (j.contains("target")) {
        if (!j.at("target").is_string()) bad_field("target must be a file path string");
        map.target = j.at("target").get<std::string>();
    }
    return map;
}

Json polynomial_to_json(const RatPoly& p) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs) coeffs.push_back(c.to_string());
    Json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

RatPoly polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs")) bad_field("polynomial needs field \"coeffs\"");
    RatPoly p;
    for (const auto& c : j.at("coeffs")) p.coeffs.push_back(rational_from_json(c, "coefficient"));
    return p;
}

Json eigenpair_to_json(const EigenPair& pair) {
    Json j;
    j["lambda"] = complex_to_json(pair.lambda);
    Json x = Json::array();
    for (Complex c : pair.x) x.push_back(complex_to_json(c));
    j["x"] = std::move(x);
    j["residual"] = round_significant(pair.residual);
    return j;
}

Json profile_to_json(const Profile& p) {
    Json j;
    if (p.uniform_d)
        j["uniform_d"] = *p.uniform_d;
    else
        j["uniform_d"] = nullptr;
    if (p.regular_r)
        j["regular_r"] = *p.regular_r;
    else
        j["regular_r"] = nullptr;
    j["degrees"] = p.degrees;
    j["sizes"] = p.sizes;
    return j;
}

} // namespace pchg
