#include "slfactor/json_io.hpp"

#include <json.hpp>

#include "slfactor/parse.hpp"

namespace slf {

namespace {

using nlohmann::json;

std::string field_tag(const Field& f) {
    return f.kind == FieldKind::rationals ? "q" : "gf:" + std::to_string(f.p);
}

Field field_from_tag(const std::string& tag) {
    if (tag == "q") return Field::rationals();
    if (tag.rfind("gf:", 0) == 0) {
        unsigned long long p = 0;
        try {
            p = std::stoull(tag.substr(3));
        } catch (const std::exception&) {
            throw input_error("bad field tag '" + tag + "'");
        }
        return Field::gf(p);
    }
    throw input_error("bad field tag '" + tag + "' (expected \"q\" or \"gf:<p>\")");
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    if (!j.is_object() || !j.contains("format_version") ||
        j.at("format_version") != json(1))
        throw input_error("unsupported document: expected \"format_version\": 1");
    return j;
}

RingPtr ring_from_json(const json& j, const Field& default_field) {
    Field field = default_field;
    if (j.contains("field")) field = field_from_tag(j.at("field").get<std::string>());
    std::vector<std::string> vars;
    if (j.contains("vars"))
        for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    return make_ring(field, std::move(vars));
}

} // namespace

std::string matrix_to_json(const PolyMatrix& m) {
    json j;
    j["format_version"] = 1;
    j["field"] = field_tag(m.ring()->field);
    j["n"] = m.n();
    j["vars"] = m.ring()->vars;
    json rows = json::array();
    for (std::size_t r = 0; r < m.n(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.n(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

PolyMatrix matrix_from_json(const std::string& text, const Field& default_field) {
    json j = parse_json(text);
    if (!j.contains("n") || !j.contains("entries"))
        throw input_error("matrix JSON needs \"n\" and \"entries\"");
    RingPtr ring = ring_from_json(j, default_field);
    std::size_t n = j.at("n").get<std::size_t>();
    if (n < 1) throw input_error("matrix dimension must be at least 1");
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n)
        throw input_error("matrix \"entries\" must be an n-row array");
    PolyMatrix m(n, ring);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw input_error("matrix row " + std::to_string(r) + " must have n entries");
        for (std::size_t c = 0; c < n; ++c)
            m.at(r, c) = parse_poly(rows[r][c].get<std::string>(), ring);
    }
    return m;
}

std::string factorization_to_json(const Factorization& f) {
    json j;
    j["format_version"] = 1;
    j["field"] = field_tag(f.ring->field);
    j["n"] = f.n;
    j["vars"] = f.ring->vars;
    json factors = json::array();
    for (const ElemFactor& e : f.factors)
        factors.push_back(json{{"i", e.i}, {"j", e.j}, {"a", e.a.str()}});
    j["factors"] = std::move(factors);
    return j.dump(2) + "\n";
}

Factorization factorization_from_json(const std::string& text, const Field& default_field) {
    json j = parse_json(text);
    if (!j.contains("n") || !j.contains("factors"))
        throw input_error("factorization JSON needs \"n\" and \"factors\"");
    RingPtr ring = ring_from_json(j, default_field);
    Factorization f{j.at("n").get<std::size_t>(), ring, {}};
    if (f.n < 1) throw input_error("factorization dimension must be at least 1");
    for (const auto& e : j.at("factors")) {
        std::size_t i = e.at("i").get<std::size_t>();
        std::size_t jj = e.at("j").get<std::size_t>();
        Poly a = parse_poly(e.at("a").get<std::string>(), ring);
        if (i == jj || i < 1 || jj < 1 || i > f.n || jj > f.n)
            throw input_error("factor has bad indices (i=" + std::to_string(i) +
                              ", j=" + std::to_string(jj) + ")");
        f.factors.push_back(ElemFactor{i, jj, std::move(a)});
    }
    return f;
}

} // namespace slf
