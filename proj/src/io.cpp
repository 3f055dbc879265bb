#include "eulerflag/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace eulerflag {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string as_id(const json& value, const char* what) {
    if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
    return value.get<std::string>();
}

Rational as_rational(const json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw ParseError("zeta value must be an integer or a \"p/q\" string");
}

std::vector<std::pair<ElementId, ElementId>> pairs_of(const json& list, const char* key) {
    if (!list.is_array()) throw ParseError(std::string("'") + key + "' must be a list");
    std::vector<std::pair<ElementId, ElementId>> out;
    for (const auto& pair : list) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError(std::string("'") + key + "' entries are [from, to]");
        out.emplace_back(as_id(pair[0], key), as_id(pair[1], key));
    }
    return out;
}

SimplicialComplex complex_of_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("facets")) throw ParseError("complex needs 'facets'");
    std::vector<Face> facets;
    for (const auto& facet : doc.at("facets")) {
        if (!facet.is_array()) throw ParseError("facets are lists of vertices");
        std::vector<Vertex> vs;
        for (const auto& v : facet) vs.push_back(as_id(v, "vertex"));
        facets.push_back(make_face(vs));
    }
    std::vector<Vertex> extra;
    if (doc.contains("vertices"))
        for (const auto& v : doc.at("vertices")) extra.push_back(as_id(v, "vertex"));
    return SimplicialComplex(std::move(facets), extra);
}

}  // namespace

PosetSpec poset_spec_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("elements")) throw ParseError("poset needs 'elements'");
    PosetSpec spec;
    for (const auto& e : doc.at("elements")) {
        if (!e.is_object() || !e.contains("id") || !e.contains("rank") || !e.at("rank").is_number_integer())
            throw ParseError("elements are {\"id\": string, \"rank\": integer}");
        spec.elements.push_back({as_id(e.at("id"), "id"), e.at("rank").get<long>()});
    }
    if (doc.contains("covers") && doc.contains("relations")) throw ParseError("give either 'covers' or 'relations'");
    if (doc.contains("covers")) spec.relations = pairs_of(doc.at("covers"), "covers");
    if (doc.contains("relations")) spec.relations = pairs_of(doc.at("relations"), "relations");
    if (doc.contains("bottom")) spec.bottom = as_id(doc.at("bottom"), "bottom");
    if (doc.contains("top")) spec.top = as_id(doc.at("top"), "top");
    if (doc.contains("zeta"))
        for (const auto& z : doc.at("zeta")) {
            if (!z.is_object() || !z.contains("from") || !z.contains("to") || !z.contains("value"))
                throw ParseError("zeta entries are {\"from\", \"to\", \"value\"}");
            spec.zeta.push_back({as_id(z.at("from"), "from"), as_id(z.at("to"), "to"), as_rational(z.at("value"))});
        }
    return spec;
}

QuasiGradedPoset poset_from_json(std::string_view text) { return build_poset(poset_spec_from_json(text)); }

std::string poset_to_json(const QuasiGradedPoset& p) {
    PosetSpec spec = p.to_spec();
    ordered_json doc;
    doc["elements"] = ordered_json::array();
    for (const auto& e : spec.elements) doc["elements"].push_back({{"id", e.id}, {"rank", e.rank}});
    doc["covers"] = ordered_json::array();
    for (const auto& [from, to] : spec.relations) doc["covers"].push_back({from, to});
    if (spec.bottom) doc["bottom"] = *spec.bottom;
    if (spec.top) doc["top"] = *spec.top;
    doc["zeta"] = ordered_json::array();
    for (const auto& z : spec.zeta) doc["zeta"].push_back({{"from", z.from}, {"to", z.to}, {"value", to_string(z.value)}});
    return doc.dump(2);
}

SimplicialComplex complex_from_json(std::string_view text) { return complex_of_json(parse_json(text)); }

std::string complex_to_json(const SimplicialComplex& gamma) {
    ordered_json doc;
    doc["vertices"] = gamma.vertices();
    doc["facets"] = ordered_json::array();
    for (const auto& f : gamma.facets()) doc["facets"].push_back(f);
    return doc.dump(2);
}

Face parse_face(std::string_view text) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw ParseError("unbalanced braces in face '" + std::string(text) + "'");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<Vertex> vs;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view v = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (v.empty()) throw ParseError("empty vertex in face '" + std::string(text) + "'");
        vs.emplace_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return make_face(vs);
}

Subdivision subdivision_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("gamma") || !doc.contains("lambda"))
        throw ParseError("subdivision needs 'gamma' and 'lambda'");
    std::map<Face, Face> carrier;
    if (doc.contains("carrier")) {
        if (!doc.at("carrier").is_object()) throw ParseError("'carrier' maps lambda faces to gamma faces");
        for (const auto& [key, value] : doc.at("carrier").items()) carrier[parse_face(key)] = parse_face(as_id(value, "carrier"));
    }
    return make_subdivision(complex_of_json(doc.at("gamma")), complex_of_json(doc.at("lambda")), carrier);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace eulerflag
