#pragma once

// JSON file formats for posets, complexes and subdivisions.
//
// poset:       {"elements": [{"id", "rank"}], "covers" | "relations": [[from, to]],
//               "bottom"?, "top"?, "zeta"?: [{"from", "to", "value": "p/q"}]}
// complex:     {"vertices": [...], "facets": [[v, ...], ...]}
// subdivision: {"gamma": complex, "lambda": complex, "carrier": {"{a,b}": "{c}", ...}}

#include "eulerflag/complexes.hpp"
#include "eulerflag/poset.hpp"

#include <string>
#include <string_view>

namespace eulerflag {

PosetSpec poset_spec_from_json(std::string_view text);
QuasiGradedPoset poset_from_json(std::string_view text);
// Covers, extrema and the zeta values different from 1; re-reads to an equal poset.
std::string poset_to_json(const QuasiGradedPoset& p);

SimplicialComplex complex_from_json(std::string_view text);
std::string complex_to_json(const SimplicialComplex& gamma);

Subdivision subdivision_from_json(std::string_view text);

// "{a,b}" or "a,b"; "{}" and "" are the empty face.
Face parse_face(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace eulerflag
