#pragma once

// JSON wire formats. All rationals travel as strings ("3", "-1/2") so that no
// precision is lost; polynomials travel in the text grammar.

#include <optional>

#include <nlohmann/json.hpp>

#include "polyaut/locfin.hpp"
#include "polyaut/tame.hpp"
#include "polyaut/textio.hpp"
#include "polyaut/witness.hpp"

namespace polyaut {

using Json = nlohmann::ordered_json;

Json map_document_to_json(const MapDocument& doc);
/// Accepts both ordered and plain nlohmann documents.
MapDocument map_document_from_json(const nlohmann::json& j);
MapDocument map_document_from_json(const Json& j);

Json rational_to_json(const Rational& q);
/// Accepts a string ("p/q") or an integer.
Rational rational_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

const char* to_string(LFVerdict v);
Json lf_report_to_json(const LFReport& r);

Json generator_to_json(const Generator& g);
/// n is needed to parse the polynomial of an elementary generator.
Generator generator_from_json(const Json& j, std::size_t n);

/// {"n": n, "word": [generator, ...]}
Json tame_word_to_json(const TameWord& w);
/// Accepts the object form above, or a bare array of generators when n is
/// given or can be read off a diagonal/affine factor.
TameWord tame_word_from_json(const Json& j, std::optional<std::size_t> n = std::nullopt);

Json normal_form_to_json(const NormalForm& nf);

Json witness_to_json(const Witness& w, bool verified);
Witness witness_from_json(const Json& j);

}  // namespace polyaut
