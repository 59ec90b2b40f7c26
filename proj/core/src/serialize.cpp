#include "polyaut/serialize.hpp"

#include <stdexcept>
#include <string>

namespace polyaut {

namespace {

template <class J>
MapDocument document_from(const J& j) {
  if (!j.is_object()) throw ParseError("map document must be a JSON object", 0);
  if (!j.contains("n") || !j["n"].is_number_unsigned()) {
    throw ParseError("map document needs a positive integer field \"n\"", 0);
  }
  if (!j.contains("coords") || !j["coords"].is_array()) {
    throw ParseError("map document needs an array field \"coords\"", 0);
  }
  MapDocument doc;
  doc.n = j["n"].template get<std::size_t>();
  for (const auto& c : j["coords"]) {
    if (!c.is_string()) throw ParseError("map document coordinates must be strings", 0);
    doc.coords.push_back(c.template get<std::string>());
  }
  if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].template get<std::string>();
  if (j.contains("notes") && j["notes"].is_string()) doc.notes = j["notes"].template get<std::string>();
  return doc;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals", 0);
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

std::size_t index_from_json(const Json& j, std::size_t n) {
  if (!j.is_number_unsigned()) throw ParseError("generator index must be a positive integer", 0);
  const auto i = j.get<std::size_t>();
  if (i < 1 || i > n) throw ParseError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n), 0);
  return i - 1;
}

std::optional<std::size_t> infer_dimension(const Json& factors) {
  for (const auto& g : factors) {
    if (!g.is_object() || !g.contains("kind")) continue;
    if (g["kind"] == "diagonal" && g.contains("c") && g["c"].is_array()) return g["c"].size();
    if (g["kind"] == "affine" && g.contains("b") && g["b"].is_array()) return g["b"].size();
  }
  return std::nullopt;
}

}  // namespace

Json map_document_to_json(const MapDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["coords"] = doc.coords;
  if (doc.name) j["name"] = *doc.name;
  if (doc.notes) j["notes"] = *doc.notes;
  return j;
}

MapDocument map_document_from_json(const nlohmann::json& j) { return document_from(j); }
MapDocument map_document_from_json(const Json& j) { return document_from(j); }

Json rational_to_json(const Rational& q) { return render_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParseError("rational must be a string like \"-3/4\" or an integer", 0);
}

Json unipoly_to_json(const UniPoly& p) {
  return rationals_to_json(std::vector<Rational>(p.coefficients().begin(), p.coefficients().end()));
}

UniPoly unipoly_from_json(const Json& j) { return UniPoly(rationals_from_json(j)); }

const char* to_string(LFVerdict v) { return v == LFVerdict::kCertifiedLF ? "CertifiedLF" : "Unknown"; }

Json lf_report_to_json(const LFReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  if (r.minimal_polynomial) {
    j["minimal_polynomial"] = unipoly_to_json(*r.minimal_polynomial);
    j["minimal_polynomial_text"] = r.minimal_polynomial->to_string();
  } else {
    j["minimal_polynomial"] = nullptr;
  }
  j["iterate_degrees"] = r.iterate_degrees;
  j["budget"] = {{"max_iter", r.budget.max_iter}, {"max_deg", r.budget.max_deg}};
  j["budget_used"] = {{"iterations", r.iterations_used}, {"max_degree", r.max_degree_seen}};
  if (r.degree_overflow) {
    j["degree_overflow"] = {{"iteration", r.degree_overflow->iteration},
                            {"degree_lower_bound", r.degree_overflow->lower_bound}};
  }
  return j;
}

Json generator_to_json(const Generator& g) {
  Json j;
  if (const auto* d = std::get_if<Diagonal>(&g)) {
    j["kind"] = "diagonal";
    j["c"] = rationals_to_json(d->c);
  } else if (const auto* e = std::get_if<Elementary>(&g)) {
    j["kind"] = "elementary";
    j["i"] = e->i + 1;
    j["g"] = render_poly(e->g);
  } else {
    const auto& a = std::get<Affine>(g);
    j["kind"] = "affine";
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.a.cols(); ++c) row.push_back(rational_to_json(a.a(r, c)));
      rows.push_back(std::move(row));
    }
    j["A"] = std::move(rows);
    j["b"] = rationals_to_json(a.b);
  }
  return j;
}

Generator generator_from_json(const Json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("generator must be an object with a string \"kind\"", 0);
  }
  const auto kind = j["kind"].get<std::string>();
  Generator g;
  if (kind == "diagonal") {
    if (!j.contains("c")) throw ParseError("diagonal generator needs \"c\"", 0);
    g = Diagonal{rationals_from_json(j["c"])};
  } else if (kind == "elementary") {
    if (!j.contains("i") || !j.contains("g") || !j["g"].is_string()) {
      throw ParseError("elementary generator needs \"i\" and a string \"g\"", 0);
    }
    g = Elementary{index_from_json(j["i"], n), parse_poly(j["g"].get<std::string>(), n)};
  } else if (kind == "affine") {
    if (!j.contains("A") || !j["A"].is_array() || !j.contains("b")) {
      throw ParseError("affine generator needs \"A\" and \"b\"", 0);
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j["A"]) rows.push_back(rationals_from_json(r));
    g = Affine{RationalMatrix(std::move(rows)), rationals_from_json(j["b"])};
  } else {
    throw ParseError("unknown generator kind '" + kind + "'", 0);
  }
  validate(g, n);
  return g;
}

Json tame_word_to_json(const TameWord& w) {
  Json j;
  j["n"] = w.n;
  Json factors = Json::array();
  for (const auto& g : w.factors) factors.push_back(generator_to_json(g));
  j["word"] = std::move(factors);
  return j;
}

TameWord tame_word_from_json(const Json& j, std::optional<std::size_t> n) {
  const Json* factors = &j;
  if (j.is_object()) {
    if (j.contains("n")) {
      if (!j["n"].is_number_unsigned()) throw ParseError("\"n\" must be a positive integer", 0);
      n = j["n"].get<std::size_t>();
    }
    if (!j.contains("word") || !j["word"].is_array()) throw ParseError("word document needs an array \"word\"", 0);
    factors = &j["word"];
  } else if (!j.is_array()) {
    throw ParseError("tame word must be an array of generators or {\"n\":..,\"word\":[..]}", 0);
  }
  if (!n) n = infer_dimension(*factors);
  if (!n || *n == 0) throw ParseError("cannot determine the dimension of the word; give \"n\"", 0);
  TameWord w{*n, {}};
  for (const auto& g : *factors) w.factors.push_back(generator_from_json(g, *n));
  return w;
}

Json normal_form_to_json(const NormalForm& nf) {
  Json j;
  j["n"] = nf.diagonal.c.size();
  Json es = Json::array();
  for (const auto& e : nf.elementaries) es.push_back(generator_to_json(e));
  j["elementaries"] = std::move(es);
  j["diagonal"] = generator_to_json(nf.diagonal);
  return j;
}

Json witness_to_json(const Witness& w, bool verified) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["target"] = map_document_to_json(to_document(w.target));
  j["conjugator"] = map_document_to_json(to_document(w.conjugator));
  j["conjugator_inverse"] = map_document_to_json(to_document(w.conjugator_inverse));
  j["diagonal"] = map_document_to_json(to_document(w.diagonal));
  j["verified"] = verified;
  j["transcript"] = w.transcript;
  return j;
}

Witness witness_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("witness must be a JSON object", 0);
  for (const char* key : {"kind", "target", "conjugator", "conjugator_inverse", "diagonal"}) {
    if (!j.contains(key)) throw ParseError(std::string("witness is missing \"") + key + "\"", 0);
  }
  Witness w{witness_kind_from_string(j["kind"].get<std::string>()),
            from_document(map_document_from_json(j["target"])),
            from_document(map_document_from_json(j["conjugator"])),
            from_document(map_document_from_json(j["conjugator_inverse"])),
            from_document(map_document_from_json(j["diagonal"])),
            {}};
  if (j.contains("transcript") && j["transcript"].is_array()) {
    for (const auto& line : j["transcript"]) {
      if (line.is_string()) w.transcript.push_back(line.get<std::string>());
    }
  }
  return w;
}

}  // namespace polyaut
