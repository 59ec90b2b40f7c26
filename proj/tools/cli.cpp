#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polyaut/endo.hpp"
#include "polyaut/locfin.hpp"
#include "polyaut/serialize.hpp"
#include "polyaut/tame.hpp"
#include "polyaut/textio.hpp"
#include "polyaut/witness.hpp"

namespace polyaut::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<std::size_t> n;
  std::vector<std::string> maps;
  std::vector<std::string> files;
  unsigned budget_iter = 16;
  int budget_deg = 512;
  unsigned m = 1;
  std::string a = "2";
  std::optional<std::size_t> j;
  std::optional<std::string> mu;
  std::optional<std::string> word;
  std::optional<std::string> poly;
  bool expect_identity = false;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": invalid JSON: " + e.what());
  }
}

std::size_t require_n(const Options& opt) {
  if (!opt.n) throw InputError("--n is required with inline expressions");
  if (*opt.n == 0) throw InputError("--n must be at least 1");
  return *opt.n;
}

Endo map_from_json(const Json& doc, const Options& opt) {
  Endo f = from_document(map_document_from_json(doc));
  if (opt.n && *opt.n != f.dimension()) {
    throw InputError("--n " + std::to_string(*opt.n) + " disagrees with map dimension " +
                     std::to_string(f.dimension()));
  }
  return f;
}

/// Maps from --map (inline) or --file (a map document or an array of them),
/// in command-line order.
std::vector<Endo> load_maps(const Options& opt) {
  if (!opt.maps.empty() && !opt.files.empty()) throw InputError("give maps with either --map or --file, not both");
  std::vector<Endo> out;
  for (const auto& text : opt.maps) out.push_back(parse_map(text, require_n(opt)));
  for (const auto& path : opt.files) {
    const Json doc = parse_json(read_file(path), path);
    if (doc.is_array()) {
      for (const auto& d : doc) out.push_back(map_from_json(d, opt));
    } else {
      out.push_back(map_from_json(doc, opt));
    }
  }
  if (out.empty()) throw InputError("no input map; use --map with --n, or --file");
  return out;
}

Endo load_single_map(const Options& opt) {
  auto maps = load_maps(opt);
  if (maps.size() != 1) throw InputError("expected exactly one map, got " + std::to_string(maps.size()));
  return std::move(maps.front());
}

Elementary load_elementary(const Options& opt) {
  const Endo f = load_single_map(opt);
  auto e = as_elementary(f);
  if (!e) throw InputError("map (" + render_map(f) + ") is not elementary");
  return std::move(*e);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json map_json(const Endo& f) { return map_document_to_json(to_document(f)); }

int cmd_compose(const Options& opt, std::ostream& out) {
  const auto maps = load_maps(opt);
  Endo result = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) result = compose(result, maps[k]);
  const bool is_id = result.is_identity();
  if (json_output(opt)) {
    Json j;
    j["result"] = map_json(result);
    j["degree"] = result.degree();
    j["is_identity"] = is_id;
    print(out, j);
  } else {
    out << render_map(result) << '\n';
  }
  return opt.expect_identity && !is_id ? kVerificationFailed : kSuccess;
}

int cmd_iterate(const Options& opt, std::ostream& out) {
  const Endo g = load_single_map(opt);
  const auto its = iterates(g, opt.m);
  std::vector<int> degrees;
  for (const auto& it : its) degrees.push_back(it.degree());
  if (json_output(opt)) {
    Json j;
    j["m"] = opt.m;
    j["result"] = map_json(its.back());
    j["iterate_degrees"] = degrees;
    print(out, j);
  } else {
    out << render_map(its.back()) << '\n';
    out << "degrees:";
    for (int d : degrees) out << ' ' << d;
    out << '\n';
  }
  return kSuccess;
}

int cmd_jacobian(const Options& opt, std::ostream& out) {
  const Endo g = load_single_map(opt);
  const PolyMatrix jac = jacobian_matrix(g);
  const Poly det = determinant(jac);
  if (json_output(opt)) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < jac.size(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < jac.size(); ++k) row.push_back(render_poly(jac(i, k)));
      rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = g.dimension();
    j["matrix"] = std::move(rows);
    j["determinant"] = render_poly(det);
    print(out, j);
  } else {
    for (std::size_t i = 0; i < jac.size(); ++i) {
      out << "[";
      for (std::size_t k = 0; k < jac.size(); ++k) out << (k ? ", " : "") << render_poly(jac(i, k));
      out << "]\n";
    }
    out << "det = " << render_poly(det) << '\n';
  }
  return kSuccess;
}

void print_report_text(std::ostream& out, const LFReport& r) {
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.minimal_polynomial) out << "minimal polynomial: " << r.minimal_polynomial->to_string() << '\n';
  out << "iterate degrees:";
  for (int d : r.iterate_degrees) out << ' ' << d;
  out << '\n';
  out << "budget: max_iter=" << r.budget.max_iter << " max_deg=" << r.budget.max_deg
      << "; used: iterations=" << r.iterations_used << " max_degree=" << r.max_degree_seen << '\n';
  if (r.degree_overflow) {
    out << "iterate " << r.degree_overflow->iteration << " has degree >= " << r.degree_overflow->lower_bound
        << " (exceeds max_deg)\n";
  }
}

int cmd_lf_certify(const Options& opt, std::ostream& out) {
  const auto maps = load_maps(opt);
  const LFBudget budget{opt.budget_iter, opt.budget_deg};

  // Entries are independent; results are reported in input order.
  std::vector<std::future<LFReport>> pending;
  for (const auto& g : maps) pending.push_back(std::async(std::launch::async, [&g, budget] { return lf_certify(g, budget); }));
  std::vector<LFReport> reports;
  for (auto& f : pending) reports.push_back(f.get());

  const bool all_certified = std::all_of(reports.begin(), reports.end(), [](const LFReport& r) {
    return r.verdict == LFVerdict::kCertifiedLF;
  });
  if (json_output(opt)) {
    if (reports.size() == 1) {
      print(out, lf_report_to_json(reports.front()));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(lf_report_to_json(r));
      print(out, arr);
    }
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      if (reports.size() > 1) out << "[" << k + 1 << "] " << render_map(maps[k]) << '\n';
      print_report_text(out, reports[k]);
    }
  }
  return all_certified ? kSuccess : kUnknown;
}

int cmd_minpoly_invert(const Options& opt, std::ostream& out, std::ostream& err) {
  const Endo g = load_single_map(opt);
  std::optional<UniPoly> mu;
  std::optional<LFReport> report;
  if (opt.mu) {
    std::vector<Rational> coeffs;
    std::stringstream ss(*opt.mu);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    mu = UniPoly(std::move(coeffs));
    if (!verify_vanishing(g, *mu)) {
      err << "error: " << mu->to_string() << " does not vanish on the map\n";
      return kVerificationFailed;
    }
  } else {
    report = lf_certify(g, {opt.budget_iter, opt.budget_deg});
    if (report->verdict != LFVerdict::kCertifiedLF) {
      if (json_output(opt)) {
        Json j;
        j["report"] = lf_report_to_json(*report);
        j["inverse"] = nullptr;
        print(out, j);
      } else {
        print_report_text(out, *report);
      }
      err << "no vanishing polynomial found within budget; cannot invert\n";
      return kUnknown;
    }
    mu = report->minimal_polynomial;
  }

  const Endo inv = inverse_from_minpoly(g, *mu);
  if (json_output(opt)) {
    Json j;
    j["vanishing_polynomial"] = unipoly_to_json(*mu);
    j["vanishing_polynomial_text"] = mu->to_string();
    if (report) j["report"] = lf_report_to_json(*report);
    j["inverse"] = map_json(inv);
    j["verified"] = true;
    print(out, j);
  } else {
    out << "vanishing polynomial: " << mu->to_string() << '\n';
    out << "inverse: " << render_map(inv) << '\n';
    out << "inverse pair check: ok\n";
  }
  return kSuccess;
}

int cmd_normal_form(const Options& opt, std::ostream& out) {
  Json doc;
  if (opt.word && !opt.files.empty()) throw InputError("give the word with either --word or --file, not both");
  if (opt.word) {
    doc = parse_json(*opt.word, "--word");
  } else if (opt.files.size() == 1) {
    doc = parse_json(read_file(opt.files.front()), opt.files.front());
  } else {
    throw InputError("normal-form needs one tame word via --word or --file");
  }
  const TameWord w = tame_word_from_json(doc, opt.n);
  const NormalForm nf = normal_form(w);
  const Endo original = word_to_endo(w);
  const Endo recomposed = word_to_endo(to_word(nf));
  const bool ok = original == recomposed;
  if (json_output(opt)) {
    Json j;
    j["normal_form"] = normal_form_to_json(nf);
    j["map"] = map_json(original);
    j["recomposition_verified"] = ok;
    print(out, j);
  } else {
    for (const auto& e : nf.elementaries) {
      out << "E: x" << e.i + 1 << " -> x" << e.i + 1 << " + (" << render_poly(e.g) << ")\n";
    }
    out << "D: (";
    for (std::size_t k = 0; k < nf.diagonal.c.size(); ++k) out << (k ? ", " : "") << render_rational(nf.diagonal.c[k]);
    out << ")\n";
    out << "map: " << render_map(original) << '\n';
    out << "recomposition: " << (ok ? "ok" : "FAILED") << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

int emit_witness(const Options& opt, const Witness& w, std::ostream& out) {
  const bool ok = verify_witness(w);
  if (json_output(opt)) {
    print(out, witness_to_json(w, ok));
  } else {
    out << "kind: " << to_string(w.kind) << '\n';
    for (const auto& line : w.transcript) out << line << '\n';
    out << "verified: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_witness_obs2(const Options& opt, std::ostream& out) {
  return emit_witness(opt, witness_obs2(load_elementary(opt)), out);
}

int cmd_witness_obs3(const Options& opt, std::ostream& out) {
  const Elementary e = load_elementary(opt);
  const Rational a = parse_rational(opt.a);
  std::optional<std::size_t> j;
  if (opt.j) {
    if (*opt.j < 1) throw InputError("--j is 1-based");
    j = *opt.j - 1;
  }
  return emit_witness(opt, witness_obs3(e, a, j), out);
}

int cmd_nagata_verify(const Options& opt, std::ostream& out) {
  const auto checks = nagata_chain();
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.passed; });
  if (json_output(opt)) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json j;
    j["map"] = map_json(nagata());
    j["checks"] = std::move(arr);
    j["verified"] = ok;
    print(out, j);
  } else {
    out << "F = (" << render_map(nagata()) << ")\n";
    for (const auto& c : checks) out << (c.passed ? "[ok]     " : "[FAILED] ") << c.name << "  " << c.detail << '\n';
    out << "verified: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_parse_check(const Options& opt, std::ostream& out) {
  if (opt.poly) {
    if (!opt.maps.empty() || !opt.files.empty()) throw InputError("--poly cannot be combined with --map/--file");
    const Poly p = parse_poly(*opt.poly, require_n(opt));
    if (json_output(opt)) {
      print(out, Json{{"n", p.dimension()}, {"poly", render_poly(p)}, {"degree", p.total_degree() == kZeroDegree ? Json(nullptr) : Json(p.total_degree())}});
    } else {
      out << render_poly(p) << '\n';
    }
    return kSuccess;
  }
  const auto maps = load_maps(opt);
  if (json_output(opt)) {
    if (maps.size() == 1) {
      print(out, map_json(maps.front()));
    } else {
      Json arr = Json::array();
      for (const auto& f : maps) arr.push_back(map_json(f));
      print(out, arr);
    }
  } else {
    for (const auto& f : maps) out << render_map(f) << '\n';
  }
  return kSuccess;
}

void add_map_inputs(CLI::App* sub, Options& opt, bool repeatable) {
  sub->add_option("--n", opt.n, "Ambient dimension for inline expressions");
  auto* map = sub->add_option("--map", opt.maps, "Map as comma-separated coordinate expressions");
  auto* file = sub->add_option("--file", opt.files, "JSON map document (or array of documents)");
  if (!repeatable) {
    map->expected(0, 1);
    file->expected(0, 1);
  }
}

void add_budget(CLI::App* sub, Options& opt) {
  sub->add_option("--budget-iter", opt.budget_iter, "Maximum number of iterates")->check(CLI::PositiveNumber);
  sub->add_option("--budget-deg", opt.budget_deg, "Maximum iterate degree")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations with polynomial automorphisms over Q", "polyaut"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* compose_cmd = app.add_subcommand("compose", "Compose maps left to right: first o second o ...");
  add_map_inputs(compose_cmd, opt, true);
  compose_cmd->add_flag("--expect-identity", opt.expect_identity, "Exit 1 unless the composition is the identity");

  auto* iterate_cmd = app.add_subcommand("iterate", "m-th iterate of a map");
  add_map_inputs(iterate_cmd, opt, false);
  iterate_cmd->add_option("--m", opt.m, "Number of iterations");

  auto* jacobian_cmd = app.add_subcommand("jacobian", "Jacobian matrix and determinant");
  add_map_inputs(jacobian_cmd, opt, false);

  auto* lf_cmd = app.add_subcommand("lf-certify", "Certify local finiteness and find the minimal polynomial");
  add_map_inputs(lf_cmd, opt, true);
  add_budget(lf_cmd, opt);

  auto* inv_cmd = app.add_subcommand("minpoly-invert", "Invert a map from a vanishing polynomial");
  add_map_inputs(inv_cmd, opt, false);
  add_budget(inv_cmd, opt);
  inv_cmd->add_option("--mu", opt.mu, "Vanishing polynomial coefficients a_0,a_1,...,a_d (otherwise certified)");

  auto* nf_cmd = app.add_subcommand("normal-form", "Rewrite a tame word as elementaries followed by one diagonal");
  nf_cmd->add_option("--word", opt.word, "Tame word JSON");
  nf_cmd->add_option("--file", opt.files, "Tame word JSON file")->expected(0, 1);
  nf_cmd->add_option("--n", opt.n, "Dimension for a bare generator array");

  auto* w2_cmd = app.add_subcommand("witness-obs2", "Diagonal-conjugation witness for an elementary map");
  add_map_inputs(w2_cmd, opt, false);

  auto* w3_cmd = app.add_subcommand("witness-obs3", "Jacobian-preserving witness for an elementary map");
  add_map_inputs(w3_cmd, opt, false);
  w3_cmd->add_option("--a", opt.a, "Scaling constant, not 0 or +-1");
  w3_cmd->add_option("--j", opt.j, "Auxiliary coordinate (1-based), different from the moved one");

  auto* nagata_cmd = app.add_subcommand("nagata-verify", "Check the conjugation identities for Nagata's map");

  auto* parse_cmd = app.add_subcommand("parse-check", "Parse and print in canonical form");
  add_map_inputs(parse_cmd, opt, true);
  parse_cmd->add_option("--poly", opt.poly, "Single polynomial expression (needs --n)");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (compose_cmd->parsed()) return cmd_compose(opt, out);
    if (iterate_cmd->parsed()) return cmd_iterate(opt, out);
    if (jacobian_cmd->parsed()) return cmd_jacobian(opt, out);
    if (lf_cmd->parsed()) return cmd_lf_certify(opt, out);
    if (inv_cmd->parsed()) return cmd_minpoly_invert(opt, out, err);
    if (nf_cmd->parsed()) return cmd_normal_form(opt, out);
    if (w2_cmd->parsed()) return cmd_witness_obs2(opt, out);
    if (w3_cmd->parsed()) return cmd_witness_obs3(opt, out);
    if (nagata_cmd->parsed()) return cmd_nagata_verify(opt, out);
    if (parse_cmd->parsed()) return cmd_parse_check(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace polyaut::cli
