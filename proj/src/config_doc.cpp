#include "spintor/config_doc.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace spintor {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& what) {
  throw ParseError("schema error at " + path + ": " + what, 0, what);
}

Expr parse_checked(const std::string& text, const std::string& path,
                   const std::set<std::string>& allowed) {
  Expr e;
  try {
    e = parse_expr(text);
  } catch (const ParseError& pe) {
    throw ParseError("at " + path + ": " + pe.what(), pe.offset, pe.expected);
  }
  for (const std::string& v : collect_variables(e))
    if (!allowed.count(v))
      schema_error(path, "unknown variable '" + v +
                             "' (not a coordinate or parameter)");
  return e;
}

std::array<Expr, 3> parse_triple(const json& j, const std::string& path,
                                 const std::set<std::string>& allowed) {
  if (!j.is_array() || j.size() != 3)
    schema_error(path, "expected an array of 3 expression strings");
  std::array<Expr, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_string())
      schema_error(path + "[" + std::to_string(i) + "]", "expected a string");
    out[i] = parse_checked(j[i].get<std::string>(),
                           path + "[" + std::to_string(i) + "]", allowed);
  }
  return out;
}

}  // namespace

ConfigDocument load_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte, "json");
  }
  if (!j.is_object()) schema_error("$", "document must be an object");

  static const std::set<std::string> known = {
      "mode", "coords", "box", "domain_predicate", "params",
      "coframe", "f", "kappa", "dilaton", "K", "b"};
  for (auto& [key, value] : j.items())
    if (!known.count(key)) schema_error("$." + key, "unknown key");

  ConfigDocument doc;

  if (!j.contains("mode") || !j["mode"].is_string())
    schema_error("$.mode", "required string");
  doc.mode = j["mode"].get<std::string>();
  if (doc.mode != "coframe" && doc.mode != "nsns" && doc.mode != "susy")
    schema_error("$.mode", "must be one of coframe | nsns | susy");

  if (!j.contains("coords") || !j["coords"].is_array() ||
      j["coords"].size() != 3)
    schema_error("$.coords", "required array of 3 coordinate names");
  std::vector<std::string> coords;
  for (auto& c : j["coords"]) {
    if (!c.is_string()) schema_error("$.coords", "names must be strings");
    coords.push_back(c.get<std::string>());
  }

  if (!j.contains("box") || !j["box"].is_object())
    schema_error("$.box", "required object of per-coordinate intervals");
  std::vector<std::pair<double, double>> box;
  for (const std::string& c : coords) {
    if (!j["box"].contains(c))
      schema_error("$.box." + c, "missing interval for coordinate");
    auto& iv = j["box"][c];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() ||
        !iv[1].is_number())
      schema_error("$.box." + c, "expected [lo, hi]");
    box.emplace_back(iv[0].get<double>(), iv[1].get<double>());
  }
  for (auto& [key, value] : j["box"].items())
    if (std::find(coords.begin(), coords.end(), key) == coords.end())
      schema_error("$.box." + key, "interval for undeclared coordinate");

  Env params;
  std::set<std::string> allowed(coords.begin(), coords.end());
  if (j.contains("params")) {
    if (!j["params"].is_object())
      schema_error("$.params", "expected an object of numbers");
    for (auto& [key, value] : j["params"].items()) {
      if (!value.is_number())
        schema_error("$.params." + key, "expected a number");
      params[key] = value.get<double>();
      allowed.insert(key);
    }
  }

  std::optional<Expr> predicate;
  if (j.contains("domain_predicate")) {
    if (!j["domain_predicate"].is_string())
      schema_error("$.domain_predicate", "expected a string");
    predicate = parse_checked(j["domain_predicate"].get<std::string>(),
                              "$.domain_predicate", allowed);
  }

  doc.chart = Chart(coords, box, predicate, params);

  if (!j.contains("coframe") || !j["coframe"].is_object())
    schema_error("$.coframe", "required object with u, v, n");
  for (const char* leg : {"u", "v", "n"})
    if (!j["coframe"].contains(leg))
      schema_error(std::string("$.coframe.") + leg, "missing leg");
  for (auto& [key, value] : j["coframe"].items())
    if (std::string(key) != "u" && key != "v" && key != "n")
      schema_error("$.coframe." + key, "unknown key");

  auto leg_form = [&](const char* leg) {
    auto comps = parse_triple(j["coframe"][leg],
                              std::string("$.coframe.") + leg, allowed);
    return FormField::one_form(doc.chart, comps[0], comps[1], comps[2]);
  };
  doc.coframe = Coframe3(leg_form("u"), leg_form("v"), leg_form("n"));

  if (!j.contains("f") || !j["f"].is_string())
    schema_error("$.f", "required expression string");
  doc.f = parse_checked(j["f"].get<std::string>(), "$.f", allowed);

  if (j.contains("kappa")) {
    auto& k = j["kappa"];
    if (k.is_array()) {
      doc.kappa_components = parse_triple(k, "$.kappa", allowed);
    } else if (k.is_object()) {
      for (auto& [key, value] : k.items())
        if (std::string(key) != "free_v")
          schema_error("$.kappa." + key, "unknown key");
      if (!k.contains("free_v") || !k["free_v"].is_string())
        schema_error("$.kappa.free_v", "expected an expression string");
      doc.kappa_free_v =
          parse_checked(k["free_v"].get<std::string>(), "$.kappa.free_v",
                        allowed);
    } else {
      schema_error("$.kappa", "expected 3 expressions or {free_v: expr}");
    }
  }

  if (j.contains("dilaton")) {
    if (!j["dilaton"].is_string())
      schema_error("$.dilaton", "expected an expression string");
    doc.dilaton =
        parse_checked(j["dilaton"].get<std::string>(), "$.dilaton", allowed);
  }
  if (j.contains("K")) {
    if (!j["K"].is_string())
      schema_error("$.K", "expected an expression string");
    doc.K = parse_checked(j["K"].get<std::string>(), "$.K", allowed);
  }
  if (j.contains("b")) doc.b_components = parse_triple(j["b"], "$.b", allowed);

  if ((doc.mode == "nsns" || doc.mode == "susy") && !doc.dilaton)
    schema_error("$.dilaton", "required in " + doc.mode + " mode");
  if (doc.mode == "susy" && !doc.K && !doc.kappa_components &&
      !doc.kappa_free_v)
    schema_error("$.K", "susy mode needs K or kappa");
  return doc;
}

ConfigDocument load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path, 0, "readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

FormField resolve_kappa(const ConfigDocument& doc, const CheckOptions& opt) {
  if (doc.kappa_components) {
    return FormField::one_form(doc.chart, (*doc.kappa_components)[0],
                               (*doc.kappa_components)[1],
                               (*doc.kappa_components)[2]);
  }
  KappaSolve ks = solve_kappa(doc.coframe, doc.f, opt, doc.kappa_free_v);
  return ks.kappa;
}

Report run_check_coframe(const ConfigDocument& doc, const CheckOptions& opt) {
  FormField kappa = resolve_kappa(doc, opt);
  Report rep;
  rep.command = "check-coframe";
  rep.seed = opt.seed;
  rep.merge(check_exterior_system(doc.coframe, doc.f, kappa, opt));
  rep.merge(integrability_check(doc.coframe, doc.f, kappa, opt));
  return rep;
}

Report run_curvature(const ConfigDocument& doc, CurvatureMode mode,
                     const CheckOptions& opt) {
  Report rep;
  rep.command = "curvature";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  auto pts = doc.chart.sample_points(opt.n_points, rng);
  MetricField g = metric_from_coframe(doc.coframe);

  if (mode == CurvatureMode::OracleOnly) {
    auto [ric, scal] = christoffel_curvature(g);
    double sym = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        sym = std::max(sym, max_residual(ric.t[i][j] - ric.t[j][i], pts));
    rep.add("oracle_ricci_symmetry", sym <= opt.tol, sym, opt.n_points);
    return rep;
  }

  FormField kappa = resolve_kappa(doc, opt);
  BilinearField formula_ric = ricci_from_formula(doc.coframe, doc.f, kappa);
  Expr formula_scal = scalar_curvature_formula(doc.coframe, doc.f);

  if (mode == CurvatureMode::FormulaOnly) {
    double sym = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        sym = std::max(
            sym, max_residual(formula_ric.t[i][j] - formula_ric.t[j][i], pts));
    rep.add("formula_ricci_symmetry", sym <= opt.tol, sym, opt.n_points);
    return rep;
  }

  auto [oracle_ric, oracle_scal] = christoffel_curvature(g);
  double worst = bilinear_max_residual(formula_ric - oracle_ric, pts);
  rep.add("ricci_formula_vs_oracle", worst <= opt.tol, worst, opt.n_points);
  double ws = max_residual(formula_scal - oracle_scal, pts);
  rep.add("scalar_formula_vs_oracle", ws <= opt.tol, ws, opt.n_points);
  return rep;
}

Report run_check_nsns(const ConfigDocument& doc, const CheckOptions& opt) {
  NSNSConfig cfg;
  cfg.coframe = doc.coframe;
  cfg.f_b = doc.f;
  cfg.phi = *doc.dilaton;

  Report rep;
  rep.command = "check-nsns";
  rep.seed = opt.seed;
  rep.merge(flux_dichotomy_check(cfg, opt));
  rep.merge(nsns_residuals(cfg, opt));
  return rep;
}

Report run_check_susy(const ConfigDocument& doc, const CheckOptions& opt) {
  NSNSConfig cfg;
  cfg.coframe = doc.coframe;
  cfg.f_b = doc.f;
  cfg.phi = *doc.dilaton;

  SusyData sd;
  sd.config = cfg;
  if (doc.K) {
    sd.K = *doc.K;
    sd.kappa_v_free = sd.K / (Expr::number(2) * cfg.f_b);
  } else if (doc.kappa_free_v) {
    sd.kappa_v_free = *doc.kappa_free_v;
    sd.K = Expr::number(2) * cfg.f_b * sd.kappa_v_free;
  } else {
    MetricField g = metric_from_coframe(doc.coframe);
    auto vs = sharp(g, doc.coframe.v);
    FormField kappa = FormField::one_form(doc.chart, (*doc.kappa_components)[0],
                                          (*doc.kappa_components)[1],
                                          (*doc.kappa_components)[2]);
    sd.kappa_v_free = pair_form_vector(kappa, vs);
    sd.K = Expr::number(2) * cfg.f_b * sd.kappa_v_free;
  }

  Report rep;
  rep.command = "check-susy";
  rep.seed = opt.seed;
  rep.merge(susy_config_residuals(cfg, opt));
  rep.merge(susy_solution_residuals(sd, opt));
  rep.merge(ddf_check(sd, opt));

  if (doc.b_components) {
    std::mt19937_64 rng(opt.seed);
    auto pts = doc.chart.sample_points(opt.n_points, rng);
    MetricField g = metric_from_coframe(doc.coframe);
    int orient = coframe_orientation(doc.coframe, pts);
    FormField b(2, doc.chart);
    b.comp[0b011] = (*doc.b_components)[0];
    b.comp[0b101] = (*doc.b_components)[1];
    b.comp[0b110] = (*doc.b_components)[2];
    FormField nu_g =
        hodge3(g, FormField::scalar(doc.chart, Expr::number(1)), orient);
    FormField res = exterior_d(b) + scale(Expr::number(2) * cfg.f_b, nu_g);
    double m = form_max_residual(res, pts);
    rep.add("b_field_curvature", m <= opt.tol, m, opt.n_points,
            "d b = -2 f_b nu_g");
  }
  return rep;
}

std::string solution_to_json(const GeneratedSolution& sol,
                             const Chart& chart) {
  nlohmann::ordered_json j;
  j["mode"] = "susy";
  j["coords"] = chart.coords;
  nlohmann::ordered_json box;
  for (int i = 0; i < chart.dim(); ++i)
    box[chart.coords[i]] = {chart.box[i].first, chart.box[i].second};
  j["box"] = std::move(box);
  if (chart.predicate) j["domain_predicate"] = chart.predicate->str();

  const Coframe3& c = sol.data.config.coframe;
  auto leg = [&](const FormField& w) {
    return std::vector<std::string>{w.comp[0b001].str(), w.comp[0b010].str(),
                                    w.comp[0b100].str()};
  };
  j["coframe"]["u"] = leg(c.u);
  j["coframe"]["v"] = leg(c.v);
  j["coframe"]["n"] = leg(c.n);
  j["f"] = sol.data.config.f_b.str();
  j["dilaton"] = sol.data.config.phi.str();
  j["K"] = sol.data.K.str();
  j["b"] = std::vector<std::string>{sol.b_field.comp[0b011].str(),
                                    sol.b_field.comp[0b101].str(),
                                    sol.b_field.comp[0b110].str()};
  return j.dump(2) + "\n";
}

}  // namespace spintor
