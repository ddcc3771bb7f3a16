// Command-line surface: verification subcommands over JSON chart documents
// plus the random algebra/reconstruction suites.
//
// Exit codes: 0 all checks pass, 1 residual or contract failure,
// 2 parse/schema error, 3 domain error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spintor/config_doc.hpp"
#include "spintor/verify_suites.hpp"

namespace {

using namespace spintor;

struct GlobalOpts {
  std::string format = "json";
  int points = 100;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

CheckOptions check_options(const GlobalOpts& g) {
  CheckOptions opt;
  opt.n_points = g.points;
  opt.tol = g.tol;
  opt.seed = g.seed;
  return opt;
}

int emit(const Report& rep, const GlobalOpts& g) {
  if (g.format == "text")
    std::cout << report_to_text(rep);
  else
    std::cout << report_to_json(rep);
  return rep.all_pass() ? 0 : 1;
}

int emit_error(const std::string& command, const std::string& kind,
               const std::string& message, int code,
               const GlobalOpts& g) {
  if (g.format == "text") {
    std::cout << "# " << command << "\nerror (" << kind << "): " << message
              << "\n";
  } else {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    j["exit_code"] = code;
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

Signature parse_signature_flag(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("--signature expects P,Q", 0, "P,Q");
  try {
    return Signature(std::stoi(s.substr(0, comma)),
                     std::stoi(s.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("--signature expects integers P,Q", 0, "P,Q");
  }
}

Chart parse_box_spec(const std::string& spec) {
  // "x_u=1:2,x_v=0:1,z=0:1"
  std::vector<std::string> coords;
  std::vector<std::pair<double, double>> box;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    auto colon = item.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos)
      throw ParseError("box spec entries look like name=lo:hi", 0,
                       "name=lo:hi");
    coords.push_back(item.substr(0, eq));
    try {
      box.emplace_back(std::stod(item.substr(eq + 1, colon - eq - 1)),
                       std::stod(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("box spec bounds must be numbers", 0, "number");
    }
  }
  if (coords.size() != 3)
    throw ParseError("box spec needs exactly three coordinates", 0,
                     "3 coordinates");
  return Chart(coords, box);
}

int run_command(const std::string& name, const GlobalOpts& g,
                const std::function<Report()>& body) {
  try {
    return emit(body(), g);
  } catch (const ParseError& e) {
    return emit_error(name, "parse", e.what(), 2, g);
  } catch (const DomainError& e) {
    return emit_error(name, "domain", e.what(), 3, g);
  } catch (const ContractError& e) {
    return emit_error(name, "contract", e.what(), 1, g);
  } catch (const InconsistencyError& e) {
    return emit_error(name, "inconsistency", e.what(), 1, g);
  } catch (const StructuralError& e) {
    return emit_error(name, "structural", e.what(), 1, g);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-geometry verification tool"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--points", g.points, "sample points per residual check");
  app.add_option("--tol", g.tol, "relative residual tolerance");
  app.add_option("--seed", g.seed, "RNG seed recorded in the report");

  std::string sig_flag = "2,1";
  int trials = 500;
  std::string file;
  bool oracle_only = false, formula_only = false;
  std::string a_expr, l_expr = "1", box_spec = "x_u=1:2,x_v=0:1,z=0:1";
  std::string out_file;
  std::string report_format = "text";

  auto* verify_algebra_cmd =
      app.add_subcommand("verify-algebra", "exact Kahler-Atiyah property suite");
  verify_algebra_cmd->add_option("--signature", sig_flag, "P,Q");
  verify_algebra_cmd->add_option("--trials", trials, "random trials");

  auto* verify_rec_cmd = app.add_subcommand(
      "verify-reconstruction", "spinor square / reconstruction suite");
  verify_rec_cmd->add_option("--signature", sig_flag, "P,Q");
  verify_rec_cmd->add_option("--trials", trials, "random trials");

  auto* check_coframe_cmd =
      app.add_subcommand("check-coframe", "skew-torsion exterior system");
  check_coframe_cmd->add_option("file", file, "config JSON")->required();

  auto* curvature_cmd =
      app.add_subcommand("curvature", "coframe curvature vs Christoffel oracle");
  curvature_cmd->add_option("file", file, "config JSON")->required();
  curvature_cmd->add_flag("--oracle-only", oracle_only);
  curvature_cmd->add_flag("--formula-only", formula_only);

  auto* check_nsns_cmd =
      app.add_subcommand("check-nsns", "NS-NS residual system");
  check_nsns_cmd->add_option("file", file, "config JSON")->required();

  auto* check_susy_cmd =
      app.add_subcommand("check-susy", "supersymmetric solution system");
  check_susy_cmd->add_option("file", file, "config JSON")->required();

  auto* gen_cmd = app.add_subcommand(
      "gen-solution", "closed-form local NS-NS supersymmetric solution");
  gen_cmd->add_option("--a", a_expr, "increasing function of x_u")->required();
  gen_cmd->add_option("--l", l_expr, "function of x_u");
  gen_cmd->add_option("--box", box_spec, "x_u=lo:hi,x_v=lo:hi,z=lo:hi");
  gen_cmd->add_option("--out", out_file, "output config path")->required();

  auto* report_cmd =
      app.add_subcommand("report", "re-render a saved JSON report");
  report_cmd->add_option("file", file, "report JSON")->required();
  report_cmd->add_option("--format", report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);
  CheckOptions opt = check_options(g);

  if (verify_algebra_cmd->parsed()) {
    return run_command("verify-algebra", g, [&] {
      return verify_algebra(parse_signature_flag(sig_flag), trials, g.seed);
    });
  }
  if (verify_rec_cmd->parsed()) {
    return run_command("verify-reconstruction", g, [&] {
      return verify_reconstruction(parse_signature_flag(sig_flag), trials,
                                   g.seed);
    });
  }
  if (check_coframe_cmd->parsed()) {
    return run_command("check-coframe", g, [&] {
      return run_check_coframe(load_config_file(file), opt);
    });
  }
  if (curvature_cmd->parsed()) {
    return run_command("curvature", g, [&] {
      CurvatureMode mode = CurvatureMode::Both;
      if (oracle_only) mode = CurvatureMode::OracleOnly;
      if (formula_only) mode = CurvatureMode::FormulaOnly;
      return run_curvature(load_config_file(file), mode, opt);
    });
  }
  if (check_nsns_cmd->parsed()) {
    return run_command("check-nsns", g, [&] {
      return run_check_nsns(load_config_file(file), opt);
    });
  }
  if (check_susy_cmd->parsed()) {
    return run_command("check-susy", g, [&] {
      return run_check_susy(load_config_file(file), opt);
    });
  }
  if (gen_cmd->parsed()) {
    return run_command("gen-solution", g, [&] {
      Chart chart = parse_box_spec(box_spec);
      Expr a = parse_expr(a_expr);
      Expr l = parse_expr(l_expr);
      for (const Expr* e : {&a, &l})
        for (const std::string& v : collect_variables(*e))
          if (v != chart.coords[0])
            throw ParseError("a and l may only reference " + chart.coords[0],
                             0, chart.coords[0]);
      GeneratedSolution sol = generate_local_solution(a, l, chart, opt);
      std::ofstream out(out_file);
      if (!out) throw DomainError("cannot write " + out_file);
      out << solution_to_json(sol, chart);
      Report rep = sol.report;
      rep.command = "gen-solution";
      rep.add("written", true, 0.0, 0, out_file);
      return rep;
    });
  }
  if (report_cmd->parsed()) {
    try {
      std::ifstream in(file);
      if (!in) return emit_error("report", "parse", "cannot open " + file, 2, g);
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
      Report rep;
      rep.command = j.value("command", "report");
      rep.seed = j.value("seed", std::uint64_t(0));
      for (auto& c : j["checks"]) {
        CheckItem item;
        item.name = c.value("name", "");
        std::string st = c.value("status", "pass");
        item.status = st == "pass"    ? CheckStatus::Pass
                      : st == "fail"  ? CheckStatus::Fail
                                      : CheckStatus::Skipped;
        item.max_residual = std::stod(c.value("max_residual", "0"));
        item.samples = c.value("samples", 0);
        item.note = c.value("notes", "");
        rep.items.push_back(std::move(item));
      }
      if (report_format == "json")
        std::cout << report_to_json(rep);
      else
        std::cout << report_to_text(rep);
      return rep.all_pass() ? 0 : 1;
    } catch (const nlohmann::json::exception& e) {
      return emit_error("report", "parse", e.what(), 2, g);
    }
  }
  return 2;
}
