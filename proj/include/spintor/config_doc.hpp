#pragma once

#include <array>
#include <optional>
#include <string>

#include "spintor/nsns.hpp"

namespace spintor {

// JSON input document shared by the chart-level commands. Expressions are
// strings in the expr grammar; every referenced variable must be a declared
// coordinate or parameter. Unknown top-level keys are rejected.
struct ConfigDocument {
  std::string mode;  // "coframe" | "nsns" | "susy"
  Chart chart;
  Coframe3 coframe;
  Expr f;
  std::optional<std::array<Expr, 3>> kappa_components;  // coordinate comps
  std::optional<Expr> kappa_free_v;
  std::optional<Expr> dilaton;
  std::optional<Expr> K;
  std::optional<std::array<Expr, 3>> b_components;  // masks 011, 101, 110
};

ConfigDocument load_config(const std::string& json_text);
ConfigDocument load_config_file(const std::string& path);

// kappa as a coordinate one-form: explicit components when given, solved
// from the exterior system otherwise (free_v honored when present).
FormField resolve_kappa(const ConfigDocument& doc, const CheckOptions& opt);

Report run_check_coframe(const ConfigDocument& doc, const CheckOptions& opt);

enum class CurvatureMode { Both, OracleOnly, FormulaOnly };
Report run_curvature(const ConfigDocument& doc, CurvatureMode mode,
                     const CheckOptions& opt);

Report run_check_nsns(const ConfigDocument& doc, const CheckOptions& opt);
Report run_check_susy(const ConfigDocument& doc, const CheckOptions& opt);

// Serializes generated susy data as a loadable config document.
std::string solution_to_json(const GeneratedSolution& sol,
                             const Chart& chart);

}  // namespace spintor
