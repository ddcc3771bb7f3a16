#include "spintor/chart.hpp"

#include <cmath>

namespace spintor {

Chart::Chart(std::vector<std::string> names,
             std::vector<std::pair<double, double>> b,
             std::optional<Expr> pred, Env prm)
    : coords(std::move(names)),
      box(std::move(b)),
      predicate(std::move(pred)),
      params(std::move(prm)) {
  if (coords.empty() || coords.size() != box.size())
    throw StructuralError("chart needs one box interval per coordinate");
  for (auto& [lo, hi] : box)
    if (!(lo <= hi)) throw StructuralError("empty box interval");
}

Env Chart::sample(std::mt19937_64& rng, int max_attempts) const {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Env env = params;
    for (int i = 0; i < dim(); ++i) {
      std::uniform_real_distribution<double> dist(box[i].first, box[i].second);
      env[coords[i]] = dist(rng);
    }
    if (!predicate) return env;
    try {
      if (evaluate(*predicate, env) > 0) return env;
    } catch (const DomainError&) {
      // predicate itself undefined here; treat as out of domain
    }
  }
  throw DomainError("could not sample an in-domain point (predicate unsatisfiable on box?)");
}

std::vector<Env> Chart::sample_points(int n, std::mt19937_64& rng) const {
  if (n < 1) throw StructuralError("need at least one sample point");
  std::vector<Env> pts;
  pts.reserve(n);
  int attempts = 0;
  const int budget = 100 * n;
  while (int(pts.size()) < n) {
    if (attempts >= budget)
      throw DomainError("could not find " + std::to_string(n) +
                        " in-domain points in " + std::to_string(budget) +
                        " attempts");
    Env env = params;
    for (int i = 0; i < dim(); ++i) {
      std::uniform_real_distribution<double> dist(box[i].first, box[i].second);
      env[coords[i]] = dist(rng);
    }
    ++attempts;
    if (predicate) {
      bool ok = false;
      try {
        ok = evaluate(*predicate, env) > 0;
      } catch (const DomainError&) {
        ok = false;
      }
      if (!ok) continue;
    }
    pts.push_back(std::move(env));
  }
  return pts;
}

bool is_zero(const Expr& e, const Chart& chart, int n_points,
             std::mt19937_64& rng, double tol) {
  for (const Env& p : chart.sample_points(n_points, rng)) {
    EvalScale es = evaluate_with_scale(e, p);
    if (std::fabs(es.value) > tol * (1 + es.scale)) return false;
  }
  return true;
}

double max_residual(const Expr& e, const std::vector<Env>& points) {
  double worst = 0;
  for (const Env& p : points) {
    EvalScale es = evaluate_with_scale(e, p);
    worst = std::max(worst, std::fabs(es.value) / (1 + es.scale));
  }
  return worst;
}

}  // namespace spintor
