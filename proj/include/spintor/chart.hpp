#pragma once

#include <optional>
#include <random>
#include <vector>

#include "spintor/expr.hpp"

namespace spintor {

// Coordinate chart: ordered coordinate names, a sampling box, an optional
// domain predicate (an expression required to be positive), and optional
// named constants merged into every evaluation environment.
struct Chart {
  std::vector<std::string> coords;
  std::vector<std::pair<double, double>> box;  // per-coordinate [lo, hi]
  std::optional<Expr> predicate;
  Env params;

  Chart() = default;
  Chart(std::vector<std::string> names,
        std::vector<std::pair<double, double>> b,
        std::optional<Expr> pred = std::nullopt, Env prm = {});

  int dim() const { return int(coords.size()); }

  // One in-domain sample point; resamples on predicate failure with a
  // bounded retry budget.
  Env sample(std::mt19937_64& rng, int max_attempts = 100) const;

  // n in-domain sample points; throws DomainError if the predicate cannot be
  // met within 100*n attempts.
  std::vector<Env> sample_points(int n, std::mt19937_64& rng) const;
};

// Probabilistic zero test: |e(p)| <= tol * (1 + scale(p)) at n random
// in-domain points, where scale(p) is the largest subterm magnitude at p.
bool is_zero(const Expr& e, const Chart& chart, int n_points,
             std::mt19937_64& rng, double tol = 1e-8);

// Largest normalized residual |e(p)| / (1 + scale(p)) over the points.
double max_residual(const Expr& e, const std::vector<Env>& points);

}  // namespace spintor
