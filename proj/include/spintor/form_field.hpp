#pragma once

#include <array>
#include <bit>

#include "spintor/chart.hpp"
#include "spintor/polyform.hpp"

namespace spintor {

// Differential form on a three-dimensional chart. Components are Expr
// coefficients indexed by coordinate-subset mask (bit i = dx^i), and only
// masks of popcount == degree are populated.
struct FormField {
  int degree = 0;
  std::array<Expr, 8> comp{};  // all slots default to the 0 literal
  Chart chart;

  FormField() = default;
  FormField(int k, Chart c) : degree(k), chart(std::move(c)) {
    if (chart.dim() != 3)
      throw StructuralError("form fields require a three-dimensional chart");
    if (k < 0 || k > 3) throw StructuralError("form degree out of range");
  }

  static FormField zero(int k, const Chart& c) { return FormField(k, c); }

  static FormField scalar(const Chart& c, Expr f) {
    FormField r(0, c);
    r.comp[0] = std::move(f);
    return r;
  }

  static FormField one_form(const Chart& c, Expr a, Expr b, Expr d) {
    FormField r(1, c);
    r.comp[0b001] = std::move(a);
    r.comp[0b010] = std::move(b);
    r.comp[0b100] = std::move(d);
    return r;
  }

  // Coordinate differential dx^i.
  static FormField coordinate(const Chart& c, int i) {
    FormField r(1, c);
    r.comp[1u << i] = Expr::number(1);
    return r;
  }

  Expr component(BladeMask m) const { return comp[m & 7]; }

  FormField operator+(const FormField& o) const;
  FormField operator-(const FormField& o) const;
  FormField operator-() const;

  // Zero literal check (structural; residual testing goes through is_zero).
  bool structurally_zero() const {
    for (auto& e : comp)
      if (!e.is_zero_literal()) return false;
    return true;
  }
};

FormField scale(const Expr& f, const FormField& w);
FormField wedge(const FormField& a, const FormField& b);

// Coordinate exterior derivative. Input degree 3 yields 0 by convention.
FormField exterior_d(const FormField& w);

// Max normalized residual of all components over sample points.
double form_max_residual(const FormField& w, const std::vector<Env>& pts);

// Every component passes the probabilistic zero test.
bool form_is_zero(const FormField& w, int n_points, std::mt19937_64& rng,
                  double tol = 1e-8);

}  // namespace spintor
