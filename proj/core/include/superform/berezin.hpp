#pragma once

#include "superform/expr.hpp"

#include <span>

namespace sform {

/// Iterated Berezin integral over the listed odd generators; the last listed
/// generator is integrated first (innermost), one variable at a time via
/// int d(theta) (a + b*theta) = b.
Expr berezin_integral(const Expr& f, std::span<const int32_t> odd_gens);
Expr berezin_integral(const Expr& f, const std::vector<std::string>& odd_names);

/// Supermetric: even non-degenerate quadratic function on the T-extension,
/// G = z g z + z Gamma sigma + sigma GammaT z + sigma h sigma, with blocks
/// living on the base chart.
class Metric {
 public:
  static Metric make(const ChartPtr& base, std::vector<std::vector<Expr>> g,
                     std::vector<std::vector<Expr>> gamma, std::vector<std::vector<Expr>> gamma_t,
                     std::vector<std::vector<Expr>> h);

  /// Constant diagonal metric on a purely even base.
  static Metric diagonal(const ChartPtr& base, const std::vector<Rat>& entries);

  const ChartPtr& base_chart() const { return base_; }
  const ChartPtr& t_chart() const { return tchart_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const Expr& quadratic_form() const { return g_expr_; }
  const std::vector<std::vector<Expr>>& g_block() const { return g_; }

  /// Ber G = det(g - Gamma h^-1 GammaT) / det h; det g when n = 0.
  Expr berezinian() const;
  bool is_regular() const { return !berezinian().is_zero(); }

 private:
  ChartPtr base_, tchart_;
  int m_ = 0, n_ = 0;
  std::vector<std::vector<Expr>> g_, gamma_, gamma_t_, h_;
  Expr g_expr_;
};

/// Hodge star on the PiT chart of a purely even base with constant rational
/// g whose determinant is +-(square): fiber Fourier transform against
/// exp(-i <psi'|psi>_G), normalized by sqrt(Ber G).
Expr hodge_star(const Expr& f, const Metric& metric);

/// Determinant of a square matrix of expressions (Laplace expansion).
Expr expr_det(const std::vector<std::vector<Expr>>& mat, const ChartPtr& chart);

}  // namespace sform
