#pragma once

#include "superform/poly.hpp"

#include <map>

namespace sform {

class Frac;

/// Quadratic rewrite rules for parameter symbols: sym^2 -> target.
/// Targets never contain rewritable parameters themselves.
using RewriteSet = std::map<int32_t, Frac>;

/// Rational function num / prod(base_k ^ exp_k) over Q(i).
///
/// Denominator bases are monic, free of monomial content and of rewritable
/// parameters, pairwise distinct and kept in a deterministic order; the
/// numerator is reduced against every base by exact division. Equal values
/// produced by the engine's own operations therefore compare structurally.
class Frac {
 public:
  Frac() = default;
  explicit Frac(Poly num) : num_(std::move(num)) {}

  static Frac scalar(GRat c) { return Frac(Poly::scalar(std::move(c))); }
  static Frac variable(Var v, int32_t exp = 1) { return Frac(Poly::variable(std::move(v), exp)); }

  /// num / den with full normalization. den must be non-zero.
  static Frac quotient(Poly num, const Poly& den, const RewriteSet& rs);

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }
  bool is_scalar() const { return den_.empty() && num_.is_scalar(); }
  GRat scalar_value() const { return num_.scalar_value(); }

  const Poly& num() const { return num_; }
  const std::vector<std::pair<Poly, int32_t>>& den_factors() const { return den_; }
  Poly den_product() const;

  Frac operator-() const;
  static Frac add(const Frac& a, const Frac& b, const RewriteSet& rs);
  static Frac sub(const Frac& a, const Frac& b, const RewriteSet& rs);
  static Frac mul(const Frac& a, const Frac& b, const RewriteSet& rs);
  static Frac div(const Frac& a, const Frac& b, const RewriteSet& rs);
  Frac inverse(const RewriteSet& rs) const;
  Frac pow(int k, const RewriteSet& rs) const;
  Frac scaled(const GRat& c) const;

  Frac derivative(int32_t sym, const DerivRaiser& raise, const RewriteSet& rs) const;

  bool depends_on(int32_t sym) const;

  friend bool operator==(const Frac& a, const Frac& b);

  /// Applies parameter rewrites to a raw polynomial; may introduce
  /// denominators when a rewrite target has them.
  static Frac rewrite_poly(const Poly& p, const RewriteSet& rs);

 private:
  Poly num_;
  std::vector<std::pair<Poly, int32_t>> den_;

  void reduce();
  void push_den(Poly base, int32_t exp, GRat& scale_acc);
  void merge_den(const std::vector<std::pair<Poly, int32_t>>& other, GRat& scale_acc);
  void sort_den();
  static bool needs_rewrite(const Poly& p, const RewriteSet& rs);
};

}  // namespace sform
