#pragma once

#include "superform/numeric.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sform {

/// Commutative variable: a chart symbol id plus, for formal function symbols,
/// the derivative multi-index (one order per declared argument).
struct Var {
  int32_t sym = -1;
  std::vector<int32_t> deriv;

  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Sorted (Var, exponent) list with all exponents >= 1.
using PMono = std::vector<std::pair<Var, int32_t>>;

int64_t mono_degree(const PMono& m);

/// Graded lexicographic comparison; earlier chart symbols rank higher.
/// Returns <0, 0, >0.
int mono_cmp(const PMono& a, const PMono& b);

PMono mono_mul(const PMono& a, const PMono& b);
std::optional<PMono> mono_div(const PMono& a, const PMono& b);

struct MonoLess {
  bool operator()(const PMono& a, const PMono& b) const { return mono_cmp(a, b) < 0; }
};

/// Hook used by derivatives: maps a variable to its derivative variable with
/// respect to the coordinate being differentiated (formal function symbols
/// bump the matching slot of their multi-index). Returns nullopt when the
/// variable does not depend on that coordinate.
using DerivRaiser = std::function<std::optional<Var>(const Var&)>;

/// Multivariate polynomial over Q(i) in even chart symbols.
class Poly {
 public:
  using TermMap = std::map<PMono, GRat, MonoLess>;

  Poly() = default;

  static Poly scalar(GRat c);
  static Poly variable(Var v, int32_t exp = 1);
  static Poly term(PMono m, GRat c);

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  GRat scalar_value() const;  // requires is_scalar()
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const GRat& c) const;
  Poly mono_scaled(const PMono& m, const GRat& c) const;
  Poly pow(int k) const;  // k >= 0

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Leading term w.r.t. the graded-lex order. Requires non-zero.
  const std::pair<const PMono, GRat>& leading() const;

  /// d/d sym, with fn-symbol chain rule handled through `raise`.
  Poly derivative(int32_t sym, const DerivRaiser& raise) const;

  /// Exact polynomial quotient, or nullopt when not divisible.
  std::optional<Poly> exact_div(const Poly& d) const;

  /// Componentwise minimum exponent vector over all terms (empty for zero).
  PMono monomial_content() const;
  Poly divided_by_mono(const PMono& m) const;

  bool depends_on(int32_t sym) const;
  int32_t max_exponent(int32_t sym) const;

  void add_term(const PMono& m, const GRat& c);

  /// Deterministic total order for structural use (denominator bases).
  static int compare(const Poly& a, const Poly& b);

 private:
  TermMap terms_;
};

}  // namespace sform
