#pragma once

#include "superform/expr.hpp"

#include <map>

namespace sform {

/// Supervector field: a derivation given by one coefficient per generator,
/// acting by V(f) = sum_a coeff(z^a) * d_L f / d z^a. Homogeneous parity.
class VField {
 public:
  VField() = default;

  /// Components may omit zero coefficients. Parity is inferred from the
  /// non-zero components and must be consistent; `fallback` is used for the
  /// zero field.
  static VField make(ChartPtr chart, std::map<int32_t, Expr> components,
                     std::optional<Parity> fallback = std::nullopt);
  static VField zero(ChartPtr chart, Parity p = Parity::Even);

  /// d / d generator, as a vector field.
  static VField coordinate(ChartPtr chart, int32_t gen);

  const ChartPtr& chart() const { return chart_; }
  Parity parity() const { return parity_; }
  bool is_zero() const;
  Expr component(int32_t gen) const;
  const std::map<int32_t, Expr>& components() const { return comps_; }

  Expr apply(const Expr& f) const;

  /// Supercommutator [V, W] = V W - (-1)^{|V||W|} W V, as a vector field.
  static VField commutator(const VField& a, const VField& b);

  VField operator-() const;
  friend VField operator+(const VField& a, const VField& b);
  friend VField operator-(const VField& a, const VField& b);
  VField scaled(const Expr& c) const;  // left multiplication by a function

  friend bool operator==(const VField& a, const VField& b);

  /// Promote every coefficient to an extension chart.
  VField promoted(ChartPtr target) const;

 private:
  ChartPtr chart_;
  std::map<int32_t, Expr> comps_;
  Parity parity_ = Parity::Even;
};

/// DeRham differential Q = dx^i d_{x^i} + dxi^a d_{xi^a} on a PiT chart.
VField de_rham(const ChartPtr& pit_chart);

/// Euler (fiber degree) field E on a PiT chart.
VField euler(const ChartPtr& pit_chart);

/// Fiber-degree of a form: k with E(f) = k f, nullopt when inhomogeneous.
/// Zero has degree 0 by convention.
std::optional<int64_t> degree_of(const Expr& f);

/// Lift of a homogeneous base field to the PiT chart encoding the Lie
/// derivative; parity preserved.
VField lift_lie(const VField& v, const ChartPtr& pit_chart);

/// Lift encoding the inner product; parity flipped.
VField lift_inner(const VField& v, const ChartPtr& pit_chart);

}  // namespace sform
