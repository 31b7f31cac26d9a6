#pragma once

#include "superform/chart.hpp"

#include <functional>
#include <map>

namespace sform {

/// Strictly increasing odd symbol ids (generators and odd parameters).
using OddMono = std::vector<int32_t>;

struct OddLess {
  bool operator()(const OddMono& a, const OddMono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class ParityClass : uint8_t { Even, Odd, Mixed };

/// Z2-graded commutative polynomial on a chart: sum over odd monomials with
/// coefficients in the fraction field of the even subalgebra. Canonical by
/// construction; equal values have equal representations.
class Expr {
 public:
  using PartMap = std::map<OddMono, Frac, OddLess>;

  Expr() = default;

  static Expr zero(ChartPtr chart);
  static Expr constant(ChartPtr chart, GRat c);
  static Expr symbol(ChartPtr chart, int32_t id);
  static Expr symbol(ChartPtr chart, std::string_view name);
  static Expr fn_instance(ChartPtr chart, int32_t fn_id, std::vector<int32_t> deriv);
  static Expr from_var(ChartPtr chart, const Var& v);
  static Expr from_frac(ChartPtr chart, Frac f);

  bool valid() const { return chart_ != nullptr; }
  const ChartPtr& chart() const { return chart_; }
  const PartMap& parts() const { return parts_; }

  bool is_zero() const { return parts_.empty(); }
  bool is_odd_free() const;
  const Frac& coefficient() const;  // the odd-free part

  ParityClass parity_class() const;
  std::optional<Parity> homogeneous_parity() const;  // nullopt when mixed
  bool is_homogeneous(Parity p) const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr scaled(const GRat& c) const;
  Expr pow(int k) const;

  /// Exact division by an even, odd-generator-free expression.
  Expr divided_by(const Expr& d) const;

  Expr left_derivative(int32_t sym) const;
  Expr left_derivative(std::string_view name) const;

  /// Simultaneous parity-respecting substitution. All images must live on one
  /// common chart which coincides with or extends this expression's chart.
  Expr substituted(const std::vector<std::pair<int32_t, Expr>>& images) const;

  /// Reinterpret on a chart that extends this one (ids are stable).
  Expr promoted(ChartPtr target) const;

  bool depends_on(int32_t sym) const;

  /// Keeps the numerator terms selected by `keep`; denominators unchanged.
  Expr filtered(const std::function<bool(const OddMono&, const PMono&)>& keep) const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  /// Chain-rule hook for d/d`coord` covering formal function symbols.
  static DerivRaiser coordinate_raiser(const ChartPtr& chart, int32_t coord);

 private:
  ChartPtr chart_;
  PartMap parts_;

  void add_part(const OddMono& m, const Frac& f);
  void prune();
};

Expr operator*(const GRat& c, const Expr& e);

}  // namespace sform
