#include "superform/vfield.hpp"

namespace sform {

VField VField::make(ChartPtr chart, std::map<int32_t, Expr> components,
                    std::optional<Parity> fallback) {
  VField v;
  v.chart_ = std::move(chart);
  std::optional<Parity> inferred;
  for (auto it = components.begin(); it != components.end();) {
    const auto& [gen, coeff] = *it;
    if (!v.chart_->is_generator(gen)) throw Error("vector field component on a non-generator");
    Chart::check_same(v.chart_, coeff.chart());
    if (coeff.is_zero()) {
      it = components.erase(it);
      continue;
    }
    auto cp = coeff.homogeneous_parity();
    if (!cp) throw Error("vector field coefficient has mixed parity");
    Parity field_parity = *cp + v.chart_->parity(gen);
    if (inferred && *inferred != field_parity)
      throw Error("vector field has mixed parity components");
    inferred = field_parity;
    ++it;
  }
  v.comps_ = std::move(components);
  v.parity_ = inferred.value_or(fallback.value_or(Parity::Even));
  return v;
}

VField VField::zero(ChartPtr chart, Parity p) { return make(std::move(chart), {}, p); }

VField VField::coordinate(ChartPtr chart, int32_t gen) {
  std::map<int32_t, Expr> comps;
  comps.emplace(gen, Expr::constant(chart, GRat(1)));
  return make(std::move(chart), std::move(comps));
}

bool VField::is_zero() const { return comps_.empty(); }

Expr VField::component(int32_t gen) const {
  auto it = comps_.find(gen);
  if (it != comps_.end()) return it->second;
  return Expr::zero(chart_);
}

Expr VField::apply(const Expr& f) const {
  Chart::check_same(chart_, f.chart());
  Expr out = Expr::zero(chart_);
  for (const auto& [gen, coeff] : comps_) out += coeff * f.left_derivative(gen);
  return out;
}

VField VField::commutator(const VField& a, const VField& b) {
  Chart::check_same(a.chart_, b.chart_);
  int sign = (a.parity_ == Parity::Odd && b.parity_ == Parity::Odd) ? -1 : 1;
  std::map<int32_t, Expr> comps;
  for (int32_t gen : a.chart_->generator_ids()) {
    Expr zg = Expr::symbol(a.chart_, gen);
    Expr c = a.apply(b.apply(zg));
    Expr d = b.apply(a.apply(zg));
    Expr r = (sign < 0) ? c + d : c - d;
    if (!r.is_zero()) comps.emplace(gen, std::move(r));
  }
  return make(a.chart_, std::move(comps), a.parity_ + b.parity_);
}

VField VField::operator-() const {
  VField out = *this;
  for (auto& [g, c] : out.comps_) c = -c;
  return out;
}

VField operator+(const VField& a, const VField& b) {
  Chart::check_same(a.chart_, b.chart_);
  std::map<int32_t, Expr> comps = a.comps_;
  for (const auto& [g, c] : b.comps_) {
    auto it = comps.find(g);
    if (it == comps.end())
      comps.emplace(g, c);
    else {
      it->second += c;
      if (it->second.is_zero()) comps.erase(it);
    }
  }
  std::optional<Parity> fb = comps.empty() ? std::optional<Parity>(a.parity_) : std::nullopt;
  return VField::make(a.chart_, std::move(comps), fb);
}

VField operator-(const VField& a, const VField& b) { return a + (-b); }

VField VField::scaled(const Expr& c) const {
  std::map<int32_t, Expr> comps;
  for (const auto& [g, e] : comps_) {
    Expr p = c * e;
    if (!p.is_zero()) comps.emplace(g, std::move(p));
  }
  return make(chart_, std::move(comps), parity_);
}

bool operator==(const VField& a, const VField& b) {
  if (!Chart::same(*a.chart_, *b.chart_)) return false;
  if (a.comps_.size() != b.comps_.size()) return false;
  for (const auto& [g, c] : a.comps_) {
    auto it = b.comps_.find(g);
    if (it == b.comps_.end() || !(it->second == c)) return false;
  }
  return true;
}

VField VField::promoted(ChartPtr target) const {
  std::map<int32_t, Expr> comps;
  for (const auto& [g, c] : comps_) comps.emplace(g, c.promoted(target));
  return make(std::move(target), std::move(comps), parity_);
}

VField de_rham(const ChartPtr& pit_chart) {
  if (pit_chart->provenance() != Provenance::PiT) throw Error("not a PiT chart");
  std::map<int32_t, Expr> comps;
  for (int32_t g = 0; g < pit_chart->base_generator_count(); ++g)
    comps.emplace(g, Expr::symbol(pit_chart, pit_chart->fiber_of(g)));
  return VField::make(pit_chart, std::move(comps), Parity::Odd);
}

VField euler(const ChartPtr& pit_chart) {
  if (pit_chart->provenance() != Provenance::PiT) throw Error("not a PiT chart");
  std::map<int32_t, Expr> comps;
  for (int32_t g = 0; g < pit_chart->base_generator_count(); ++g) {
    int32_t fib = pit_chart->fiber_of(g);
    comps.emplace(fib, Expr::symbol(pit_chart, fib));
  }
  return VField::make(pit_chart, std::move(comps), Parity::Even);
}

std::optional<int64_t> degree_of(const Expr& f) {
  const ChartPtr& chart = f.chart();
  if (chart->provenance() != Provenance::PiT) throw Error("not a PiT chart");
  if (f.is_zero()) return 0;

  // Candidate degree from the first stored term, denominators included.
  auto mono_fiber_degree = [&](const PMono& m) {
    int64_t d = 0;
    for (const auto& [v, e] : m)
      if (chart->is_fiber(v.sym)) d += e;
    return d;
  };
  const auto& [odd, frac] = *f.parts().begin();
  int64_t deg = 0;
  for (int32_t s : odd)
    if (chart->is_fiber(s)) deg += 1;
  deg += mono_fiber_degree(frac.num().terms().begin()->first);
  for (const auto& [b, e] : frac.den_factors())
    deg -= e * mono_fiber_degree(b.terms().begin()->first);

  Expr ef = euler(chart).apply(f);
  if (ef == f.scaled(GRat(Rat(deg)))) return deg;
  return std::nullopt;
}

VField lift_lie(const VField& v, const ChartPtr& pit_chart) {
  if (pit_chart->provenance() != Provenance::PiT) throw Error("not a PiT chart");
  if (!Chart::extends(*pit_chart, *v.chart())) throw Error("chart is not an extension of the field's chart");
  VField q = de_rham(pit_chart);
  int sign = (v.parity() == Parity::Odd) ? -1 : 1;
  std::map<int32_t, Expr> comps;
  for (const auto& [g, c] : v.components()) {
    Expr cp = c.promoted(pit_chart);
    comps.emplace(g, cp);
    Expr qc = q.apply(cp);
    if (sign < 0) qc = -qc;
    if (!qc.is_zero()) comps.emplace(pit_chart->fiber_of(g), std::move(qc));
  }
  return VField::make(pit_chart, std::move(comps), v.parity());
}

VField lift_inner(const VField& v, const ChartPtr& pit_chart) {
  if (pit_chart->provenance() != Provenance::PiT) throw Error("not a PiT chart");
  if (!Chart::extends(*pit_chart, *v.chart())) throw Error("chart is not an extension of the field's chart");
  std::map<int32_t, Expr> comps;
  for (const auto& [g, c] : v.components())
    comps.emplace(pit_chart->fiber_of(g), c.promoted(pit_chart));
  return VField::make(pit_chart, std::move(comps), flip(v.parity()));
}

}  // namespace sform
