#include "superform/expr.hpp"

#include <algorithm>

namespace sform {

namespace {

const Frac kZeroFrac{};

/// Merge two ascending odd monomials; nullopt on a repeated generator.
/// The sign is the Koszul sign of sorting the concatenation a++b.
std::optional<std::pair<OddMono, int>> odd_merge(const OddMono& a, const OddMono& b) {
  OddMono out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return std::make_pair(std::move(out), (inversions % 2) ? -1 : 1);
}

}  // namespace

Expr Expr::zero(ChartPtr chart) {
  Expr e;
  e.chart_ = std::move(chart);
  return e;
}

Expr Expr::constant(ChartPtr chart, GRat c) {
  Expr e = zero(std::move(chart));
  if (!c.is_zero()) e.parts_.emplace(OddMono{}, Frac::scalar(std::move(c)));
  return e;
}

Expr Expr::from_frac(ChartPtr chart, Frac f) {
  Expr e = zero(std::move(chart));
  if (!f.is_zero()) e.parts_.emplace(OddMono{}, std::move(f));
  return e;
}

Expr Expr::symbol(ChartPtr chart, int32_t id) {
  const Symbol& s = chart->symbol(id);
  if (s.kind == SymbolKind::FormalFunction)
    return fn_instance(std::move(chart), id, std::vector<int32_t>(s.fn_args.size(), 0));
  Expr e = zero(chart);
  if (s.parity == Parity::Odd) {
    e.parts_.emplace(OddMono{id}, Frac::scalar(GRat(1)));
  } else {
    e.parts_.emplace(OddMono{}, Frac::variable(Var{id, {}}));
  }
  return e;
}

Expr Expr::symbol(ChartPtr chart, std::string_view name) {
  int32_t id = chart->require(name);
  return symbol(std::move(chart), id);
}

Expr Expr::fn_instance(ChartPtr chart, int32_t fn_id, std::vector<int32_t> deriv) {
  const Symbol& s = chart->symbol(fn_id);
  if (s.kind != SymbolKind::FormalFunction) throw Error("symbol is not a formal function");
  if (deriv.size() != s.fn_args.size())
    throw Error("derivative multi-index arity mismatch for " + s.name);
  for (int32_t d : deriv)
    if (d < 0) throw Error("negative derivative order");
  Expr e = zero(std::move(chart));
  e.parts_.emplace(OddMono{}, Frac::variable(Var{fn_id, std::move(deriv)}));
  return e;
}

Expr Expr::from_var(ChartPtr chart, const Var& v) {
  if (v.deriv.empty()) return symbol(std::move(chart), v.sym);
  return fn_instance(std::move(chart), v.sym, v.deriv);
}

bool Expr::is_odd_free() const {
  return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.empty());
}

const Frac& Expr::coefficient() const {
  auto it = parts_.find(OddMono{});
  return it == parts_.end() ? kZeroFrac : it->second;
}

ParityClass Expr::parity_class() const {
  bool has_even = false, has_odd = false;
  for (const auto& [m, f] : parts_) (m.size() % 2 ? has_odd : has_even) = true;
  if (has_even && has_odd) return ParityClass::Mixed;
  if (has_odd) return ParityClass::Odd;
  return ParityClass::Even;  // zero counts as even
}

std::optional<Parity> Expr::homogeneous_parity() const {
  switch (parity_class()) {
    case ParityClass::Even:
      return Parity::Even;
    case ParityClass::Odd:
      return Parity::Odd;
    default:
      return std::nullopt;
  }
}

bool Expr::is_homogeneous(Parity p) const {
  auto h = homogeneous_parity();
  return is_zero() || (h && *h == p);
}

void Expr::add_part(const OddMono& m, const Frac& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = parts_.emplace(m, f);
  if (!inserted) {
    it->second = Frac::add(it->second, f, chart_->rewrites());
    if (it->second.is_zero()) parts_.erase(it);
  }
}

void Expr::prune() {
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (it->second.is_zero())
      it = parts_.erase(it);
    else
      ++it;
  }
}

Expr Expr::operator-() const {
  Expr out = *this;
  for (auto& [m, f] : out.parts_) f = -f;
  return out;
}

Expr operator+(const Expr& a, const Expr& b) {
  Chart::check_same(a.chart_, b.chart_);
  Expr out = a;
  for (const auto& [m, f] : b.parts_) out.add_part(m, f);
  return out;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  Chart::check_same(a.chart_, b.chart_);
  Expr out = Expr::zero(a.chart_);
  const RewriteSet& rs = a.chart_->rewrites();
  for (const auto& [ma, fa] : a.parts_) {
    for (const auto& [mb, fb] : b.parts_) {
      auto merged = odd_merge(ma, mb);
      if (!merged) continue;
      Frac prod = Frac::mul(fa, fb, rs);
      if (merged->second < 0) prod = -prod;
      out.add_part(merged->first, prod);
    }
  }
  return out;
}

Expr operator*(const GRat& c, const Expr& e) { return e.scaled(c); }

Expr Expr::scaled(const GRat& c) const {
  Expr out = zero(chart_);
  if (c.is_zero()) return out;
  for (const auto& [m, f] : parts_) out.parts_.emplace(m, f.scaled(c));
  return out;
}

Expr Expr::pow(int k) const {
  if (k < 0) throw Error("negative exponent");
  Expr acc = constant(chart_, GRat(1));
  Expr base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

Expr Expr::divided_by(const Expr& d) const {
  Chart::check_same(chart_, d.chart_);
  if (d.is_zero()) throw Error("division by zero expression");
  if (!d.is_odd_free()) throw Error("denominator contains odd generators");
  const Frac& df = d.coefficient();
  Expr out = zero(chart_);
  for (const auto& [m, f] : parts_)
    out.parts_.emplace(m, Frac::div(f, df, chart_->rewrites()));
  out.prune();
  return out;
}

DerivRaiser Expr::coordinate_raiser(const ChartPtr& chart, int32_t coord) {
  const Symbol& s = chart->symbol(coord);
  if (s.kind != SymbolKind::Coordinate || chart->parity(coord) != Parity::Even) return nullptr;
  const Chart* c = chart.get();
  return [c, coord](const Var& v) -> std::optional<Var> {
    const Symbol& sym = c->symbol(v.sym);
    if (sym.kind != SymbolKind::FormalFunction) return std::nullopt;
    for (size_t j = 0; j < sym.fn_args.size(); ++j) {
      if (sym.fn_args[j] == coord) {
        Var raised = v;
        raised.deriv[j] += 1;
        return raised;
      }
    }
    return std::nullopt;
  };
}

Expr Expr::left_derivative(int32_t sym) const {
  if (!chart_->has(sym)) throw Error("unknown symbol");
  const Symbol& s = chart_->symbol(sym);
  if (s.kind == SymbolKind::FormalFunction)
    throw Error("cannot differentiate with respect to a formal function symbol");
  Expr out = zero(chart_);
  if (s.parity == Parity::Odd) {
    for (const auto& [m, f] : parts_) {
      auto it = std::find(m.begin(), m.end(), sym);
      if (it == m.end()) continue;
      size_t k = static_cast<size_t>(it - m.begin());
      OddMono rest;
      rest.reserve(m.size() - 1);
      rest.insert(rest.end(), m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      out.add_part(rest, (k % 2) ? -f : f);
    }
  } else {
    DerivRaiser raise = coordinate_raiser(chart_, sym);
    for (const auto& [m, f] : parts_)
      out.add_part(m, f.derivative(sym, raise, chart_->rewrites()));
  }
  return out;
}

Expr Expr::left_derivative(std::string_view name) const {
  return left_derivative(chart_->require(name));
}

Expr Expr::promoted(ChartPtr target) const {
  if (chart_ == target || Chart::same(*target, *chart_)) {
    Expr out = *this;
    out.chart_ = std::move(target);
    return out;
  }
  if (!Chart::extends(*target, *chart_)) throw Error("target chart does not extend source");
  Expr out = *this;
  out.chart_ = std::move(target);
  return out;
}

Expr Expr::substituted(const std::vector<std::pair<int32_t, Expr>>& images) const {
  if (images.empty()) return *this;
  ChartPtr target = images.front().second.chart();
  for (const auto& [id, img] : images) Chart::check_same(target, img.chart());
  if (!Chart::same(*target, *chart_) && !Chart::extends(*target, *chart_))
    throw Error("substitution images live on an incompatible chart");

  std::map<int32_t, const Expr*> imap;
  for (const auto& [id, img] : images) {
    if (!chart_->has(id)) throw Error("substituted symbol not in chart");
    const Symbol& s = chart_->symbol(id);
    bool substitutable = chart_->is_generator(id) ||
                         (s.kind == SymbolKind::Parameter && !chart_->param_has_rewrite(id));
    if (!substitutable) throw Error("symbol cannot be substituted: " + s.name);
    if (!img.is_zero() && !img.is_homogeneous(s.parity))
      throw Error("parity mismatch in substitution for " + s.name);
    if (!imap.emplace(id, &img).second) throw Error("repeated substitution for " + s.name);
  }

  auto image_of_var = [&](const Var& v) -> Expr {
    if (v.deriv.empty()) {
      auto it = imap.find(v.sym);
      if (it != imap.end()) return *it->second;
    } else {
      const Symbol& s = chart_->symbol(v.sym);
      for (int32_t arg : s.fn_args) {
        auto it = imap.find(arg);
        if (it != imap.end() && !(*it->second == Expr::symbol(target, arg)))
          throw Error("cannot substitute arguments of formal function " + s.name);
      }
    }
    return Expr::from_var(target, v);
  };

  auto subst_poly = [&](const Poly& p) -> Expr {
    Expr acc = Expr::zero(target);
    for (const auto& [m, c] : p.terms()) {
      Expr term = Expr::constant(target, c);
      for (const auto& [v, e] : m) term = term * image_of_var(v).pow(e);
      acc = acc + term;
    }
    return acc;
  };

  Expr result = Expr::zero(target);
  for (const auto& [m, f] : parts_) {
    Expr piece = subst_poly(f.num());
    for (const auto& [b, e] : f.den_factors()) piece = piece.divided_by(subst_poly(b).pow(e));
    for (int32_t s : m) {
      auto it = imap.find(s);
      piece = piece * (it != imap.end() ? *it->second : Expr::symbol(target, s));
    }
    result = result + piece;
  }
  return result;
}

bool Expr::depends_on(int32_t sym) const {
  for (const auto& [m, f] : parts_) {
    if (std::find(m.begin(), m.end(), sym) != m.end()) return true;
    if (f.depends_on(sym)) return true;
  }
  return false;
}

Expr Expr::filtered(const std::function<bool(const OddMono&, const PMono&)>& keep) const {
  Expr out = zero(chart_);
  for (const auto& [m, f] : parts_) {
    Poly kept;
    for (const auto& [pm, c] : f.num().terms())
      if (keep(m, pm)) kept.add_term(pm, c);
    if (kept.is_zero()) continue;
    Frac nf = Frac(kept);
    for (const auto& [b, e] : f.den_factors())
      nf = Frac::div(nf, Frac(b).pow(e, chart_->rewrites()), chart_->rewrites());
    out.add_part(m, nf);
  }
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (!a.chart_ || !b.chart_) return a.chart_ == b.chart_ && a.parts_ == b.parts_;
  if (a.chart_ != b.chart_ && !Chart::same(*a.chart_, *b.chart_)) return false;
  return a.parts_ == b.parts_;
}

}  // namespace sform
