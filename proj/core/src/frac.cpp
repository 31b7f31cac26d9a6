#include "superform/frac.hpp"

#include <algorithm>

namespace sform {

namespace {

int den_base_cmp(const Poly& a, const Poly& b) { return Poly::compare(a, b); }

}  // namespace

bool Frac::needs_rewrite(const Poly& p, const RewriteSet& rs) {
  if (rs.empty()) return false;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m)
      if (e >= 2 && v.deriv.empty() && rs.count(v.sym)) return true;
  return false;
}

Frac Frac::rewrite_poly(const Poly& p, const RewriteSet& rs) {
  if (!needs_rewrite(p, rs)) return Frac(p);
  Frac acc;
  Poly clean;
  for (const auto& [m, c] : p.terms()) {
    PMono rest;
    Frac extra = Frac::scalar(GRat(1));
    bool touched = false;
    for (const auto& [v, e] : m) {
      const Frac* target = nullptr;
      if (e >= 2 && v.deriv.empty()) {
        auto it = rs.find(v.sym);
        if (it != rs.end()) target = &it->second;
      }
      if (!target) {
        rest.emplace_back(v, e);
        continue;
      }
      touched = true;
      int32_t k = e / 2, r = e % 2;
      extra = Frac::mul(extra, target->pow(k, RewriteSet{}), RewriteSet{});
      if (r) rest.emplace_back(v, 1);
    }
    if (!touched) {
      clean.add_term(m, c);
    } else {
      acc = Frac::add(acc, extra.is_scalar() && extra.scalar_value().is_one()
                               ? Frac(Poly::term(rest, c))
                               : Frac::mul(Frac(Poly::term(rest, c)), extra, RewriteSet{}),
                      RewriteSet{});
    }
  }
  return Frac::add(acc, Frac(std::move(clean)), RewriteSet{});
}

Poly Frac::den_product() const {
  Poly out = Poly::scalar(GRat(1));
  for (const auto& [b, e] : den_) out *= b.pow(e);
  return out;
}

void Frac::push_den(Poly base, int32_t exp, GRat& scale_acc) {
  if (exp == 0) return;
  if (base.is_zero()) throw Error("zero denominator");
  // Worklist: peel monomial content and scalars, then mutual refinement
  // against existing bases so products and powers land on the same atoms.
  std::vector<std::pair<Poly, int32_t>> work;
  work.emplace_back(std::move(base), exp);
  auto insert_atom = [&](Poly b, int32_t e) {
    // b is monic, content-free (or a single variable) and non-scalar
    for (auto& [eb, ee] : den_) {
      if (eb == b) {
        ee += e;
        return;
      }
      if (auto q = b.exact_div(eb)) {
        ee += e;
        work.emplace_back(std::move(*q), e);
        return;
      }
      if (auto q = eb.exact_div(b)) {
        int32_t old = ee;
        Poly rem = std::move(*q);
        eb = std::move(b);
        ee = old + e;
        work.emplace_back(std::move(rem), old);
        return;
      }
    }
    den_.emplace_back(std::move(b), e);
  };
  while (!work.empty()) {
    auto [b, e] = std::move(work.back());
    work.pop_back();
    PMono content = b.monomial_content();
    if (!content.empty()) {
      b = b.divided_by_mono(content);
      for (const auto& [v, ve] : content) insert_atom(Poly::variable(v), ve * e);
    }
    if (b.is_scalar()) {
      scale_acc *= b.scalar_value().pow(static_cast<unsigned>(e)).inverse();
      continue;
    }
    GRat lc = b.leading().second;
    if (!lc.is_one()) {
      scale_acc *= lc.pow(static_cast<unsigned>(e)).inverse();
      b = b.scaled(lc.inverse());
    }
    insert_atom(std::move(b), e);
  }
}

void Frac::sort_den() {
  std::sort(den_.begin(), den_.end(), [](const auto& a, const auto& b) {
    return den_base_cmp(a.first, b.first) < 0;
  });
}

void Frac::merge_den(const std::vector<std::pair<Poly, int32_t>>& other, GRat& scale_acc) {
  for (const auto& [b, e] : other) push_den(b, e, scale_acc);
}

void Frac::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    bool erased = false;
    while (it->second > 0) {
      auto q = num_.exact_div(it->first);
      if (!q) break;
      num_ = std::move(*q);
      if (--it->second == 0) {
        it = den_.erase(it);
        erased = true;
        break;
      }
    }
    if (!erased) ++it;
  }
  sort_den();
}

Frac Frac::quotient(Poly num, const Poly& den, const RewriteSet& rs) {
  if (den.is_zero()) throw Error("zero denominator");
  Frac n = rewrite_poly(num, rs);
  Frac d = rewrite_poly(den, rs);
  return div(n, d, rs);
}

Frac Frac::operator-() const {
  Frac out = *this;
  out.num_ = -out.num_;
  return out;
}

Frac Frac::scaled(const GRat& c) const {
  if (c.is_zero()) return Frac();
  Frac out = *this;
  out.num_ = out.num_.scaled(c);
  return out;
}

Frac Frac::add(const Frac& a, const Frac& b, const RewriteSet& rs) {
  (void)rs;  // scaling by rewrite-free bases cannot create rewritable powers
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Frac out;
  GRat scale(1);
  out.den_ = a.den_;
  for (const auto& [bb, be] : b.den_) {
    auto it = std::find_if(out.den_.begin(), out.den_.end(),
                           [&](const auto& p) { return p.first == bb; });
    if (it == out.den_.end())
      out.den_.emplace_back(bb, be);
    else
      it->second = std::max(it->second, be);
  }
  Poly na = a.num_, nb = b.num_;
  for (const auto& [bb, be] : out.den_) {
    int32_t ea = 0, eb = 0;
    for (const auto& [x, e] : a.den_)
      if (x == bb) ea = e;
    for (const auto& [x, e] : b.den_)
      if (x == bb) eb = e;
    if (be > ea) na *= bb.pow(be - ea);
    if (be > eb) nb *= bb.pow(be - eb);
  }
  out.num_ = na + nb;
  out.reduce();
  return out;
}

Frac Frac::sub(const Frac& a, const Frac& b, const RewriteSet& rs) { return add(a, -b, rs); }

Frac Frac::mul(const Frac& a, const Frac& b, const RewriteSet& rs) {
  if (a.is_zero() || b.is_zero()) return Frac();
  Frac raw = rewrite_poly(a.num_ * b.num_, rs);
  Frac out;
  GRat scale(1);
  out.num_ = raw.num_;
  out.merge_den(raw.den_, scale);
  out.merge_den(a.den_, scale);
  out.merge_den(b.den_, scale);
  out.num_ = out.num_.scaled(scale);
  out.reduce();
  return out;
}

Frac Frac::inverse(const RewriteSet& rs) const {
  if (is_zero()) throw Error("division by zero");
  // Rationalize rewritable parameters out of the would-be denominator by
  // conjugate multiplication, so canonical denominators stay free of them.
  Poly cand = num_;
  Frac numer(den_product());
  for (int guard = 0;; ++guard) {
    if (guard > 64) throw Error("denominator rationalization did not terminate");
    int32_t sym = -1;
    for (const auto& [s, t] : rs)
      if (cand.max_exponent(s) > 0) {
        sym = s;
        break;
      }
    if (sym < 0) break;
    // cand = a + sym*b with a, b free of sym
    Poly a, b;
    Var v{sym, {}};
    for (const auto& [m, c] : cand.terms()) {
      auto q = mono_div(m, PMono{{v, 1}});
      if (q)
        b.add_term(*q, c);
      else
        a.add_term(m, c);
    }
    Poly mult = a.is_zero() ? Poly::variable(v) : a - Poly::variable(v) * b;
    Frac rcand = rewrite_poly(cand * mult, rs);
    numer = Frac::mul(numer, Frac(mult), rs);
    if (!rcand.is_poly()) numer = Frac::mul(numer, Frac(rcand.den_product()), rs);
    cand = rcand.num_;
  }
  Frac out;
  GRat scale(1);
  out.num_ = numer.num_;
  out.den_ = numer.den_;
  out.push_den(std::move(cand), 1, scale);
  out.num_ = out.num_.scaled(scale);
  out.reduce();
  return out;
}

Frac Frac::div(const Frac& a, const Frac& b, const RewriteSet& rs) {
  return mul(a, b.inverse(rs), rs);
}

Frac Frac::pow(int k, const RewriteSet& rs) const {
  if (k < 0) return inverse(rs).pow(-k, rs);
  Frac acc = Frac::scalar(GRat(1));
  Frac base = *this;
  while (k) {
    if (k & 1) acc = mul(acc, base, rs);
    if (k >>= 1) base = mul(base, base, rs);
  }
  return acc;
}

Frac Frac::derivative(int32_t sym, const DerivRaiser& raise, const RewriteSet& rs) const {
  Frac out;
  {
    Frac t;
    t.num_ = num_.derivative(sym, raise);
    t.den_ = den_;
    t.reduce();
    out = t;
  }
  for (size_t j = 0; j < den_.size(); ++j) {
    Poly db = den_[j].first.derivative(sym, raise);
    if (db.is_zero()) continue;
    Frac t;
    t.num_ = num_ * db;
    t.num_ = t.num_.scaled(GRat(Rat(-den_[j].second)));
    t.den_ = den_;
    t.den_[j].second += 1;
    t.reduce();
    out = add(out, t, rs);
  }
  return out;
}

bool Frac::depends_on(int32_t sym) const {
  if (num_.depends_on(sym)) return true;
  for (const auto& [b, e] : den_)
    if (b.depends_on(sym)) return true;
  return false;
}

bool operator==(const Frac& a, const Frac& b) {
  if (!(a.num_ == b.num_)) return false;
  if (a.den_.size() != b.den_.size()) return false;
  for (size_t i = 0; i < a.den_.size(); ++i)
    if (a.den_[i].second != b.den_[i].second || !(a.den_[i].first == b.den_[i].first))
      return false;
  return true;
}

}  // namespace sform
