#include "superform/poly.hpp"

#include <algorithm>

namespace sform {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = numerator(r), d = denominator(r);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

std::string grat_to_string(const GRat& v) {
  if (v.is_zero()) return "0";
  std::string out;
  if (v.re != 0) out = rat_to_string(v.re);
  if (v.im != 0) {
    std::string imag;
    if (v.im == 1)
      imag = "i";
    else if (v.im == -1)
      imag = "-i";
    else {
      imag = rat_to_string(v.im);
      imag += "*i";
    }
    if (out.empty()) {
      out = imag;
    } else {
      if (imag[0] != '-') out += "+";
      out += imag;
    }
  }
  return out;
}

int64_t mono_degree(const PMono& m) {
  int64_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

int mono_cmp(const PMono& a, const PMono& b) {
  int64_t da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    const auto& [va, ea] = a[i];
    const auto& [vb, eb] = b[i];
    if (va != vb) return va < vb ? 1 : -1;  // earlier symbol => larger monomial
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

PMono mono_mul(const PMono& a, const PMono& b) {
  PMono out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

std::optional<PMono> mono_div(const PMono& a, const PMono& b) {
  PMono out;
  size_t i = 0;
  for (const auto& [vb, eb] : b) {
    while (i < a.size() && a[i].first < vb) out.push_back(a[i++]);
    if (i == a.size() || !(a[i].first == vb) || a[i].second < eb) return std::nullopt;
    if (a[i].second > eb) out.emplace_back(a[i].first, a[i].second - eb);
    ++i;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

Poly Poly::scalar(GRat c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(PMono{}, std::move(c));
  return p;
}

Poly Poly::variable(Var v, int32_t exp) {
  Poly p;
  if (exp < 0) throw Error("negative exponent");
  if (exp == 0) return scalar(GRat(1));
  p.terms_.emplace(PMono{{std::move(v), exp}}, GRat(1));
  return p;
}

Poly Poly::term(PMono m, GRat c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Poly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GRat Poly::scalar_value() const {
  if (terms_.empty()) return GRat(0);
  if (!is_scalar()) throw Error("polynomial is not a scalar");
  return terms_.begin()->second;
}

void Poly::add_term(const PMono& m, const GRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::scaled(const GRat& c) const {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Poly Poly::mono_scaled(const PMono& m, const GRat& c) const {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [mm, k] : terms_) out.terms_.emplace(mono_mul(mm, m), k * c);
  return out;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw Error("negative exponent");
  Poly acc = scalar(GRat(1));
  Poly base = *this;
  while (k) {
    if (k & 1) acc *= base;
    if (k >>= 1) base *= base;
  }
  return acc;
}

const std::pair<const PMono, GRat>& Poly::leading() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

Poly Poly::derivative(int32_t sym, const DerivRaiser& raise) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    for (size_t k = 0; k < m.size(); ++k) {
      const auto& [v, e] = m[k];
      std::optional<Var> raised;
      bool direct = (v.sym == sym && v.deriv.empty());
      if (!direct && raise) raised = raise(v);
      if (!direct && !raised) continue;

      PMono rest;
      rest.reserve(m.size());
      for (size_t j = 0; j < m.size(); ++j) {
        if (j == k) {
          if (e > 1) rest.emplace_back(v, e - 1);
        } else {
          rest.push_back(m[j]);
        }
      }
      GRat coeff = c * GRat(Rat(e));
      if (direct) {
        out.add_term(rest, coeff);
      } else {
        PMono with = mono_mul(rest, PMono{{*raised, 1}});
        out.add_term(with, coeff);
      }
    }
  }
  return out;
}

std::optional<Poly> Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  if (d.is_scalar()) return scaled(d.scalar_value().inverse());
  Poly rem = *this;
  Poly quo;
  const auto& [dm, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto q = mono_div(rm, dm);
    if (!q) return std::nullopt;
    GRat qc = rc / dc;
    quo.add_term(*q, qc);
    rem -= d.mono_scaled(*q, qc);
  }
  return quo;
}

PMono Poly::monomial_content() const {
  if (terms_.empty()) return {};
  auto it = terms_.begin();
  PMono content = it->first;
  for (++it; it != terms_.end() && !content.empty(); ++it) {
    const PMono& m = it->first;
    PMono next;
    size_t i = 0, j = 0;
    while (i < content.size() && j < m.size()) {
      if (content[i].first < m[j].first)
        ++i;
      else if (m[j].first < content[i].first)
        ++j;
      else {
        next.emplace_back(content[i].first, std::min(content[i].second, m[j].second));
        ++i;
        ++j;
      }
    }
    content = std::move(next);
  }
  return content;
}

Poly Poly::divided_by_mono(const PMono& m) const {
  Poly out;
  for (const auto& [mm, c] : terms_) {
    auto q = mono_div(mm, m);
    if (!q) throw Error("monomial does not divide polynomial");
    out.terms_.emplace(std::move(*q), c);
  }
  return out;
}

bool Poly::depends_on(int32_t sym) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (v.sym == sym) return true;
  return false;
}

int32_t Poly::max_exponent(int32_t sym) const {
  int32_t mx = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (v.sym == sym && v.deriv.empty()) mx = std::max(mx, e);
  return mx;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    int mc = mono_cmp(ia->first, ib->first);
    if (mc != 0) return mc;
    if (ia->second != ib->second) {
      if (ia->second.re != ib->second.re) return ia->second.re < ib->second.re ? -1 : 1;
      return ia->second.im < ib->second.im ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace sform
