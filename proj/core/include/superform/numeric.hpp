#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error type used by every module; carries a human-readable message only.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

std::string rat_to_string(const Rat& r);

/// Exact square root of a rational, if it is a perfect square.
std::optional<Rat> exact_sqrt(const Rat& r);

/// Element of the Gaussian rationals Q(i).
struct GRat {
  Rat re{0};
  Rat im{0};

  GRat() = default;
  GRat(int v) : re(v) {}
  GRat(long v) : re(v) {}
  GRat(Rat r) : re(std::move(r)) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }
  static GRat of(long num, long den) { return GRat(Rat(num, den)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_imaginary() const { return re == 0 && im != 0; }

  GRat operator-() const { return GRat(-re, -im); }

  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat nre = re * o.re - im * o.im;
    Rat nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  GRat inverse() const {
    Rat norm = re * re + im * im;
    if (norm == 0) throw Error("division by zero in Q(i)");
    return GRat(re / norm, -im / norm);
  }

  GRat& operator/=(const GRat& o) { return *this *= o.inverse(); }

  GRat pow(unsigned k) const {
    GRat acc(1);
    GRat base = *this;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) = default;
};

/// Canonical rendering: "a/b", "c/d*i" (with "i"/"-i" shorthand) or "a/b+c/d*i".
std::string grat_to_string(const GRat& v);

}  // namespace sform
