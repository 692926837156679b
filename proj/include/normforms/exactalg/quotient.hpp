// Ring-generic extension machinery.
//
// QuadExt<R> models R[s]/(s^2 - s2) with the conjugation s -> -s; it carries
// quadratic field extensions with a symbolic or numeric parameter. QuotientExt
// models R[x]/(m) for a monic m with coefficients in R; its norm is the
// determinant of the multiplication matrix, computed division-free, so R only
// needs ring operations. Instantiated with SparsePoly for exact symbolic
// verification and with ModP for randomized evaluation of the same identity.
#pragma once

#include <concepts>
#include <vector>

#include "normforms/exactalg/matrix.hpp"

namespace normforms::exactalg {

template <class R>
concept Ring = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<R>;
  { a.one_like() } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

template <Ring R>
struct QuadExt {
  R a, b, s2;  // a + b*s with s^2 = s2

  QuadExt(R a_, R b_, R s2_) : a(std::move(a_)), b(std::move(b_)), s2(std::move(s2_)) {}
  static QuadExt scalar(const R& x, const R& s2) { return QuadExt(x, x.zero_like(), s2); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_scalar() const { return b.is_zero(); }
  QuadExt zero_like() const { return QuadExt(a.zero_like(), a.zero_like(), s2); }
  QuadExt one_like() const { return QuadExt(a.one_like(), a.zero_like(), s2); }

  QuadExt conj() const { return QuadExt(a, -b, s2); }
  R norm() const { return a * a - s2 * (b * b); }

  QuadExt operator-() const { return QuadExt(-a, -b, s2); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, x.s2);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, x.s2);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a * y.a + x.s2 * (x.b * y.b), x.a * y.b + x.b * y.a, x.s2);
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b && x.s2 == y.s2; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

template <Ring R>
class QuotientExt {
 public:
  using Elem = std::vector<R>;

  explicit QuotientExt(std::vector<R> monic_minpoly) : minpoly_(std::move(monic_minpoly)) {
    if (minpoly_.size() < 3) throw std::invalid_argument("quotient ring needs degree >= 2");
    if (!(minpoly_.back() == minpoly_.back().one_like()))
      throw std::invalid_argument("quotient minimal polynomial must be monic");
  }

  unsigned degree() const { return static_cast<unsigned>(minpoly_.size() - 1); }
  const std::vector<R>& minpoly() const { return minpoly_; }

  Elem zero() const { return Elem(degree(), minpoly_[0].zero_like()); }
  Elem one() const {
    Elem e = zero();
    e[0] = minpoly_[0].one_like();
    return e;
  }
  Elem from_scalar(const R& x) const {
    Elem e = zero();
    e[0] = x;
    return e;
  }
  Elem generator() const {
    Elem e = zero();
    e[1] = minpoly_[0].one_like();
    return e;
  }
  Elem element(std::vector<R> coords) const {
    if (coords.size() > degree()) throw std::invalid_argument("too many coordinates");
    Elem e = zero();
    for (std::size_t i = 0; i < coords.size(); ++i) e[i] = std::move(coords[i]);
    return e;
  }

  Elem add(const Elem& x, const Elem& y) const {
    Elem r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y[i];
    return r;
  }
  Elem sub(const Elem& x, const Elem& y) const {
    Elem r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - y[i];
    return r;
  }
  Elem neg(const Elem& x) const {
    Elem r = x;
    for (auto& c : r) c = -c;
    return r;
  }
  Elem scale(const Elem& x, const R& c) const {
    Elem r = x;
    for (auto& v : r) v = v * c;
    return r;
  }

  Elem mul(const Elem& x, const Elem& y) const {
    const unsigned d = degree();
    std::vector<R> conv(2 * d - 1, minpoly_[0].zero_like());
    for (unsigned i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (unsigned j = 0; j < d; ++j) conv[i + j] = conv[i + j] + x[i] * y[j];
    }
    // monic reduction: x^t -> -sum_j m[j] x^(t-d+j)
    for (unsigned t = 2 * d - 2; t >= d; --t) {
      if (conv[t].is_zero()) continue;
      R c = conv[t];
      conv[t] = c.zero_like();
      for (unsigned j = 0; j < d; ++j) conv[t - d + j] = conv[t - d + j] - c * minpoly_[j];
    }
    conv.resize(d);
    return conv;
  }

  Elem pow(const Elem& x, unsigned e) const {
    Elem acc = one(), b = x;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      if (e >>= 1) b = mul(b, b);
    }
    return acc;
  }

  bool is_zero(const Elem& x) const {
    for (const auto& c : x)
      if (!c.is_zero()) return false;
    return true;
  }

  // Matrix of multiplication by a in the power basis (columns are images of
  // basis vectors).
  Matrix<R> mult_matrix(const Elem& a) const {
    const unsigned d = degree();
    Matrix<R> m(d, d, minpoly_[0].zero_like());
    Elem col = a;
    for (unsigned j = 0;; ++j) {
      for (unsigned i = 0; i < d; ++i) m.at(i, j) = col[i];
      if (j + 1 == d) break;
      col = mul_by_x(col);
    }
    return m;
  }

  R norm(const Elem& a) const { return det_cofactor(mult_matrix(a)); }

  R trace(const Elem& a) const {
    Matrix<R> m = mult_matrix(a);
    R t = minpoly_[0].zero_like();
    for (unsigned i = 0; i < degree(); ++i) t = t + m.at(i, i);
    return t;
  }

 private:
  Elem mul_by_x(const Elem& a) const {
    const unsigned d = degree();
    Elem r = zero();
    R top = a[d - 1];
    for (unsigned i = d - 1; i >= 1; --i) r[i] = a[i - 1];
    if (!top.is_zero())
      for (unsigned j = 0; j < d; ++j) r[j] = r[j] - top * minpoly_[j];
    return r;
  }

  std::vector<R> minpoly_;
};

}  // namespace normforms::exactalg
