// Prime-field scalar with a runtime modulus, used as the evaluation ring for
// probabilistic identity checks. Satisfies the same ring surface as Value and
// SparsePoly so the symbolic engines can be instantiated with it directly.
#pragma once

#include <cstdint>

#include "normforms/error.hpp"
#include "normforms/exactalg/numeric.hpp"

namespace normforms::exactalg {

struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 2;

  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

  bool is_zero() const { return v == 0; }
  ModP zero_like() const { return ModP(0, p); }
  ModP one_like() const { return ModP(1, p); }

  ModP operator-() const { return ModP(v == 0 ? 0 : p - v, p); }
  friend ModP operator+(const ModP& a, const ModP& b) {
    a.check(b);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return ModP(s, a.p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
  friend ModP operator*(const ModP& a, const ModP& b) {
    a.check(b);
    return ModP(mul_mod(a.v, b.v, a.p), a.p);
  }
  friend bool operator==(const ModP& a, const ModP& b) { return a.p == b.p && a.v == b.v; }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  ModP inv() const {
    if (v == 0) throw DivisionByZeroError("inverse of zero modulo p");
    return ModP(inv_mod(v, p), p);
  }
  ModP pow(std::uint64_t e) const { return ModP(pow_mod(v, e, p), p); }
  ModP exact_divide(const ModP& d) const { return *this * d.inv(); }

 private:
  void check(const ModP& o) const {
    if (p != o.p) throw std::invalid_argument("mixed moduli in ModP arithmetic");
  }
};

}  // namespace normforms::exactalg
