// Dense univariate polynomial arithmetic over Value coefficients, used for
// extension-field arithmetic, irreducibility testing and test oracles.
// Polynomials are coefficient vectors in ascending degree with no trailing
// zeros; the empty vector is the zero polynomial.
#pragma once

#include <utility>
#include <vector>

#include "normforms/exactalg/field.hpp"

namespace normforms::exactalg::upoly {

using Poly = std::vector<Value>;

int deg(const Poly& p);
void normalize(Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Value& c);
Value eval(const Poly& p, const Value& x);
Poly derivative(const Poly& p);

// Remainder modulo a monic divisor; needs only ring operations.
Poly rem_monic(const Poly& a, const Poly& monic);

// Field division: quotient and remainder by an arbitrary nonzero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd over a field.
Poly gcd_monic(const Poly& a, const Poly& b, const FieldPtr& field);

// g, s, t with s*a + t*b = g (g monic) over a field.
void xgcd(const Poly& a, const Poly& b, const FieldPtr& field, Poly& g, Poly& s, Poly& t);

Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& monic, const FieldPtr& field);

// Resultant of two polynomials over a field, via the Euclidean scheme.
Value resultant(const Poly& a, const Poly& b, const FieldPtr& field);

}  // namespace normforms::exactalg::upoly
