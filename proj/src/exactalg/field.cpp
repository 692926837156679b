#include "normforms/exactalg/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "normforms/exactalg/upoly.hpp"

namespace normforms::exactalg {

namespace {

std::vector<Value> pad_coords(std::vector<Value> coords, const FieldDesc& f) {
  const unsigned d = f.degree();
  if (coords.size() > d) throw std::invalid_argument("too many extension coordinates");
  while (coords.size() < d) coords.push_back(f.base()->zero());
  return coords;
}

bool value_as_rational(const Value& v, Rat* out) {
  switch (v.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      if (out) *out = v.rat();
      return true;
    case FieldDesc::Kind::Prime:
      return false;
    case FieldDesc::Kind::Extension: {
      const auto& c = v.coords();
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return value_as_rational(c[0], out);
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- Value ----

Value::Value() : field_(FieldDesc::rationals()), v_(Rat(0)) {}

Value Value::make_rational(Rat r) {
  Value v;
  v.field_ = FieldDesc::rationals();
  v.v_ = std::move(r);
  return v;
}

Value Value::make_residue(std::uint64_t r, FieldPtr f) {
  if (!f || f->kind() != FieldDesc::Kind::Prime) throw std::invalid_argument("residue needs a prime field");
  Value v;
  v.v_ = r % f->modulus();
  v.field_ = std::move(f);
  return v;
}

Value Value::make_extension(std::vector<Value> coords, FieldPtr f) {
  if (!f || f->kind() != FieldDesc::Kind::Extension) throw std::invalid_argument("extension value needs an extension field");
  for (const auto& c : coords)
    if (!same_field(c.field(), f->base())) throw FieldMismatchError("extension coordinate not in base field");
  Value v;
  v.v_ = pad_coords(std::move(coords), *f);
  v.field_ = std::move(f);
  return v;
}

bool Value::is_zero() const {
  switch (field_->kind()) {
    case FieldDesc::Kind::Rationals:
      return std::get<Rat>(v_) == 0;
    case FieldDesc::Kind::Prime:
      return std::get<std::uint64_t>(v_) == 0;
    case FieldDesc::Kind::Extension: {
      for (const auto& c : std::get<std::vector<Value>>(v_))
        if (!c.is_zero()) return false;
      return true;
    }
  }
  return false;
}

bool Value::is_one() const { return *this == field_->one(); }

Value Value::zero_like() const { return field_->zero(); }
Value Value::one_like() const { return field_->one(); }

const Rat& Value::rat() const {
  if (field_->kind() != FieldDesc::Kind::Rationals) throw std::invalid_argument("value is not rational");
  return std::get<Rat>(v_);
}

std::uint64_t Value::residue() const {
  if (field_->kind() != FieldDesc::Kind::Prime) throw std::invalid_argument("value is not a prime-field residue");
  return std::get<std::uint64_t>(v_);
}

const std::vector<Value>& Value::coords() const {
  if (field_->kind() != FieldDesc::Kind::Extension) throw std::invalid_argument("value is not an extension element");
  return std::get<std::vector<Value>>(v_);
}

Value Value::operator-() const {
  switch (field_->kind()) {
    case FieldDesc::Kind::Rationals:
      return make_rational(-std::get<Rat>(v_));
    case FieldDesc::Kind::Prime: {
      std::uint64_t r = std::get<std::uint64_t>(v_);
      return make_residue(r == 0 ? 0 : field_->modulus() - r, field_);
    }
    case FieldDesc::Kind::Extension: {
      std::vector<Value> c;
      c.reserve(coords().size());
      for (const auto& x : coords()) c.push_back(-x);
      return make_extension(std::move(c), field_);
    }
  }
  throw std::logic_error("unreachable");
}

Value operator+(const Value& a, const Value& b) {
  check_same_field(a, b);
  switch (a.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      return Value::make_rational(a.rat() + b.rat());
    case FieldDesc::Kind::Prime: {
      std::uint64_t p = a.field()->modulus();
      std::uint64_t s = a.residue() + b.residue();
      if (s >= p) s -= p;
      return Value::make_residue(s, a.field());
    }
    case FieldDesc::Kind::Extension: {
      std::vector<Value> c;
      c.reserve(a.coords().size());
      for (std::size_t i = 0; i < a.coords().size(); ++i) c.push_back(a.coords()[i] + b.coords()[i]);
      return Value::make_extension(std::move(c), a.field());
    }
  }
  throw std::logic_error("unreachable");
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Value& a, const Value& b) {
  check_same_field(a, b);
  switch (a.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      return Value::make_rational(a.rat() * b.rat());
    case FieldDesc::Kind::Prime:
      return Value::make_residue(mul_mod(a.residue(), b.residue(), a.field()->modulus()), a.field());
    case FieldDesc::Kind::Extension: {
      upoly::Poly pa = a.coords(), pb = b.coords();
      upoly::normalize(pa);
      upoly::normalize(pb);
      upoly::Poly prod = upoly::rem_monic(upoly::mul(pa, pb), a.field()->minpoly());
      return Value::make_extension(std::move(prod), a.field());
    }
  }
  throw std::logic_error("unreachable");
}

Value Value::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_->str());
  switch (field_->kind()) {
    case FieldDesc::Kind::Rationals:
      return make_rational(Rat(1) / std::get<Rat>(v_));
    case FieldDesc::Kind::Prime:
      return make_residue(inv_mod(std::get<std::uint64_t>(v_), field_->modulus()), field_);
    case FieldDesc::Kind::Extension: {
      upoly::Poly a = coords();
      upoly::normalize(a);
      upoly::Poly g, s, t;
      upoly::xgcd(a, field_->minpoly(), field_->base(), g, s, t);
      if (upoly::deg(g) != 0) throw DivisionByZeroError("element not invertible modulo minimal polynomial");
      upoly::Poly r = upoly::scale(s, g[0].inv());
      r = upoly::rem_monic(r, field_->minpoly());
      return make_extension(std::move(r), field_);
    }
  }
  throw std::logic_error("unreachable");
}

Value operator/(const Value& a, const Value& b) { return a * b.inv(); }

Value Value::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Value acc = one_like(), b = *this;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

bool operator==(const Value& a, const Value& b) {
  if (!same_field(a.field(), b.field())) return false;
  switch (a.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      return a.rat() == b.rat();
    case FieldDesc::Kind::Prime:
      return a.residue() == b.residue();
    case FieldDesc::Kind::Extension:
      return a.coords() == b.coords();
  }
  return false;
}

std::string Value::str() const {
  switch (field_->kind()) {
    case FieldDesc::Kind::Rationals:
      return rat_to_string(rat());
    case FieldDesc::Kind::Prime:
      return std::to_string(residue());
    case FieldDesc::Kind::Extension: {
      std::ostringstream os;
      bool first = true;
      const auto& g = field_->generator();
      const auto& c = coords();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c[i].str();
        if (i >= 1) os << "*" << g;
        if (i >= 2) os << "^" << i;
        first = false;
      }
      if (first) return "0";
      return "(" + os.str() + ")";
    }
  }
  return "?";
}

// ------------------------------------------------------------ FieldDesc ----

FieldPtr FieldDesc::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
    f->kind_ = Kind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr FieldDesc::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
  f->kind_ = Kind::Prime;
  f->modulus_ = p;
  return f;
}

FieldPtr FieldDesc::extension_trusted(const FieldPtr& base, std::vector<Value> monic_minpoly,
                                      std::string generator) {
  if (!base) throw std::invalid_argument("extension needs a base field");
  upoly::normalize(monic_minpoly);
  const int d = upoly::deg(monic_minpoly);
  if (d < 2) throw std::invalid_argument("minimal polynomial must have degree >= 2");
  for (const auto& c : monic_minpoly)
    if (!same_field(c.field(), base)) throw FieldMismatchError("minimal polynomial coefficient not in base field");
  if (!monic_minpoly.back().is_one()) throw std::invalid_argument("minimal polynomial must be monic");
  auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
  f->kind_ = Kind::Extension;
  f->base_ = base;
  f->minpoly_ = std::move(monic_minpoly);
  f->generator_ = generator.empty() ? "a" : std::move(generator);
  return f;
}

FieldPtr FieldDesc::extension(const FieldPtr& base, std::vector<Value> monic_minpoly,
                              std::string generator) {
  FieldPtr f = extension_trusted(base, std::move(monic_minpoly), std::move(generator));
  if (!minpoly_irreducible(f->minpoly(), base))
    throw std::invalid_argument("minimal polynomial is reducible over its base");
  return f;
}

std::uint64_t FieldDesc::modulus() const {
  if (kind_ != Kind::Prime) throw std::invalid_argument("not a prime field");
  return modulus_;
}

const FieldPtr& FieldDesc::base() const {
  if (kind_ != Kind::Extension) throw std::invalid_argument("not an extension field");
  return base_;
}

const std::vector<Value>& FieldDesc::minpoly() const {
  if (kind_ != Kind::Extension) throw std::invalid_argument("not an extension field");
  return minpoly_;
}

const std::string& FieldDesc::generator() const {
  if (kind_ != Kind::Extension) throw std::invalid_argument("not an extension field");
  return generator_;
}

unsigned FieldDesc::degree() const {
  return kind_ == Kind::Extension ? static_cast<unsigned>(minpoly_.size() - 1) : 1u;
}

unsigned FieldDesc::absolute_degree() const {
  return kind_ == Kind::Extension ? degree() * base_->absolute_degree() : 1u;
}

std::uint64_t FieldDesc::characteristic() const {
  switch (kind_) {
    case Kind::Rationals:
      return 0;
    case Kind::Prime:
      return modulus_;
    case Kind::Extension:
      return base_->characteristic();
  }
  return 0;
}

bool FieldDesc::finite() const { return characteristic() != 0; }

std::uint64_t FieldDesc::size() const {
  switch (kind_) {
    case Kind::Rationals:
      throw std::invalid_argument("rationals are not finite");
    case Kind::Prime:
      return modulus_;
    case Kind::Extension: {
      std::uint64_t b = base_->size();
      std::uint64_t acc = 1;
      for (unsigned i = 0; i < degree(); ++i) {
        if (acc > (std::uint64_t{1} << 62) / b) throw BudgetError("finite field too large to enumerate");
        acc *= b;
      }
      return acc;
    }
  }
  return 0;
}

bool FieldDesc::same(const FieldDesc& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Prime:
      return modulus_ == other.modulus_;
    case Kind::Extension:
      return base_->same(*other.base_) && minpoly_ == other.minpoly_;
  }
  return false;
}

std::string FieldDesc::str() const {
  switch (kind_) {
    case Kind::Rationals:
      return "rationals";
    case Kind::Prime:
      return "prime(" + std::to_string(modulus_) + ")";
    case Kind::Extension: {
      std::ostringstream os;
      os << "ext(" << base_->str() << "; ";
      for (std::size_t i = 0; i < minpoly_.size(); ++i) {
        if (i) os << " ";
        os << minpoly_[i].str();
      }
      os << "; " << generator_ << ")";
      return os.str();
    }
  }
  return "?";
}

Value FieldDesc::zero() const {
  switch (kind_) {
    case Kind::Rationals:
      return Value::make_rational(Rat(0));
    case Kind::Prime:
      return Value::make_residue(0, shared_from_this());
    case Kind::Extension:
      return Value::make_extension({}, shared_from_this());
  }
  throw std::logic_error("unreachable");
}

Value FieldDesc::one() const { return from_int(1); }

Value FieldDesc::from_rat(const Rat& r) const {
  switch (kind_) {
    case Kind::Rationals:
      return Value::make_rational(r);
    case Kind::Prime: {
      BigInt num = numerator(r), den = denominator(r);
      BigInt p(modulus_);
      BigInt nm = num % p;
      if (nm < 0) nm += p;
      BigInt dm = den % p;
      if (dm == 0) throw DivisionByZeroError("denominator vanishes modulo " + std::to_string(modulus_));
      std::uint64_t n64 = nm.convert_to<std::uint64_t>();
      std::uint64_t d64 = dm.convert_to<std::uint64_t>();
      return Value::make_residue(mul_mod(n64, inv_mod(d64, modulus_), modulus_), shared_from_this());
    }
    case Kind::Extension:
      return embed(base_->from_rat(r));
  }
  throw std::logic_error("unreachable");
}

Value FieldDesc::from_int(long long n) const { return from_rat(Rat(n)); }

Value FieldDesc::embed(const Value& base_elem) const {
  if (kind_ != Kind::Extension) throw std::invalid_argument("embed target must be an extension");
  if (!same_field(base_elem.field(), base_)) throw FieldMismatchError("embed source not in base field");
  return Value::make_extension({base_elem}, shared_from_this());
}

Value FieldDesc::project(const Value& elem) const {
  if (kind_ != Kind::Extension) throw std::invalid_argument("project source must be an extension");
  if (!same_field(elem.field(), shared_from_this())) throw FieldMismatchError("project argument in wrong field");
  const auto& c = elem.coords();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) throw std::invalid_argument("element does not lie in the base field");
  return c[0];
}

Value FieldDesc::element_at(std::uint64_t rank) const {
  switch (kind_) {
    case Kind::Rationals:
      throw std::invalid_argument("rationals are not enumerable");
    case Kind::Prime:
      if (rank >= modulus_) throw std::out_of_range("element rank out of range");
      return Value::make_residue(rank, shared_from_this());
    case Kind::Extension: {
      std::uint64_t b = base_->size();
      std::vector<Value> coords;
      coords.reserve(degree());
      for (unsigned i = 0; i < degree(); ++i) {
        coords.push_back(base_->element_at(rank % b));
        rank /= b;
      }
      if (rank != 0) throw std::out_of_range("element rank out of range");
      return Value::make_extension(std::move(coords), shared_from_this());
    }
  }
  throw std::logic_error("unreachable");
}

std::uint64_t FieldDesc::rank_of(const Value& v) const {
  if (!same_field(v.field(), shared_from_this())) throw FieldMismatchError("rank_of argument in wrong field");
  switch (kind_) {
    case Kind::Rationals:
      throw std::invalid_argument("rationals are not enumerable");
    case Kind::Prime:
      return v.residue();
    case Kind::Extension: {
      std::uint64_t b = base_->size();
      std::uint64_t acc = 0, mult = 1;
      for (const auto& c : v.coords()) {
        acc += base_->rank_of(c) * mult;
        mult *= b;
      }
      return acc;
    }
  }
  return 0;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

void check_same_field(const Value& a, const Value& b) {
  if (!same_field(a.field(), b.field()))
    throw FieldMismatchError("operands live in different fields: " + a.field()->str() + " vs " + b.field()->str());
}

// ------------------------------------------------------- irreducibility ----

namespace {

std::vector<BigInt> divisors_signed(const BigInt& n) {
  BigInt a = abs(n);
  if (a > BigInt(1000000000000LL))
    throw UnsupportedError("constant term too large for the bounded factor search");
  std::vector<BigInt> divs;
  for (BigInt i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      divs.push_back(i);
      if (i * i != a) divs.push_back(a / i);
    }
  }
  std::vector<BigInt> out;
  out.reserve(divs.size() * 2);
  for (const auto& d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

BigInt eval_int_poly(const std::vector<BigInt>& c, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Exact divisibility of a monic integer polynomial by x^2 + p x + q.
bool divides_quadratic(const std::vector<BigInt>& m, const BigInt& p, const BigInt& q) {
  std::vector<BigInt> r = m;
  for (std::size_t i = r.size(); i-- > 2;) {
    BigInt c = r[i];
    r[i] = 0;
    r[i - 1] -= c * p;
    r[i - 2] -= c * q;
  }
  return r[0] == 0 && r[1] == 0;
}

// Degree <= 5 over the rationals: rational root test plus a bounded search
// for monic integer quadratic factors (any rational factorization of a monic
// integer polynomial has monic integer factors).
bool rationals_irreducible(const std::vector<Rat>& monic) {
  const std::size_t d = monic.size() - 1;
  if (d > 5) throw UnsupportedError("irreducibility over the rationals implemented for degree <= 5 only");
  if (d == 1) return true;

  // Substitute y = D x to reach a monic integer polynomial.
  BigInt D = 1;
  for (const Rat& c : monic) D = lcm(D, denominator(c));
  std::vector<BigInt> m(d + 1);
  BigInt dpow = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    Rat scaled = monic[i] * Rat(dpow);
    if (denominator(scaled) != 1) throw std::logic_error("integer normalization failed");
    m[i] = numerator(scaled);
    dpow *= D;
  }

  if (m[0] == 0) return false;
  for (const BigInt& r : divisors_signed(m[0]))
    if (eval_int_poly(m, r) == 0) return false;
  if (d <= 3) return true;

  BigInt maxc = 0;
  for (const auto& c : m) {
    BigInt a = abs(c);
    if (a > maxc) maxc = a;
  }
  BigInt bound_p = 2 * (1 + maxc);
  if (bound_p > BigInt(2000000))
    throw UnsupportedError("coefficients too large for the bounded factor search");
  for (const BigInt& q : divisors_signed(m[0]))
    for (BigInt p = -bound_p; p <= bound_p; ++p)
      if (divides_quadratic(m, p, q)) return false;
  return true;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test over a finite field of q elements.
bool finite_field_irreducible(const std::vector<Value>& monic, const FieldPtr& base) {
  const std::uint64_t q = base->size();
  const unsigned d = static_cast<unsigned>(monic.size() - 1);
  upoly::Poly x = {base->zero(), base->one()};
  upoly::Poly t = x;
  for (unsigned i = 0; i < d; ++i) t = upoly::pow_mod(t, q, monic, base);
  if (t != upoly::rem_monic(x, monic)) return false;
  for (unsigned r : prime_divisors(d)) {
    upoly::Poly h = x;
    for (unsigned i = 0; i < d / r; ++i) h = upoly::pow_mod(h, q, monic, base);
    upoly::Poly g = upoly::gcd_monic(upoly::sub(h, x), monic, base);
    if (upoly::deg(g) != 0) return false;
  }
  return true;
}

bool poly_has_rational_coeffs(const std::vector<Value>& p, std::vector<Rat>* out) {
  std::vector<Rat> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) {
    Rat r;
    if (!value_as_rational(c, &r)) return false;
    coeffs.push_back(r);
  }
  if (out) *out = std::move(coeffs);
  return true;
}

}  // namespace

bool value_is_square(const Value& v) {
  const FieldPtr& f = v.field();
  switch (f->kind()) {
    case FieldDesc::Kind::Rationals:
      return rat_is_square(v.rat());
    case FieldDesc::Kind::Prime: {
      if (v.is_zero()) return true;
      std::uint64_t p = f->modulus();
      if (p == 2) return true;
      return pow_mod(v.residue(), (p - 1) / 2, p) == 1;
    }
    case FieldDesc::Kind::Extension: {
      if (v.is_zero()) return true;
      if (f->finite()) {
        if (f->characteristic() == 2) return true;
        return v.pow(static_cast<long long>((f->size() - 1) / 2)).is_one();
      }
      // Quadratic extension of the rationals: solve (alpha + beta*g)^2 = v.
      if (f->degree() != 2 || f->base()->kind() != FieldDesc::Kind::Rationals)
        throw UnsupportedError("squareness test unsupported over " + f->str());
      Rat B = f->minpoly()[1].rat(), C = f->minpoly()[0].rat();
      Rat pp = v.coords()[0].rat(), qq = v.coords()[1].rat();
      if (qq == 0 && rat_is_square(pp)) return true;
      // beta != 0: t = beta^2 satisfies (B^2-4C) t^2 + (2Bq-4p) t + q^2 = 0,
      // and both t and the implied alpha must be rational.
      Rat A2 = B * B - 4 * C;
      Rat lin = 2 * B * qq - 4 * pp;
      Rat disc = lin * lin - 4 * A2 * qq * qq;
      Rat sq;
      if (!rat_is_square(disc, &sq)) return false;
      for (int sign : {1, -1}) {
        Rat t = (-lin + sign * sq) / (2 * A2);
        Rat beta;
        if (t > 0 && rat_is_square(t, &beta) && beta != 0) {
          Rat alpha = (qq / beta + B * beta) / 2;
          if (alpha * alpha - C * t == pp) return true;
        }
      }
      return false;
    }
  }
  return false;
}

bool minpoly_irreducible(const std::vector<Value>& monic, const FieldPtr& base) {
  const int d = static_cast<int>(monic.size()) - 1;
  if (d < 1) throw std::invalid_argument("constant polynomial");
  if (d == 1) return true;
  switch (base->kind()) {
    case FieldDesc::Kind::Rationals: {
      std::vector<Rat> coeffs;
      coeffs.reserve(monic.size());
      for (const auto& c : monic) coeffs.push_back(c.rat());
      return rationals_irreducible(coeffs);
    }
    case FieldDesc::Kind::Prime:
      return finite_field_irreducible(monic, base);
    case FieldDesc::Kind::Extension: {
      if (base->finite()) return finite_field_irreducible(monic, base);
      if (d == 2) {
        Value B = monic[1], C = monic[0];
        Value disc = B * B - base->from_int(4) * C;
        return !value_is_square(disc);
      }
      std::vector<Rat> coeffs;
      if (d % 2 == 1 && poly_has_rational_coeffs(monic, &coeffs)) {
        if (!rationals_irreducible(coeffs)) return false;
        unsigned bd = base->absolute_degree();
        if (std::gcd(static_cast<unsigned>(d), bd) == 1) return true;
        throw UnsupportedError("irreducibility undecided over " + base->str());
      }
      throw UnsupportedError("irreducibility unsupported over " + base->str());
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace normforms::exactalg
