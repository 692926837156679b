#include "normforms/exactalg/upoly.hpp"

namespace normforms::exactalg::upoly {

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void normalize(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  normalize(r);
  return r;
}

Poly neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a[0].zero_like());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  normalize(r);
  return r;
}

Poly scale(const Poly& a, const Value& c) {
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  normalize(r);
  return r;
}

Value eval(const Poly& p, const Value& x) {
  Value acc = x.zero_like();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r;
  r.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * p[i].field()->from_int(static_cast<long long>(i)));
  normalize(r);
  return r;
}

Poly rem_monic(const Poly& a, const Poly& monic) {
  const std::size_t d = monic.size() - 1;
  Poly r = a;
  normalize(r);
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i].is_zero()) continue;
    Value c = r[i];
    r[i] = c.zero_like();
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] = r[i - d + j] - c * monic[j];
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
  Poly r = a, q;
  normalize(r);
  const int db = deg(b);
  Value lead_inv = b.back().inv();
  if (deg(r) >= db) q.assign(static_cast<std::size_t>(deg(r) - db) + 1, b.back().zero_like());
  while (deg(r) >= db) {
    Value c = r.back() * lead_inv;
    int shift = deg(r) - db;
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(shift + j)] = r[static_cast<std::size_t>(shift + j)] - c * b[static_cast<std::size_t>(j)];
    normalize(r);
  }
  normalize(q);
  return {q, r};
}

Poly gcd_monic(const Poly& a, const Poly& b, [[maybe_unused]] const FieldPtr& field) {
  Poly x = a, y = b;
  normalize(x);
  normalize(y);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  return scale(x, x.back().inv());
}

void xgcd(const Poly& a, const Poly& b, const FieldPtr& field, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  normalize(r0);
  normalize(r1);
  Poly s0 = {field->one()}, s1 = {};
  Poly t0 = {}, t1 = {field->one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& monic, const FieldPtr& field) {
  Poly acc = {field->one()};
  Poly b = rem_monic(base, monic);
  while (exp) {
    if (exp & 1) acc = rem_monic(mul(acc, b), monic);
    b = rem_monic(mul(b, b), monic);
    exp >>= 1;
  }
  return acc;
}

Value resultant(const Poly& a, const Poly& b, const FieldPtr& field) {
  // Res(a, b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r)
  // with r = a mod b; the recursion bottoms out at constants.
  Poly x = a, y = b;
  normalize(x);
  normalize(y);
  if (x.empty() || y.empty()) return field->zero();
  Value acc = field->one();
  bool negate = false;
  while (deg(y) > 0) {
    Poly r = divmod(x, y).second;
    if (r.empty()) return field->zero();
    int dx = deg(x), dy = deg(y), dr = deg(r);
    if ((dx % 2) && (dy % 2)) negate = !negate;
    acc = acc * y.back().pow(dx - dr);
    x = std::move(y);
    y = std::move(r);
  }
  acc = acc * y[0].pow(deg(x));
  return negate ? -acc : acc;
}

}  // namespace normforms::exactalg::upoly
