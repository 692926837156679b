#include "normforms/exactalg/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace normforms::exactalg {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    // Parse numerator and denominator separately; dividing canonicalizes,
    // which mpq_set_str does not.
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("zero to a negative power");
    return rat_pow(Rat(1) / base, -exp);
  }
  Rat acc(1), b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

bool rat_is_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  BigInt n = numerator(r), d = denominator(r);
  BigInt sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rat(sn) / Rat(sd);
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero residue");
  // p is prime everywhere this is called.
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    char ca = a[i], cb = b[j];
    if (std::isdigit(static_cast<unsigned char>(ca)) && std::isdigit(static_cast<unsigned char>(cb))) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      std::string da = a.substr(i, ia - i), db = b.substr(j, jb - j);
      // Strip leading zeros for the numeric comparison, keep them for ties.
      std::string ta = da.substr(da.find_first_not_of('0') == std::string::npos ? da.size() - 1 : da.find_first_not_of('0'));
      std::string tb = db.substr(db.find_first_not_of('0') == std::string::npos ? db.size() - 1 : db.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      if (da != db) return da < db;
      i = ia;
      j = jb;
    } else {
      if (ca != cb) return ca < cb;
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace normforms::exactalg
