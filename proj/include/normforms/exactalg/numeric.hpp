// Scalar helpers shared across the library: exact rationals, 64-bit modular
// arithmetic, primality, and the natural ordering used for variable names.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace normforms::exactalg {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);
Rat rat_pow(const Rat& base, long exp);

// True iff r is the square of a rational; writes the nonnegative root if asked.
bool rat_is_square(const Rat& r, Rat* root = nullptr);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Strict weak order on identifiers that compares embedded digit runs by
// value, so "u2" < "u10".
bool natural_less(const std::string& a, const std::string& b);

}  // namespace normforms::exactalg
