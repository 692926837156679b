// Coefficient fields and their elements.
//
// A FieldDesc describes one of: the rationals, a prime field Z/p, or a simple
// extension base[x]/(m) with m monic and irreducible over its base (checked on
// construction). Values are immutable and carry a pointer to their field, so
// arithmetic can dispatch on the field kind and reject mixed operands.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "normforms/error.hpp"
#include "normforms/exactalg/numeric.hpp"

namespace normforms::exactalg {

class FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

class Value {
 public:
  // Default-constructs the rational zero, so containers of Value behave.
  Value();

  static Value make_rational(Rat r);
  static Value make_residue(std::uint64_t r, FieldPtr f);
  // Coordinates in the power basis 1, g, ..., g^{d-1}; short vectors are
  // zero-padded.
  static Value make_extension(std::vector<Value> coords, FieldPtr f);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  Value zero_like() const;
  Value one_like() const;

  const Rat& rat() const;
  std::uint64_t residue() const;
  const std::vector<Value>& coords() const;

  Value operator-() const;
  Value inv() const;
  Value pow(long long e) const;

  std::string str() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  FieldPtr field_;
  std::variant<Rat, std::uint64_t, std::vector<Value>> v_;
};

class FieldDesc : public std::enable_shared_from_this<FieldDesc> {
 public:
  enum class Kind { Rationals, Prime, Extension };

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  static FieldPtr extension(const FieldPtr& base, std::vector<Value> monic_minpoly,
                            std::string generator);
  // Skips the irreducibility decision procedure; for internal call sites
  // where irreducibility follows from an already-verified degree argument.
  static FieldPtr extension_trusted(const FieldPtr& base, std::vector<Value> monic_minpoly,
                                    std::string generator);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const;
  const FieldPtr& base() const;
  const std::vector<Value>& minpoly() const;
  const std::string& generator() const;

  // Extension degree over the immediate base; 1 for the rationals and prime
  // fields.
  unsigned degree() const;
  unsigned absolute_degree() const;
  std::uint64_t characteristic() const;
  bool finite() const;
  std::uint64_t size() const;

  bool same(const FieldDesc& other) const;
  std::string str() const;

  Value zero() const;
  Value one() const;
  Value from_rat(const Rat& r) const;
  Value from_int(long long n) const;
  // Lifts an element of the immediate base into this extension.
  Value embed(const Value& base_elem) const;
  // Projection of an extension element with zero higher coordinates.
  Value project(const Value& elem) const;

  // Deterministic enumeration of finite fields.
  Value element_at(std::uint64_t rank) const;
  std::uint64_t rank_of(const Value& v) const;

 private:
  FieldDesc() = default;
  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
  FieldPtr base_;
  std::vector<Value> minpoly_;
  std::string generator_;
};

void check_same_field(const Value& a, const Value& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

// True iff the monic polynomial (dense, ascending coefficients over `base`)
// is irreducible over `base`. Supported: degree <= 5 over the rationals, any
// degree over finite fields, degree 2 over a quadratic extension of the
// rationals, and odd degree with rational coefficients over extensions of the
// rationals of coprime absolute degree. Throws UnsupportedError otherwise.
bool minpoly_irreducible(const std::vector<Value>& monic, const FieldPtr& base);

// Exact squareness test in the supported fields (rationals, finite fields,
// quadratic extensions of the rationals).
bool value_is_square(const Value& v);

}  // namespace normforms::exactalg
