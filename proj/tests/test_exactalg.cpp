#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normforms/exactalg/field.hpp"
#include "normforms/exactalg/identity.hpp"
#include "normforms/exactalg/matrix.hpp"
#include "normforms/exactalg/quotient.hpp"
#include "normforms/exactalg/sparsepoly.hpp"
#include "normforms/exactalg/upoly.hpp"

#include "test_helpers.hpp"

using namespace normforms;
using namespace normforms::exactalg;

namespace {

SparsePoly companion_det_by_cofactor_oracle() {
  // Independent 3x3 cofactor expansion of the companion matrix of x^3 - 2,
  // written out by hand: det [[0,0,2],[1,0,0],[0,1,0]].
  Rat det = Rat(0) * (Rat(0) * Rat(0) - Rat(0) * Rat(1)) - Rat(0) * (Rat(1) * Rat(0) - Rat(0) * Rat(0)) +
            Rat(2) * (Rat(1) * Rat(1) - Rat(0) * Rat(0));
  return SparsePoly::constant(Value::make_rational(det));
}

}  // namespace

TEST_CASE("natural variable order") {
  CHECK(natural_less("u2", "u10"));
  CHECK(natural_less("u1", "u2"));
  CHECK(!natural_less("v1", "u2"));
  CHECK(!natural_less("x", "x"));
}

TEST_CASE("rational helpers") {
  CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
  CHECK(rat_to_string(rat_from_string("-8/2")) == "-4");
  CHECK(rat_is_square(Rat(49) / Rat(9)));
  CHECK(!rat_is_square(Rat(2)));
  Rat root;
  CHECK(rat_is_square(Rat(225), &root));
  CHECK(root == 15);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
}

TEST_CASE("prime fields") {
  auto f7 = FieldDesc::prime(7);
  CHECK_THROWS_AS(FieldDesc::prime(6), std::invalid_argument);
  Value a = Value::make_residue(3, f7), b = Value::make_residue(5, f7);
  CHECK((a * b).residue() == 1);
  CHECK((a + b).residue() == 1);
  CHECK(a.inv().residue() == 5);
  CHECK(f7->from_rat(Rat(1) / Rat(2)).residue() == 4);
  CHECK(is_prime_u64(kMersenne61));
}

TEST_CASE("simple extension arithmetic in Q[x]/(x^3-2)") {
  auto q = FieldDesc::rationals();
  std::vector<Value> minpoly = {Value::make_rational(Rat(-2)), Value::make_rational(Rat(0)),
                                Value::make_rational(Rat(0)), Value::make_rational(Rat(1))};
  auto e = FieldDesc::extension(q, minpoly, "a");
  Value alpha = Value::make_extension({q->zero(), q->one()}, e);

  // defining relation: a * a^2 = 2
  CHECK(alpha * alpha * alpha == e->from_int(2));

  // (1+a)*(1-a+a^2) = 1 + a^3 = 3
  Value one_plus = e->one() + alpha;
  Value other = Value::make_extension({q->one(), q->from_int(-1), q->one()}, e);
  CHECK(one_plus * other == e->from_int(3));

  // x * x^{-1} = 1 for random nonzero x
  std::mt19937_64 gen(7);
  for (int i = 0; i < 25; ++i) {
    Value x = nftest::random_value(gen, e);
    if (x.is_zero()) continue;
    CHECK(x * x.inv() == e->one());
  }
  CHECK_THROWS_AS(e->zero().inv(), DivisionByZeroError);
}

TEST_CASE("irreducibility over the rationals") {
  auto q = FieldDesc::rationals();
  auto poly = [&](std::vector<long long> cs) {
    std::vector<Value> p;
    for (auto c : cs) p.push_back(q->from_int(c));
    return p;
  };
  CHECK(minpoly_irreducible(poly({-2, 0, 0, 1}), q));    // x^3-2
  CHECK(minpoly_irreducible(poly({-1, -1, 0, 1}), q));   // x^3-x-1
  CHECK(minpoly_irreducible(poly({1, 0, 1}), q));        // x^2+1
  CHECK(minpoly_irreducible(poly({1, 1, 1}), q));        // x^2+x+1
  CHECK(minpoly_irreducible(poly({-2, 0, 0, 0, 0, 1}), q));  // x^5-2
  CHECK(!minpoly_irreducible(poly({-1, 0, 1}), q));      // (x-1)(x+1)
  CHECK(!minpoly_irreducible(poly({1, 2, 3, 2, 1}), q)); // (x^2+x+1)^2
  CHECK(!minpoly_irreducible(poly({4, 0, 0, 0, 1}), q)); // x^4+4 = (x^2-2x+2)(x^2+2x+2)
  CHECK(minpoly_irreducible(poly({1, 0, -10, 0, 1}), q));  // minimal polynomial of sqrt2+sqrt3
  // (x^2+x+1)(x^3-2): quadratic-times-cubic split without rational roots
  CHECK(!minpoly_irreducible(poly({-2, -2, -2, 1, 1, 1}), q));
}

TEST_CASE("irreducibility over prime fields") {
  auto f2 = FieldDesc::prime(2);
  auto f7 = FieldDesc::prime(7);
  auto poly = [](const FieldPtr& f, std::vector<long long> cs) {
    std::vector<Value> p;
    for (auto c : cs) p.push_back(f->from_int(c));
    return p;
  };
  CHECK(minpoly_irreducible(poly(f2, {1, 1, 1}), f2));        // x^2+x+1
  CHECK(!minpoly_irreducible(poly(f2, {1, 0, 1}), f2));       // x^2+1 = (x+1)^2
  CHECK(minpoly_irreducible(poly(f7, {1, 0, 1}), f7));        // squares mod 7 are {1,2,4}
  CHECK(!minpoly_irreducible(poly(f7, {3, 0, 1}), f7));       // x^2+3 = (x-2)(x+2) mod 7
  CHECK(minpoly_irreducible(poly(f7, {-2, 0, 0, 1}), f7));    // cubes mod 7 are {0,1,6}
  CHECK(!minpoly_irreducible(poly(f7, {-6, 0, 0, 1}), f7));   // 3^3 = 6 mod 7
}

TEST_CASE("nested extension Q(sqrt2, sqrt3)") {
  auto q = FieldDesc::rationals();
  auto q2 = FieldDesc::extension(q, {q->from_int(-2), q->zero(), q->one()}, "r2");
  auto q23 = FieldDesc::extension(q2, {q2->from_int(-3), q2->zero(), q2->one()}, "r3");
  CHECK(q23->absolute_degree() == 4);
  Value r2 = q23->embed(Value::make_extension({q->zero(), q->one()}, q2));
  Value r3 = Value::make_extension({q2->zero(), q2->one()}, q23);
  CHECK(r2 * r2 == q23->from_int(2));
  CHECK(r3 * r3 == q23->from_int(3));
  Value prod = r2 * r3;
  CHECK(prod * prod == q23->from_int(6));
  // x^2-2 must be rejected over Q(sqrt2)
  CHECK(!minpoly_irreducible({q2->from_int(-2), q2->zero(), q2->one()}, q2));
  // and x^2-3 over Q(sqrt2) is fine (tested by construction above)
}

TEST_CASE("finite field enumeration and squares") {
  auto f5 = FieldDesc::prime(5);
  auto f25 = FieldDesc::extension(f5, {f5->from_int(2), f5->zero(), f5->one()}, "t");  // x^2+2
  CHECK(f25->size() == 25);
  for (std::uint64_t r = 0; r < 25; ++r) CHECK(f25->rank_of(f25->element_at(r)) == r);
  // squares in F25: exactly (25-1)/2 + 1 elements
  int count = 0;
  for (std::uint64_t r = 0; r < 25; ++r)
    if (value_is_square(f25->element_at(r))) ++count;
  CHECK(count == 13);
}

TEST_CASE("squares in quadratic extensions of Q") {
  auto q = FieldDesc::rationals();
  auto q2 = FieldDesc::extension(q, {q->from_int(-2), q->zero(), q->one()}, "r2");
  Value r2 = Value::make_extension({q->zero(), q->one()}, q2);
  // (1 + r2)^2 = 3 + 2 r2
  CHECK(value_is_square(q2->from_int(3) + q2->from_int(2) * r2));
  CHECK(value_is_square(q2->from_int(2)));   // 2 = (r2)^2
  CHECK(!value_is_square(q2->from_int(3)));
  CHECK(!value_is_square(r2));               // sqrt(sqrt(2)) not in the field
}

TEST_CASE("poly arithmetic examples") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"x", "y", "z"});
  auto x = R.var("x"), y = R.var("y"), z = R.var("z");

  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * R.zero()).is_zero());

  auto p1 = x.pow(3) + Rat(2) * y.pow(3);
  auto p2 = Rat(4) * z.pow(3) - Rat(6) * x * y * z;
  auto sum = p1 + p2;
  CHECK(sum.term_count() == 4);
  CHECK(sum.str() == "x^3 - 6*x*y*z + 2*y^3 + 4*z^3");  // grlex order

  // evaluation: direct arithmetic 1 + 2 + 4 - 6 = 1
  std::map<std::string, Value> pt = {{"x", q->one()}, {"y", q->one()}, {"z", q->one()}};
  CHECK(sum.eval(pt) == q->one());

  // all-zero point gives the constant term
  auto with_const = sum + R.c(Rat(11));
  std::map<std::string, Value> zero_pt = {{"x", q->zero()}, {"y", q->zero()}, {"z", q->zero()}};
  CHECK(with_const.eval(zero_pt) == q->from_int(11));

  // x^2 + y^2 at (1,1) = 2
  CHECK((x * x + y * y).eval(pt) == q->from_int(2));

  // arity mismatch
  std::map<std::string, Value> bad = {{"x", q->one()}};
  CHECK_THROWS_AS((x + y).eval(bad), std::invalid_argument);

  // coefficient-field mismatch
  auto f7 = FieldDesc::prime(7);
  PolyRing R7(f7, {"x"});
  CHECK_THROWS_AS(x + R7.var("x"), FieldMismatchError);
}

TEST_CASE("poly ring axioms on random triples") {
  std::mt19937_64 gen(2024);
  std::vector<FieldPtr> fields = {FieldDesc::rationals(), FieldDesc::prime(13)};
  auto q = FieldDesc::rationals();
  fields.push_back(FieldDesc::extension(q, {q->from_int(-2), q->zero(), q->one()}, "r2"));
  for (const auto& f : fields) {
    for (int i = 0; i < 70; ++i) {
      auto a = nftest::random_poly(gen, f, {"x", "y"});
      auto b = nftest::random_poly(gen, f, {"y", "z"});
      auto c = nftest::random_poly(gen, f, {"x", "z"});
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("substitute, derivative, homogeneity") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"x", "y"});
  auto x = R.var("x"), y = R.var("y");
  auto p = x.pow(2) * y + Rat(3) * y.pow(3);
  auto sub = p.substitute({{"x", y + R.c(1)}});
  PolyRing R2(q, {"y"});
  auto yy = R2.var("y");
  CHECK(sub == (yy + R2.c(1)).pow(2) * yy + Rat(3) * yy.pow(3));
  CHECK(p.derivative("x") == Rat(2) * x * y);
  CHECK(p.is_homogeneous(3, {"x", "y"}));
  CHECK(!(p + x).is_homogeneous(3, {"x", "y"}));
}

TEST_CASE("determinants: identity, companion, block") {
  auto q = FieldDesc::rationals();
  SparsePoly zero = SparsePoly::zero(q), one = SparsePoly::constant(q->one());

  Matrix<SparsePoly> id5 = Matrix<SparsePoly>::identity(5, one, zero);
  CHECK(det_cofactor(id5) == one);
  CHECK(det_bareiss(id5) == one);

  // companion matrix of x^3 - 2
  Matrix<SparsePoly> comp(3, 3, zero);
  comp.at(0, 2) = SparsePoly::constant(q->from_int(2));
  comp.at(1, 0) = one;
  comp.at(2, 1) = one;
  SparsePoly expected = companion_det_by_cofactor_oracle();
  CHECK(det_cofactor(comp) == expected);
  CHECK(det_bareiss(comp) == expected);
  CHECK(expected.constant_value() == q->from_int(2));

  // diag(f, g) -> f*g
  PolyRing R(q, {"u", "v"});
  auto f = R.var("u").pow(2) + R.c(1), g = R.var("v") - R.c(3);
  Matrix<SparsePoly> diag(2, 2, zero);
  diag.at(0, 0) = f;
  diag.at(1, 1) = g;
  CHECK(det_cofactor(diag) == f * g);
  CHECK(det_bareiss(diag) == f * g);

  Matrix<SparsePoly> rect(2, 3, zero);
  CHECK_THROWS_AS(det_cofactor(rect), std::invalid_argument);
  CHECK_THROWS_AS(det_bareiss(rect), std::invalid_argument);
}

TEST_CASE("determinant multiplicativity and algorithm agreement over Q[u,v]") {
  std::mt19937_64 gen(99);
  auto q = FieldDesc::rationals();
  SparsePoly zero = SparsePoly::zero(q);
  for (int c = 0; c < 50; ++c) {
    Matrix<SparsePoly> m(3, 3, zero), n(3, 3, zero);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m.at(i, j) = nftest::random_poly(gen, q, {"u", "v"}, 2, 1);
        n.at(i, j) = nftest::random_poly(gen, q, {"u", "v"}, 2, 1);
      }
    auto dm = det_bareiss(m), dn = det_bareiss(n);
    CHECK(det_bareiss(m * n) == dm * dn);
    CHECK(det_cofactor(m) == dm);
    CHECK(det_cofactor(n) == dn);
  }
}

TEST_CASE("identity_test exact") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"x", "y"});
  auto x = R.var("x"), y = R.var("y");
  auto r1 = identity_test_exact((x + y).pow(2), x * x + Rat(2) * x * y + y * y);
  CHECK(r1.pass);
  auto r2 = identity_test_exact(x, y);
  CHECK(!r2.pass);
  CHECK(r2.witness.contains("difference_leading_term"));
  CHECK(r2.witness["difference_leading_term"].get<std::string>() == "x");
}

TEST_CASE("identity_test probabilistic bound and agreement with exact") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"x", "y"});
  auto x = R.var("x"), y = R.var("y");

  // degree-10 difference with the default prime: bound (10/(2^61-1))^3
  auto p10 = x.pow(10) + y;
  auto q10 = y + R.c(1);
  ProbabilisticConfig cfg{kMersenne61, 3, 42};
  auto rep = identity_test_probabilistic(p10, q10, cfg);
  Rat expected_bound = rat_pow(Rat(10) / Rat(BigInt(kMersenne61)), 3);
  CHECK(rep.failure_bound == rat_to_string(expected_bound));
  CHECK(expected_bound < rat_pow(Rat(1) / Rat(2), 160));
  CHECK(!rep.pass);

  CHECK_THROWS_AS(identity_test_probabilistic(p10, q10, ProbabilisticConfig{7, 3, 1}),
                  std::invalid_argument);

  // exact and probabilistic agree on a corpus of equal/unequal pairs
  std::mt19937_64 gen(31337);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = nftest::random_poly(gen, q, {"x", "y", "z"}, 4, 3);
    auto b = nftest::random_poly(gen, q, {"x", "y", "z"}, 4, 3);
    SparsePoly lhs = (i % 2 == 0) ? a * b : a * b + b;  // equal vs perturbed
    SparsePoly rhs = b * a;
    bool exact = identity_test_exact(lhs, rhs).pass;
    bool prob = identity_test_probabilistic(lhs, rhs, ProbabilisticConfig{kMersenne61, 3, static_cast<std::uint64_t>(1000 + i)}).pass;
    CHECK(exact == prob);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("exact division") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"x", "y"});
  auto x = R.var("x"), y = R.var("y");
  auto a = (x + y).pow(3) * (x - Rat(2) * y);
  CHECK(a.exact_divide((x + y).pow(3)) == x - Rat(2) * y);
  CHECK_THROWS_AS((x * x + y).exact_divide(x + y), std::invalid_argument);
}

TEST_CASE("quotient ring over SparsePoly matches extension-field norm") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"z1", "z2", "z3"});
  // Q[z][x]/(x^3 - 2): norm of z1 + z2 x + z3 x^2
  std::vector<SparsePoly> mp = {R.c(-2), R.zero(), R.zero(), R.one()};
  QuotientExt<SparsePoly> ext(mp);
  auto el = ext.element({R.var("z1"), R.var("z2"), R.var("z3")});
  SparsePoly nf = ext.norm(el);
  auto z1 = R.var("z1"), z2 = R.var("z2"), z3 = R.var("z3");
  CHECK(nf == z1.pow(3) + Rat(2) * z2.pow(3) + Rat(4) * z3.pow(3) - Rat(6) * z1 * z2 * z3);
}

TEST_CASE("quadratic pair ring") {
  auto q = FieldDesc::rationals();
  PolyRing R(q, {"e", "u", "v"});
  auto e = R.var("e"), u = R.var("u"), v = R.var("v");
  QuadExt<SparsePoly> z(u, v, e);
  CHECK(z.norm() == u * u - e * v * v);
  CHECK((z * z.conj()).is_scalar());
  CHECK((z * z.conj()).a == z.norm());
  QuadExt<SparsePoly> w = z * z;
  CHECK(w.a == u * u + e * v * v);
  CHECK(w.b == Rat(2) * u * v);
}

TEST_CASE("resultant cross-check for norms") {
  // Res(x^3 - 2, x + 1) = product of (root + 1) ... equals -m(-1) for monic cubic
  auto q = FieldDesc::rationals();
  upoly::Poly m = {q->from_int(-2), q->zero(), q->zero(), q->one()};
  upoly::Poly f = {q->one(), q->one()};
  Value r = upoly::resultant(m, f, q);
  CHECK(r == q->from_int(3));  // N(1 + cbrt2) = 3
}
