#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normforms/csa/quaternion.hpp"

#include "test_helpers.hpp"

using namespace normforms;
using namespace normforms::exactalg;
using namespace normforms::csa;

namespace {

FieldPtr Q() { return FieldDesc::rationals(); }

QuatQ hamilton(long t, long x, long y, long z) {
  auto q = Q();
  return QuatQ(q->from_int(t), q->from_int(x), q->from_int(y), q->from_int(z), q->from_int(-1),
               q->from_int(-1));
}

QuatQ random_hamilton(std::mt19937_64& gen, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  return hamilton(d(gen), d(gen), d(gen), d(gen));
}

DivisionCert hamilton_cert() { return certify_division(Rat(-1), Rat(-1)); }

}  // namespace

TEST_CASE("quaternion defining relations in (-1,-1)") {
  QuatQ i = hamilton(0, 1, 0, 0), j = hamilton(0, 0, 1, 0), k = hamilton(0, 0, 0, 1);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == hamilton(-1, 0, 0, 0));
  CHECK(j * j == hamilton(-1, 0, 0, 0));
  CHECK(k * k == hamilton(-1, 0, 0, 0));
  CHECK((hamilton(1, 1, 0, 0) * hamilton(1, -1, 0, 0)) == hamilton(2, 0, 0, 0));
}

TEST_CASE("reduced norm basics") {
  auto q = Q();
  CHECK(hamilton(1, 1, 1, 1).nrd() == q->from_int(4));
  CHECK(hamilton(7, 0, 0, 0).nrd() == q->from_int(49));
  // q qbar = Nrd(q) * 1 and q * inv(q) = 1 on random elements
  std::mt19937_64 gen(3);
  for (int t = 0; t < 40; ++t) {
    QuatQ p = random_hamilton(gen);
    CHECK(p * p.conj() == QuatQ::scalar(p.nrd(), p.pa, p.pb));
    if (!p.nrd().is_zero()) CHECK(p * quat_inv(p) == p.one_like());
  }
  CHECK_THROWS_AS(quat_inv(hamilton(0, 0, 0, 0)), DivisionByZeroError);
}

TEST_CASE("reduced norm multiplicativity as an 8-variable identity") {
  auto q = Q();
  PolyRing R(q, {"t1", "x1", "y1", "z1", "t2", "x2", "y2", "z2", "pa", "pb"});
  Quat<SparsePoly> p(R.var("t1"), R.var("x1"), R.var("y1"), R.var("z1"), R.var("pa"), R.var("pb"));
  Quat<SparsePoly> r(R.var("t2"), R.var("x2"), R.var("y2"), R.var("z2"), R.var("pa"), R.var("pb"));
  CHECK((p * r).nrd() == p.nrd() * r.nrd());
}

TEST_CASE("division certificates") {
  auto definite = certify_division(Rat(-1), Rat(-1));
  CHECK(definite.certified);
  CHECK(definite.method == "definite");

  // (1, b) is split: zero found immediately
  auto split = certify_division(Rat(1), Rat(-1), 10);
  CHECK(!split.certified);
  CHECK(split.method == "zero-found");

  // (2, 3): <1,-2,-3,6>; small search finds the zero (1,...)? t^2 = 2x^2+3y^2-6z^2
  // has the solution (t,x,y,z) = (1,1,1,1)? 1 != 2+3-6 = -1; search decides.
  auto c23 = certify_division(Rat(2), Rat(3), 4, 2000000);
  // whatever the outcome, the method must be one of the documented ones
  CHECK((c23.method == "zero-found" || c23.method == "bounded-search" || c23.method == "budget-exhausted"));

  CHECK_THROWS_AS(certify_division(Rat(0), Rat(1)), std::invalid_argument);
}

TEST_CASE("ndet: identity, diagonal, zero row") {
  auto q = Q();
  auto cert = hamilton_cert();
  QuatQ zero = hamilton(0, 0, 0, 0), one = hamilton(1, 0, 0, 0);
  QuatMatrix id(3, 3, zero);
  for (int i = 0; i < 3; ++i) id.at(i, i) = one;
  CHECK(ndet(id, cert) == q->one());

  // diag(1+i, j) -> Nrd(1+i) * Nrd(j) = 2 * 1 = 2
  QuatMatrix diag(2, 2, zero);
  diag.at(0, 0) = hamilton(1, 1, 0, 0);
  diag.at(1, 1) = hamilton(0, 0, 1, 0);
  CHECK(ndet(diag, cert) == q->from_int(2));

  // random diagonal: product of the reduced norms
  std::mt19937_64 gen(8);
  for (int t = 0; t < 10; ++t) {
    QuatMatrix d3(3, 3, zero);
    Value expect = q->one();
    for (int i = 0; i < 3; ++i) {
      QuatQ e = random_hamilton(gen);
      d3.at(i, i) = e;
      expect = expect * e.nrd();
    }
    CHECK(ndet(d3, cert) == expect);
  }

  QuatMatrix sing(2, 2, zero);
  sing.at(0, 0) = one;
  CHECK(ndet(sing, cert) == q->zero());

  DivisionCert bad;
  bad.certified = false;
  bad.method = "zero-found";
  CHECK_THROWS_AS(ndet(id, bad), std::invalid_argument);
}

TEST_CASE("ndet multiplicativity on random 2x2 and 3x3 matrices") {
  auto cert = hamilton_cert();
  std::mt19937_64 gen(12);
  QuatQ zero = hamilton(0, 0, 0, 0);
  int cases = 0;
  for (int t = 0; t < 55; ++t) {
    for (std::size_t n : {2u, 3u}) {
      QuatMatrix m(n, n, zero), w(n, n, zero);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          m.at(i, j) = random_hamilton(gen, 3);
          w.at(i, j) = random_hamilton(gen, 3);
        }
      CHECK(ndet(m * w, cert) == ndet(m, cert) * ndet(w, cert));
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("ndet conjugation invariance") {
  auto cert = hamilton_cert();
  std::mt19937_64 gen(13);
  QuatQ zero = hamilton(0, 0, 0, 0);
  int cases = 0;
  while (cases < 50) {
    QuatMatrix m(2, 2, zero), p(2, 2, zero);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        m.at(i, j) = random_hamilton(gen, 3);
        p.at(i, j) = random_hamilton(gen, 3);
      }
    Value dp = ndet(p, cert);
    if (dp.is_zero()) continue;
    // P^{-1} M P: invert P by 2x2 division-ring elimination is what ndet
    // does internally; here conjugate via the adjugate-style formula for 2x2
    // over a division ring is fiddly, so check the product form instead:
    // ndet(P M) = ndet(M P) (= ndet(P) ndet(M)).
    CHECK(ndet(p * m, cert) == ndet(m * p, cert));
    CHECK(ndet(p * m, cert) == dp * ndet(m, cert));
    ++cases;
  }
}

TEST_CASE("ndet pivot-order independence") {
  auto cert = hamilton_cert();
  std::mt19937_64 gen(14);
  QuatQ zero = hamilton(0, 0, 0, 0);
  int cases = 0;
  while (cases < 25) {
    std::size_t n = 2 + (gen() % 2);
    QuatMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_hamilton(gen, 4);
    CHECK(ndet(m, cert, PivotOrder::FirstNonzero) == ndet(m, cert, PivotOrder::LastNonzero));
    ++cases;
  }
}

TEST_CASE("split case: ndet agrees with the commutative determinant of the embedding") {
  auto q = Q();
  std::mt19937_64 gen(15);
  std::uniform_int_distribution<int> d(-4, 4);
  Value pa = q->from_int(1), pb = q->from_int(-1);
  int cases = 0;
  while (cases < 25) {
    std::size_t n = 2;
    QuatMatrix m(n, n, QuatQ::scalar(q->zero(), pa, pb));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = QuatQ(q->from_int(d(gen)), q->from_int(d(gen)), q->from_int(d(gen)),
                           q->from_int(d(gen)), pa, pb);
    Matrix<Value> big = split_embedding(m, q->one());
    Value oracle = det_gauss(big);
    try {
      Value nd = ndet_unchecked(m);
      CHECK(nd == oracle);
      ++cases;
    } catch (const PivotError&) {
      // genuinely possible in a split algebra; resample
    }
  }
}

TEST_CASE("rho_of_delta structure") {
  auto q = Q();
  extfields::SimpleExt k(q, {q->from_int(-2), q->zero(), q->one()}, "r");  // Q(sqrt2)
  QuatQ i = hamilton(0, 1, 0, 0), j = hamilton(0, 0, 1, 0);

  // Delta = alpha_1 * 1: block scalar
  QuatQ a1 = hamilton(2, 1, 0, 3);
  auto m1 = rho_of_delta(k, {a1, a1.zero_like()});
  CHECK(m1.at(0, 0) == a1);
  CHECK(m1.at(1, 1) == a1);
  CHECK(m1.at(0, 1).is_zero());

  // Delta = i + j sqrt2 -> [[i, 2j], [j, i]]
  auto m2 = rho_of_delta(k, {i, j});
  CHECK(m2.at(0, 0) == i);
  CHECK(m2.at(1, 1) == i);
  CHECK(m2.at(0, 1) == j.scaled(q->from_int(2)));
  CHECK(m2.at(1, 0) == j);

  // additivity in Delta
  std::mt19937_64 gen(16);
  for (int t = 0; t < 20; ++t) {
    std::vector<QuatQ> x = {random_hamilton(gen), random_hamilton(gen)};
    std::vector<QuatQ> y = {random_hamilton(gen), random_hamilton(gen)};
    std::vector<QuatQ> sum = {x[0] + y[0], x[1] + y[1]};
    CHECK(rho_of_delta(k, sum) == rho_of_delta(k, x) + rho_of_delta(k, y));
  }

  // rho is a ring homomorphism: rho(Delta1 Delta2) = rho(Delta1) rho(Delta2).
  // Multiply in A tensor K via coordinates over K = F(sqrt2):
  // (a0 + a1 w)(b0 + b1 w) = (a0b0 + 2 a1b1) + (a0b1 + a1b0) w.
  for (int t = 0; t < 20; ++t) {
    std::vector<QuatQ> x = {random_hamilton(gen, 3), random_hamilton(gen, 3)};
    std::vector<QuatQ> y = {random_hamilton(gen, 3), random_hamilton(gen, 3)};
    std::vector<QuatQ> prod = {x[0] * y[0] + (x[1] * y[1]).scaled(q->from_int(2)),
                               x[0] * y[1] + x[1] * y[0]};
    CHECK(rho_of_delta(k, prod) == rho_of_delta(k, x) * rho_of_delta(k, y));
  }
}

TEST_CASE("norm-determinant identity over quadratic and cubic extensions") {
  auto q = Q();
  auto cert = hamilton_cert();
  extfields::SimpleExt k2(q, {q->from_int(-2), q->zero(), q->one()}, "r");
  extfields::SimpleExt k3(q, {q->from_int(-2), q->zero(), q->zero(), q->one()}, "a");

  // commutative specialization: all coordinates scalar
  std::vector<QuatQ> scalars = {hamilton(3, 0, 0, 0), hamilton(2, 0, 0, 0)};
  CHECK(verify_quat_norm_det(k2, scalars, cert).pass);

  // the worked example Delta = i + j sqrt2
  std::vector<QuatQ> ij = {hamilton(0, 1, 0, 0), hamilton(0, 0, 1, 0)};
  auto rep = verify_quat_norm_det(k2, ij, cert);
  CHECK(rep.pass);

  // random batches over both extensions
  std::mt19937_64 gen(19);
  for (int t = 0; t < 60; ++t) {
    std::vector<QuatQ> d2 = {random_hamilton(gen, 4), random_hamilton(gen, 4)};
    CHECK(verify_quat_norm_det(k2, d2, cert).pass);
    std::vector<QuatQ> d3 = {random_hamilton(gen, 3), random_hamilton(gen, 3), random_hamilton(gen, 3)};
    CHECK(verify_quat_norm_det(k3, d3, cert).pass);
  }
}

TEST_CASE("quadratic-scalar probe resolves the extension parameter") {
  // scalar case: x = u, y = 1: both sides closed-form; gamma = c is consistent
  QuatQ x = hamilton(3, 0, 0, 0), y = hamilton(1, 0, 0, 0);
  auto rep = quad_scalar_norm_probe(x, y, Rat(2));
  CHECK(rep.pass);
  auto matched = rep.witness["matched"].get<std::vector<std::string>>();
  CHECK(std::find(matched.begin(), matched.end(), "c") != matched.end());

  // falsification semantics: a constant passing one instance fails another
  auto r1 = quad_scalar_norm_probe(hamilton(1, 0, 0, 0), hamilton(1, 0, 0, 0), Rat(2));
  auto m1 = r1.witness["matched"].get<std::vector<std::string>>();
  // gamma = 2 coincides with gamma = c here (c = 2)...
  CHECK(std::find(m1.begin(), m1.end(), "2") != m1.end());
  auto r2 = quad_scalar_norm_probe(hamilton(1, 1, 2, 0), hamilton(0, 1, 1, 1), Rat(3));
  auto m2 = r2.witness["matched"].get<std::vector<std::string>>();
  // ...but fails once c = 3
  CHECK(std::find(m2.begin(), m2.end(), "2") == m2.end());
  CHECK(std::find(m2.begin(), m2.end(), "c") != m2.end());

  CHECK_THROWS_AS(quad_scalar_norm_probe(x, hamilton(0, 0, 0, 0), Rat(2)), std::invalid_argument);

  // sweep: the resolved constant is the extension parameter
  auto sweep = quad_scalar_norm_sweep(Rat(-1), Rat(-1), 60, 2027);
  CHECK(sweep.pass);
  auto consistent = sweep.witness["consistent"].get<std::vector<std::string>>();
  REQUIRE(consistent.size() == 1);
  CHECK(consistent[0] == "c");
}

TEST_CASE("sharp of 3x3 matrices is the adjugate") {
  auto q = Q();
  Matrix<Value> id = Matrix<Value>::identity(3, q->one(), q->zero());
  CHECK(sharp3(id) == id);

  std::mt19937_64 gen(21);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 40; ++t) {
    Matrix<Value> x(3, 3, q->zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x.at(i, j) = q->from_int(d(gen));
    Matrix<Value> prod = x * sharp3(x);
    Value det = det_gauss(x);
    CHECK(prod == id.scaled(det));
  }
}

TEST_CASE("split degree-3 probe: diagonal specialization and sweep diagnostics") {
  auto q = Q();
  // diagonal unimodular case: det(y) = 1 makes the displayed formula exact at gamma = c
  Matrix<Value> x(3, 3, q->zero()), y(3, 3, q->zero());
  x.at(0, 0) = q->from_int(2);
  x.at(1, 1) = q->from_int(3);
  x.at(2, 2) = q->from_int(-1);
  for (int i = 0; i < 3; ++i) y.at(i, i) = q->one();
  auto rep = split_deg3_norm_probe(x, y, Rat(5));
  auto matched = rep.witness["matched"].get<std::vector<std::string>>();
  CHECK(std::find(matched.begin(), matched.end(), "c") != matched.end());

  // sweep: records the empirical det(y) discrepancy of the displayed formula
  auto sweep = split_deg3_norm_sweep(40, 31);
  auto ratio = sweep.witness["rhs_at_c_equals_lhs_times_det_y"].get<std::string>();
  CHECK(ratio == "40/40");

  Matrix<Value> sing(3, 3, q->zero());
  CHECK_THROWS_AS(split_deg3_norm_probe(x, sing, Rat(5)), SingularMatrixError);
}
