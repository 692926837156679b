#include "normforms/csa/quaternion.hpp"

#include <random>

namespace normforms::csa {

using exactalg::FieldDesc;
using exactalg::rat_to_string;

QuatQ quat_inv(const QuatQ& q) {
  Value n = q.nrd();
  if (n.is_zero()) throw DivisionByZeroError("quaternion of reduced norm zero is not invertible");
  return q.conj().scaled(n.inv());
}

DivisionCert certify_division(const Rat& a, const Rat& b, std::uint64_t height_bound,
                              std::uint64_t eval_budget, bool declared) {
  DivisionCert cert;
  cert.a = a;
  cert.b = b;
  if (a == 0 || b == 0) throw std::invalid_argument("quaternion algebra parameters must be nonzero");
  if (a < 0 && b < 0) {
    cert.certified = true;
    cert.method = "definite";
    return cert;
  }
  // Bounded search for a nonzero rational zero of <1,-a,-b,ab>; integer
  // points of bounded height suffice after clearing denominators.
  std::uint64_t used = 0;
  for (std::uint64_t h = 1; h <= height_bound; ++h) {
    long hs = static_cast<long>(h);
    for (long t = -hs; t <= hs; ++t)
      for (long x = -hs; x <= hs; ++x)
        for (long y = -hs; y <= hs; ++y)
          for (long z = -hs; z <= hs; ++z) {
            long m = std::max(std::max(std::abs(t), std::abs(x)), std::max(std::abs(y), std::abs(z)));
            if (m != hs) continue;
            if (++used > eval_budget) {
              cert.searched_height = h - 1;
              cert.certified = declared;
              cert.method = declared ? "declared" : "budget-exhausted";
              return cert;
            }
            Rat val = Rat(t) * t - a * x * x - b * y * y + a * b * z * z;
            if (val == 0) {
              cert.certified = false;
              cert.method = "zero-found";
              cert.searched_height = h;
              cert.isotropy_witness = {Rat(t), Rat(x), Rat(y), Rat(z)};
              return cert;
            }
          }
    cert.searched_height = h;
  }
  cert.certified = true;
  cert.method = "bounded-search";
  return cert;
}

namespace {

Value ndet_impl(const QuatMatrix& input, PivotOrder order, bool division_certified) {
  if (!input.square() || input.rows() == 0) throw std::invalid_argument("ndet needs a nonempty square matrix");
  const std::size_t n = input.rows();
  QuatMatrix m = input;
  const auto field = m.at(0, 0).t.field();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      std::size_t probe = (order == PivotOrder::FirstNonzero) ? r : n - 1 - (r - k);
      if (probe < k) break;
      if (!m.at(probe, k).nrd().is_zero()) {
        pivot = probe;
        break;
      }
    }
    if (pivot == n) {
      bool column_zero = true;
      for (std::size_t r = k; r < n; ++r) column_zero = column_zero && m.at(r, k).is_zero();
      if (column_zero) return field->zero();
      if (division_certified)
        throw std::logic_error("nonzero entry of reduced norm zero in a certified division algebra");
      throw PivotError("no invertible pivot in a non-division algebra");
    }
    if (pivot != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
    QuatQ inv = quat_inv(m.at(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m.at(r, k).is_zero()) continue;
      QuatQ f = m.at(r, k) * inv;
      for (std::size_t j = k; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(k, j);
    }
  }
  Value acc = field->one();
  for (std::size_t k = 0; k < n; ++k) acc = acc * m.at(k, k).nrd();
  return acc;
}

}  // namespace

Value ndet(const QuatMatrix& m, const DivisionCert& cert, PivotOrder order) {
  if (!cert.certified)
    throw std::invalid_argument("ndet requires a division certificate (method: " + cert.method + ")");
  return ndet_impl(m, order, true);
}

Value ndet_unchecked(const QuatMatrix& m, PivotOrder order) { return ndet_impl(m, order, false); }

Matrix<Value> split_embedding(const QuatMatrix& m, const Value& s) {
  const std::size_t n = m.rows();
  if (n == 0 || !m.square()) throw std::invalid_argument("split embedding needs a square matrix");
  const auto field = s.field();
  if (!(s * s == m.at(0, 0).pa)) throw std::invalid_argument("s^2 must equal the first algebra parameter");
  Matrix<Value> out(2 * n, 2 * n, field->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QuatQ& q = m.at(i, j);
      out.at(2 * i, 2 * j) = q.t + q.x * s;
      out.at(2 * i, 2 * j + 1) = (q.y + q.z * s) * q.pb;
      out.at(2 * i + 1, 2 * j) = q.y - q.z * s;
      out.at(2 * i + 1, 2 * j + 1) = q.t - q.x * s;
    }
  return out;
}

QuatMatrix rho_of_delta(const extfields::SimpleExt& k_ext, const std::vector<QuatQ>& alphas) {
  const unsigned n = k_ext.degree();
  if (alphas.size() != n) throw std::invalid_argument("one quaternion coordinate per basis element required");
  const QuatQ zero = alphas[0].zero_like();
  QuatMatrix m(n, n, zero);
  Value power = k_ext.field()->one();
  Value gen = k_ext.generator();
  for (unsigned t = 0; t < n; ++t) {
    Matrix<Value> rep = k_ext.regular_rep(power);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (!rep.at(i, j).is_zero()) m.at(i, j) = m.at(i, j) + alphas[t].scaled(rep.at(i, j));
    if (t + 1 < n) power = power * gen;
  }
  return m;
}

VerifyReport verify_quat_norm_det(const extfields::SimpleExt& k_ext, const std::vector<QuatQ>& alphas,
                                  const DivisionCert& cert) {
  const unsigned n = k_ext.degree();
  if (alphas.size() != n) throw std::invalid_argument("one quaternion coordinate per basis element required");

  // Delta as a quaternion with K-coordinates.
  auto lift_coords = [&](auto pick) {
    std::vector<Value> coords;
    for (unsigned t = 0; t < n; ++t) coords.push_back(pick(alphas[t]));
    return k_ext.element(coords);
  };
  Value tk = lift_coords([](const QuatQ& q) { return q.t; });
  Value xk = lift_coords([](const QuatQ& q) { return q.x; });
  Value yk = lift_coords([](const QuatQ& q) { return q.y; });
  Value zk = lift_coords([](const QuatQ& q) { return q.z; });
  Value pa = k_ext.field()->from_rat(alphas[0].pa.rat());
  Value pb = k_ext.field()->from_rat(alphas[0].pb.rat());
  Quat<Value> delta_k(tk, xk, yk, zk, pa, pb);
  Value lhs = k_ext.norm(delta_k.nrd());

  Value rhs = ndet(rho_of_delta(k_ext, alphas), cert);

  VerifyReport r;
  r.identity = "thm5";
  r.statement = "N_{K/F}(Nrd_{A(x)K}(Delta)) == Nrd(ndet(rho(Delta)))";
  r.mode = "exact";
  r.parameters["a"] = rat_to_string(cert.a);
  r.parameters["b"] = rat_to_string(cert.b);
  r.parameters["k_field"] = k_ext.field()->str();
  r.pass = lhs == rhs;
  r.witness["lhs"] = lhs.str();
  r.witness["rhs"] = rhs.str();
  return r;
}

std::vector<GammaRule> default_gamma_rules() {
  std::vector<GammaRule> rules;
  rules.push_back({"c", [](const Rat& c) { return c; }});
  rules.push_back({"-c", [](const Rat& c) { return Rat(-c); }});
  rules.push_back({"2*c", [](const Rat& c) { return Rat(2 * c); }});
  rules.push_back({"c/2", [](const Rat& c) { return Rat(c / 2); }});
  rules.push_back({"1", [](const Rat&) { return Rat(1); }});
  rules.push_back({"-1", [](const Rat&) { return Rat(-1); }});
  rules.push_back({"2", [](const Rat&) { return Rat(2); }});
  rules.push_back({"-2", [](const Rat&) { return Rat(-2); }});
  rules.push_back({"3", [](const Rat&) { return Rat(3); }});
  rules.push_back({"-3", [](const Rat&) { return Rat(-3); }});
  return rules;
}

namespace {

struct ProbeOutcome {
  Rat lhs;
  std::vector<std::string> matched;
};

ProbeOutcome quad_scalar_probe_core(const QuatQ& x, const QuatQ& y, const Rat& c,
                                    const std::vector<GammaRule>& rules) {
  if (c == 0) throw std::invalid_argument("extension parameter c must be nonzero");
  if (y.nrd().is_zero()) throw std::invalid_argument("y must be invertible");
  auto q = FieldDesc::rationals();
  Value cv = Value::make_rational(c);

  // z = x + y sqrt(c) over the pair ring F + F sqrt(c).
  using Pair = QuadExt<Value>;
  auto pair = [&](const Value& p, const Value& s) { return Pair(p, s, cv); };
  Quat<Pair> z(pair(x.t, y.t), pair(x.x, y.x), pair(x.y, y.y), pair(x.z, y.z),
               Pair::scalar(x.pa, cv), Pair::scalar(x.pb, cv));
  ProbeOutcome out;
  out.lhs = z.nrd().norm().rat();

  QuatQ xyx = x * quat_inv(y) * x;
  for (const auto& rule : rules) {
    Rat gamma = rule.value(c);
    QuatQ inner = xyx - y.scaled(q->from_rat(gamma));
    Rat rhs = (y * inner).nrd().rat();
    if (rhs == out.lhs) out.matched.push_back(rule.name);
  }
  return out;
}

}  // namespace

VerifyReport quad_scalar_norm_probe(const QuatQ& x, const QuatQ& y, const Rat& c,
                                    const std::vector<GammaRule>& rules) {
  ProbeOutcome out = quad_scalar_probe_core(x, y, c, rules);
  VerifyReport r;
  r.identity = "remark4";
  r.statement = "N_{K/F}(Nrd(x + y*sqrt(c))) == Nrd(y*(x*y^-1*x - gamma*y)) for some swept gamma";
  r.mode = "exact";
  r.parameters["c"] = rat_to_string(c);
  r.pass = !out.matched.empty();
  r.witness["lhs"] = rat_to_string(out.lhs);
  r.witness["matched"] = out.matched;
  return r;
}

VerifyReport quad_scalar_norm_sweep(const Rat& a, const Rat& b, unsigned instances, std::uint64_t seed,
                                    const std::vector<GammaRule>& rules) {
  auto q = FieldDesc::rationals();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> cpick(1, 9);
  Value av = q->from_rat(a), bv = q->from_rat(b);

  std::map<std::string, unsigned> pass_count;
  for (const auto& rule : rules) pass_count[rule.name] = 0;
  unsigned done = 0;
  while (done < instances) {
    auto draw = [&]() {
      return QuatQ(q->from_int(coeff(gen)), q->from_int(coeff(gen)), q->from_int(coeff(gen)),
                   q->from_int(coeff(gen)), av, bv);
    };
    QuatQ x = draw(), y = draw();
    if (y.nrd().is_zero()) continue;
    Rat c = Rat(cpick(gen));
    if (gen() & 1) c = -c;
    ProbeOutcome out = quad_scalar_probe_core(x, y, c, rules);
    for (const auto& name : out.matched) pass_count[name] += 1;
    ++done;
  }

  std::vector<std::string> consistent;
  for (const auto& [name, count] : pass_count)
    if (count == instances) consistent.push_back(name);

  VerifyReport r;
  r.identity = "remark4";
  r.statement = "sweep of candidate constants gamma in the quadratic-scalar norm identity";
  r.mode = "exact";
  r.seed = seed;
  r.parameters["a"] = rat_to_string(a);
  r.parameters["b"] = rat_to_string(b);
  r.parameters["instances"] = std::to_string(instances);
  r.pass = !consistent.empty();
  r.witness["consistent"] = consistent;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [name, count] : pass_count) counts[name] = count;
  r.witness["pass_counts"] = counts;
  if (!consistent.empty()) r.witness["resolved_constant"] = consistent.front();
  return r;
}

forms::Form quaternion_norm_form(const Rat& a, const Rat& b) {
  auto q = FieldDesc::rationals();
  std::vector<Value> coeffs = {q->one(), q->from_rat(-a), q->from_rat(-b), q->from_rat(a * b)};
  return forms::diagonal_form(coeffs, 2, {"t", "x", "y", "z"});
}

forms::AlgebraStructure quaternion_structure(const Rat& a, const Rat& b) {
  auto q = FieldDesc::rationals();
  Value av = q->from_rat(a), bv = q->from_rat(b);
  std::vector<std::vector<std::vector<Value>>> c(
      4, std::vector<std::vector<Value>>(4, std::vector<Value>(4, q->zero())));
  // basis order 1, i, j, k; read the coordinates off the generic product
  auto basis = [&](unsigned idx) {
    QuatQ e = QuatQ::scalar(q->zero(), av, bv);
    (idx == 0 ? e.t : idx == 1 ? e.x : idx == 2 ? e.y : e.z) = q->one();
    return e;
  };
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      QuatQ p = basis(i) * basis(j);
      c[i][j][0] = p.t;
      c[i][j][1] = p.x;
      c[i][j][2] = p.y;
      c[i][j][3] = p.z;
    }
  std::vector<Value> unit = {q->one(), q->zero(), q->zero(), q->zero()};
  return forms::AlgebraStructure::from_constants(c, q, unit);
}

Matrix<Value> sharp3(const Matrix<Value>& x) {
  if (!x.square() || x.rows() != 3) throw std::invalid_argument("sharp is implemented for 3x3 matrices");
  const auto f = x.at(0, 0).field();
  Value tr = x.at(0, 0) + x.at(1, 1) + x.at(2, 2);
  Matrix<Value> x2 = x * x;
  Value tr2 = x2.at(0, 0) + x2.at(1, 1) + x2.at(2, 2);
  Value s = (tr * tr - tr2) / f->from_int(2);
  Matrix<Value> id = Matrix<Value>::identity(3, f->one(), f->zero());
  return x2 - x.scaled(tr) + id.scaled(s);
}

namespace {

ProbeOutcome split_deg3_probe_core(const Matrix<Value>& x, const Matrix<Value>& y, const Rat& c,
                                   const std::vector<GammaRule>& rules) {
  if (c == 0) throw std::invalid_argument("extension parameter c must be nonzero");
  const auto f = x.at(0, 0).field();
  Value dy = exactalg::det_gauss(y);
  if (dy.is_zero()) throw SingularMatrixError("y must be invertible");
  Value cv = f->from_rat(c);

  using Pair = QuadExt<Value>;
  Matrix<Pair> z(3, 3, Pair(f->zero(), f->zero(), cv));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) z.at(i, j) = Pair(x.at(i, j), y.at(i, j), cv);
  ProbeOutcome out;
  out.lhs = exactalg::det_cofactor(z).norm().rat();

  Matrix<Value> xyx = x * sharp3(y) * x;
  for (const auto& rule : rules) {
    Value gamma = f->from_rat(rule.value(c));
    Matrix<Value> inner = xyx - y.scaled(gamma * dy);
    Rat rhs = (exactalg::det_gauss(inner) / dy).rat();
    if (rhs == out.lhs) out.matched.push_back(rule.name);
  }
  return out;
}

}  // namespace

VerifyReport split_deg3_norm_probe(const Matrix<Value>& x, const Matrix<Value>& y, const Rat& c,
                                   const std::vector<GammaRule>& rules) {
  ProbeOutcome out = split_deg3_probe_core(x, y, c, rules);
  VerifyReport r;
  r.identity = "remark4-deg3-split";
  r.statement = "N_{K/F}(det(x + y*sqrt(c))) vs det(x*y^sharp*x - gamma*det(y)*y)/det(y), gamma swept";
  r.mode = "exact";
  r.parameters["c"] = rat_to_string(c);
  r.pass = !out.matched.empty();
  r.witness["lhs"] = rat_to_string(out.lhs);
  r.witness["matched"] = out.matched;
  return r;
}

VerifyReport split_deg3_norm_sweep(unsigned instances, std::uint64_t seed,
                                   const std::vector<GammaRule>& rules) {
  auto q = FieldDesc::rationals();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> cpick(1, 9);

  std::map<std::string, unsigned> pass_count;
  for (const auto& rule : rules) pass_count[rule.name] = 0;
  unsigned dety_relation_holds = 0;
  unsigned done = 0;
  while (done < instances) {
    Matrix<Value> x(3, 3, q->zero()), y(3, 3, q->zero());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        x.at(i, j) = q->from_int(coeff(gen));
        y.at(i, j) = q->from_int(coeff(gen));
      }
    Value dy = exactalg::det_gauss(y);
    if (dy.is_zero()) continue;
    Rat c = Rat(cpick(gen));
    if (gen() & 1) c = -c;
    ProbeOutcome out = split_deg3_probe_core(x, y, c, rules);
    for (const auto& name : out.matched) pass_count[name] += 1;
    // Diagnostic: the displayed right-hand side at gamma = c equals the true
    // norm multiplied by det(y) on every observed instance.
    Matrix<Value> inner = x * sharp3(y) * x - y.scaled(q->from_rat(c) * dy);
    Rat rhs_at_c = (exactalg::det_gauss(inner) / dy).rat();
    if (rhs_at_c == out.lhs * dy.rat()) ++dety_relation_holds;
    ++done;
  }

  std::vector<std::string> consistent;
  for (const auto& [name, count] : pass_count)
    if (count == instances) consistent.push_back(name);

  VerifyReport r;
  r.identity = "remark4-deg3-split";
  r.statement = "sweep of candidate constants in the split degree-3 norm comparison";
  r.mode = "exact";
  r.seed = seed;
  r.parameters["instances"] = std::to_string(instances);
  r.pass = !consistent.empty();
  r.witness["consistent"] = consistent;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [name, count] : pass_count) counts[name] = count;
  r.witness["pass_counts"] = counts;
  r.witness["rhs_at_c_equals_lhs_times_det_y"] =
      std::to_string(dety_relation_holds) + "/" + std::to_string(instances);
  return r;
}

}  // namespace normforms::csa
