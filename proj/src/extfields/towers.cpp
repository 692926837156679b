#include "normforms/extfields/towers.hpp"

#include <numeric>

#include "normforms/exactalg/matrix.hpp"

namespace normforms::extfields {

using exactalg::FieldDesc;
using exactalg::Matrix;

namespace {

void flatten_into(const Value& v, std::vector<Rat>& out) {
  switch (v.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      out.push_back(v.rat());
      return;
    case FieldDesc::Kind::Extension:
      for (const auto& c : v.coords()) flatten_into(c, out);
      return;
    case FieldDesc::Kind::Prime:
      throw std::invalid_argument("norm factorization needs characteristic zero");
  }
}

std::vector<Value> rational_basis(const FieldPtr& f) {
  if (f->kind() == FieldDesc::Kind::Rationals) return {f->one()};
  if (f->kind() != FieldDesc::Kind::Extension)
    throw std::invalid_argument("norm factorization needs characteristic zero");
  std::vector<Value> base_basis = rational_basis(f->base());
  std::vector<Value> out;
  for (unsigned j = 0; j < f->degree(); ++j)
    for (const auto& b : base_basis) {
      std::vector<Value> coords(f->degree(), f->base()->zero());
      coords[j] = b;
      out.push_back(Value::make_extension(coords, f));
    }
  return out;
}

}  // namespace

NormFactorization norm_tower_factor(const Value& a, unsigned form_degree) {
  const FieldPtr& K = a.field();
  if (K->characteristic() != 0) throw std::invalid_argument("norm factorization needs characteristic zero");
  if (a.is_zero()) throw std::invalid_argument("norm factorization of zero");
  const unsigned D = K->absolute_degree();
  auto q = FieldDesc::rationals();

  // Krylov sequence 1, a, a^2, ... flattened to rational coordinates; the
  // first linear dependence gives the minimal polynomial.
  std::vector<std::vector<Rat>> krylov;
  Value power = K->kind() == FieldDesc::Kind::Rationals ? q->one() : K->one();
  std::vector<Rat> minpoly_coeffs;
  for (unsigned k = 0; k <= D; ++k) {
    std::vector<Rat> flat;
    flatten_into(power, flat);
    krylov.push_back(flat);
    // First linear dependence among 1, a, ..., a^k.
    if (k >= 1) {
      Matrix<Value> aug(D, k + 1, q->zero());
      for (unsigned col = 0; col <= k; ++col)
        for (unsigned row = 0; row < D; ++row) aug.at(row, col) = Value::make_rational(krylov[col][row]);
      auto basis = exactalg::nullspace_gauss(aug);
      // A nullspace vector with nonzero last coordinate gives the dependence.
      for (const auto& vec : basis) {
        if (vec[k].is_zero()) continue;
        Value scale = vec[k].inv();
        minpoly_coeffs.assign(k + 1, Rat(0));
        for (unsigned i = 0; i < k; ++i) minpoly_coeffs[i] = (vec[i] * scale).rat();
        minpoly_coeffs[k] = Rat(1);
        break;
      }
      if (!minpoly_coeffs.empty()) break;
    }
    power = power * a;
  }
  if (minpoly_coeffs.empty()) throw std::logic_error("minimal polynomial not found");

  // nullspace convention: sum_i vec[i] krylov[i] = 0 with vec[k] scaled to 1,
  // i.e. a^k + sum_{i<k} vec[i] a^i = 0, so the minimal polynomial
  // coefficients are exactly vec[0..k-1] followed by 1.
  const unsigned k = static_cast<unsigned>(minpoly_coeffs.size() - 1);
  NormFactorization out;
  out.minpoly = minpoly_coeffs;
  out.subfield_degree = k;
  if (D % k != 0) throw std::logic_error("subfield degree does not divide the tower degree");
  out.exponent = D / k;
  Rat constant = minpoly_coeffs[0];
  out.primitive_norm = (k % 2 == 0) ? constant : -constant;
  out.norm = exactalg::rat_pow(out.primitive_norm, out.exponent);
  if (form_degree >= 1 && out.exponent % form_degree == 0)
    out.dth_root = exactalg::rat_pow(out.primitive_norm, out.exponent / form_degree);
  return out;
}

std::string step_verdict_name(StepVerdict v) {
  switch (v) {
    case StepVerdict::PPower:
      return "p-power";
    case StepVerdict::Coprime:
      return "coprime";
    case StepVerdict::Galois:
      return "galois";
    case StepVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

TowerPlan tower_plan(const TowerFormSpec& form, const std::vector<std::pair<unsigned, bool>>& steps) {
  if (!exactalg::is_prime_u64(form.p)) throw std::invalid_argument("form degree must be prime");
  if (form.kind == TowerFormKind::CubicCompositionNotFieldNorm && form.p != 3)
    throw std::invalid_argument("composition classification applies to cubic forms");

  TowerPlan plan;
  plan.form = form;
  unsigned total = 1;
  for (auto [deg, galois] : steps) {
    if (deg == 0) throw std::invalid_argument("step degree must be positive");
    TowerStep s;
    s.degree = deg;
    s.galois = galois;
    unsigned m = deg;
    while (m % form.p == 0) m /= form.p;
    if (m == 1)
      s.verdict = StepVerdict::PPower;
    else if (std::gcd(deg, form.p) == 1)
      s.verdict = StepVerdict::Coprime;
    else if (galois)
      s.verdict = StepVerdict::Galois;
    else
      s.verdict = StepVerdict::Unknown;
    plan.steps.push_back(s);
    total *= deg;
  }
  plan.total_degree = total;

  switch (form.kind) {
    case TowerFormKind::PrimeDegreeFieldNorm: {
      bool all = true;
      for (const auto& s : plan.steps) all = all && s.verdict != StepVerdict::Unknown;
      plan.guaranteed = all;
      plan.reason = all ? "every step is a p-power, coprime to p, or Galois"
                        : "a step of mixed degree is not declared Galois; open case";
      break;
    }
    case TowerFormKind::CubicCompositionNotFieldNorm:
      plan.guaranteed = true;
      plan.reason = "cubic composition forms that are not field-extension norms satisfy the "
                    "norm principle for every separable extension";
      break;
    case TowerFormKind::TowerNorm: {
      unsigned m2 = form.subfield_degree;
      if (form.k_galois_overall && std::gcd(plan.total_degree, m2) == 1) {
        plan.guaranteed = true;
        plan.reason = "K/F Galois of degree coprime to the intermediate degree";
      } else if (std::gcd(plan.total_degree, form.p * m2) == 1) {
        plan.guaranteed = true;
        plan.reason = "degree coprime to both layer degrees (linear disjointness)";
      } else {
        plan.guaranteed = false;
        plan.reason = "no tower-norm rule applies; open case";
      }
      break;
    }
    case TowerFormKind::TransferRound: {
      unsigned t = plan.total_degree;
      while (t % form.p == 0) t /= form.p;
      bool ppower = t == 1;
      if (ppower && std::gcd(plan.total_degree, form.subfield_degree) == 1) {
        plan.guaranteed = true;
        plan.reason = "degree is a power of p and coprime to the transfer layer";
      } else {
        plan.guaranteed = false;
        plan.reason = "transfer rule needs a p-power degree coprime to the layer; open case";
      }
      break;
    }
  }
  return plan;
}

}  // namespace normforms::extfields
