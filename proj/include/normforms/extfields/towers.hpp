// Norm factorization through the subfield generated by an element, and the
// decision table for which extension towers guarantee the norm principle for
// norm-type forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normforms/exactalg/field.hpp"
#include "normforms/exactalg/numeric.hpp"

namespace normforms::extfields {

using exactalg::FieldPtr;
using exactalg::Rat;
using exactalg::Value;

struct NormFactorization {
  Rat norm;                    // N_{K/Q}(a)
  Rat primitive_norm;          // N_{Q(a)/Q}(a)
  std::vector<Rat> minpoly;    // monic minimal polynomial of a over Q
  unsigned subfield_degree;    // [Q(a):Q]
  unsigned exponent;           // [K:Q(a)]; norm = primitive_norm^exponent
  std::optional<Rat> dth_root; // witness r with norm = r^d when d | exponent
};

// a lives in a tower of simple extensions over the rationals. The norm down
// to Q factors as N_{Q(a)/Q}(a)^{[K:Q(a)]}; when the form degree divides the
// exponent the norm is visibly a d-th power.
NormFactorization norm_tower_factor(const Value& a, unsigned form_degree);

enum class StepVerdict { PPower, Coprime, Galois, Unknown };

struct TowerStep {
  unsigned degree = 1;
  bool galois = false;
  StepVerdict verdict = StepVerdict::Unknown;
};

enum class TowerFormKind {
  PrimeDegreeFieldNorm,          // norm of a degree-p field extension
  CubicCompositionNotFieldNorm,  // cubic composition form that is not a field norm
  TowerNorm,                     // norm of L/F with [L:F'] = p, F'/F Galois
  TransferRound,                 // transfer of a round prime-degree form along F'/F
};

struct TowerFormSpec {
  TowerFormKind kind = TowerFormKind::PrimeDegreeFieldNorm;
  unsigned p = 3;               // prime degree of the (inner) form
  unsigned subfield_degree = 1; // [F':F] for the two-layer kinds
  bool k_galois_overall = false;
};

struct TowerPlan {
  TowerFormSpec form;
  std::vector<TowerStep> steps;
  unsigned total_degree = 1;
  bool guaranteed = false;
  std::string reason;
};

TowerPlan tower_plan(const TowerFormSpec& form, const std::vector<std::pair<unsigned, bool>>& steps);

std::string step_verdict_name(StepVerdict v);

}  // namespace normforms::extfields
