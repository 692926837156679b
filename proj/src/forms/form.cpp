#include "normforms/forms/form.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace normforms::forms {

using exactalg::Exponents;
using exactalg::FieldDesc;
using exactalg::Rat;

Form::Form(unsigned degree, std::vector<std::string> vars, SparsePoly poly,
           std::vector<std::string> params)
    : degree_(degree), vars_(std::move(vars)), params_(std::move(params)), poly_(std::move(poly)) {
  if (degree_ < 1) throw std::invalid_argument("form degree must be >= 1");
  if (vars_.empty()) throw std::invalid_argument("form needs at least one variable");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw std::invalid_argument("duplicate form variable");
  for (const auto& p : params_)
    if (seen.count(p)) throw std::invalid_argument("parameter collides with a form variable");
  std::uint64_t ch = poly_.field()->characteristic();
  if (ch != 0 && ch <= degree_)
    throw CharacteristicError("field characteristic must be 0 or exceed the form degree");
  std::set<std::string> allowed(vars_.begin(), vars_.end());
  allowed.insert(params_.begin(), params_.end());
  for (const auto& v : poly_.vars())
    if (!allowed.count(v)) throw std::invalid_argument("polynomial mentions unknown variable " + v);
  std::vector<std::string> all(allowed.begin(), allowed.end());
  poly_ = poly_.with_vars(all);
  if (!poly_.is_homogeneous(degree_, vars_))
    throw std::invalid_argument("polynomial is not homogeneous of the stated degree");
}

Value Form::evaluate(const std::vector<Value>& point,
                     const std::map<std::string, Value>& param_values) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("point dimension mismatch");
  std::map<std::string, Value> m = param_values;
  for (std::size_t i = 0; i < vars_.size(); ++i) m.emplace(vars_[i], point[i]);
  return poly_.eval(m);
}

Form Form::renamed(const std::string& prefix) const {
  std::map<std::string, std::string> ren;
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    std::string n = prefix + std::to_string(i + 1);
    ren[vars_[i]] = n;
    fresh.push_back(n);
  }
  return Form(degree_, fresh, poly_.rename_vars(ren), params_);
}

std::string Form::str() const {
  std::ostringstream os;
  os << "degree " << degree_ << " form in (";
  for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? ", " : "") << vars_[i];
  os << ")";
  if (!params_.empty()) {
    os << " with parameters (";
    for (std::size_t i = 0; i < params_.size(); ++i) os << (i ? ", " : "") << params_[i];
    os << ")";
  }
  os << " over " << field()->str() << ": " << poly_.str();
  return os.str();
}

MultilinearMap polarize(const Form& phi) {
  const unsigned d = phi.degree();
  const unsigned n = phi.dim();
  const FieldPtr& f = phi.field();

  MultilinearMap theta;
  theta.arity = d;
  theta.dim = n;
  theta.params = phi.params();
  theta.block_vars.assign(d, std::vector<std::string>(n));
  std::set<std::string> taken(phi.params().begin(), phi.params().end());
  for (unsigned k = 0; k < d; ++k)
    for (unsigned i = 0; i < n; ++i) {
      std::string name = phi.vars()[i] + "." + std::to_string(k + 1);
      if (taken.count(name)) throw std::invalid_argument("polarization variable name collision: " + name);
      theta.block_vars[k][i] = name;
    }

  SparsePoly acc = SparsePoly::zero(f);
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::map<std::string, SparsePoly> subs;
    for (unsigned i = 0; i < n; ++i) {
      SparsePoly s = SparsePoly::zero(f);
      for (unsigned k = 0; k < d; ++k)
        if (mask & (1u << k)) s = s + SparsePoly::variable(theta.block_vars[k][i], f);
      subs.emplace(phi.vars()[i], std::move(s));
    }
    SparsePoly term = phi.poly().substitute(subs);
    unsigned l = static_cast<unsigned>(std::popcount(mask));
    if ((d - l) % 2) term = -term;
    acc = acc + term;
  }
  Rat inv_fact(1);
  for (unsigned k = 2; k <= d; ++k) inv_fact /= k;
  theta.poly = exactalg::SparsePoly::constant(f->from_rat(inv_fact)) * acc;
  return theta;
}

namespace {

void multisets(unsigned n, unsigned k, std::vector<unsigned>& cur,
               const std::function<void(const std::vector<unsigned>&)>& emit, unsigned from = 0) {
  if (cur.size() == k) {
    emit(cur);
    return;
  }
  for (unsigned i = from; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k, cur, emit, i);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Value>> radical_basis(const Form& phi) {
  if (!phi.params().empty()) throw UnsupportedError("radical requires a parameter-free form");
  MultilinearMap theta = polarize(phi);
  const unsigned d = phi.degree(), n = phi.dim();
  const FieldPtr& f = phi.field();

  std::vector<std::vector<Value>> rows;
  std::vector<unsigned> cur;
  multisets(n, d - 1, cur, [&](const std::vector<unsigned>& idx) {
    // Pin blocks 2..d to basis vectors idx and read off the linear form in
    // the first block.
    std::map<std::string, std::uint32_t> pin;
    for (unsigned k = 1; k < d; ++k)
      for (unsigned i = 0; i < n; ++i) pin[theta.block_vars[k][i]] = 0;
    for (unsigned k = 1; k < d; ++k) pin[theta.block_vars[k][idx[k - 1]]] += 1;
    SparsePoly lin = theta.poly.extract(pin);
    std::vector<Value> row(n, f->zero());
    for (unsigned i = 0; i < n; ++i) {
      std::map<std::string, std::uint32_t> sel;
      for (unsigned j = 0; j < n; ++j) sel[theta.block_vars[0][j]] = (j == i) ? 1 : 0;
      row[i] = lin.extract(sel).constant_value();
    }
    rows.push_back(std::move(row));
  });

  Matrix<Value> m(rows.size(), n, f->zero());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (unsigned c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
  return exactalg::nullspace_gauss(m);
}

bool nondegenerate(const Form& phi) { return radical_basis(phi).empty(); }

Form diagonal_form(const std::vector<Value>& coeffs, unsigned degree, std::vector<std::string> varnames) {
  if (coeffs.empty()) throw std::invalid_argument("diagonal form needs at least one coefficient");
  const FieldPtr& f = coeffs[0].field();
  if (varnames.empty())
    for (std::size_t i = 0; i < coeffs.size(); ++i) varnames.push_back("x" + std::to_string(i + 1));
  if (varnames.size() != coeffs.size()) throw std::invalid_argument("coefficient/variable count mismatch");
  SparsePoly p = SparsePoly::zero(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) throw std::invalid_argument("diagonal coefficients must be nonzero");
    p = p + SparsePoly::constant(coeffs[i]) * SparsePoly::variable(varnames[i], f).pow(degree);
  }
  return Form(degree, varnames, p);
}

Form scale(const Form& phi, const Value& a) {
  if (a.is_zero()) throw std::invalid_argument("scaling by zero");
  return Form(phi.degree(), phi.vars(), SparsePoly::constant(a) * phi.poly(), phi.params());
}

Form scale(const Form& phi, const SparsePoly& a) {
  if (a.is_zero()) throw std::invalid_argument("scaling by zero");
  std::set<std::string> allowed(phi.params().begin(), phi.params().end());
  std::vector<std::string> params = phi.params();
  for (const auto& v : a.vars())
    if (!allowed.count(v)) params.push_back(v);
  return Form(phi.degree(), phi.vars(), a * phi.poly(), params);
}

VerifyReport isometry_witness_check(const Form& phi1, const Form& phi2, const Matrix<SparsePoly>& M) {
  const unsigned n = phi1.dim();
  if (phi2.dim() != n) throw std::invalid_argument("isometry witness for forms of different dimension");
  if (phi1.degree() != phi2.degree()) throw std::invalid_argument("isometry witness for forms of different degree");
  if (M.rows() != n || M.cols() != n) throw std::invalid_argument("witness matrix has wrong shape");
  if (det_cofactor(M).is_zero()) throw SingularMatrixError("isometry witness matrix is singular");

  // phi2(M v) with v the coordinates of phi1.
  std::map<std::string, SparsePoly> subs;
  for (unsigned i = 0; i < n; ++i) {
    SparsePoly s = SparsePoly::zero(phi1.field());
    for (unsigned j = 0; j < n; ++j)
      s = s + M.at(i, j) * SparsePoly::variable(phi1.vars()[j], phi1.field());
    subs.emplace(phi2.vars()[i], std::move(s));
  }
  SparsePoly lhs = phi2.poly().substitute(subs);
  VerifyReport r;
  r.identity = "isometry-witness";
  r.statement = "phi2(M v) == phi1(v) as polynomials";
  r.mode = "exact";
  SparsePoly diff = lhs - phi1.poly();
  r.pass = diff.is_zero();
  if (!r.pass) r.witness["difference"] = diff.str();
  return r;
}

VerifyReport isometry_witness_check(const Form& phi1, const Form& phi2, const Matrix<Value>& M) {
  Matrix<SparsePoly> P(M.rows(), M.cols(), SparsePoly::zero(phi1.field()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) P.at(i, j) = SparsePoly::constant(M.at(i, j));
  return isometry_witness_check(phi1, phi2, P);
}

ValueSet value_set(const Form& phi, std::uint64_t budget) {
  const FieldPtr& f = phi.field();
  if (!f->finite()) throw std::invalid_argument("value sets need a finite base field");
  if (!phi.params().empty()) throw UnsupportedError("value sets need a parameter-free form");
  const std::uint64_t q = f->size();
  const unsigned n = phi.dim();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > budget / q + 1) throw BudgetError("value-set enumeration exceeds the evaluation budget");
    total *= q;
  }
  if (total > budget) throw BudgetError("value-set enumeration exceeds the evaluation budget");
  if (q > 4096) throw BudgetError("finite field too large for table-driven enumeration");

  // Table-driven arithmetic on element ranks.
  std::vector<Value> elems;
  elems.reserve(q);
  for (std::uint64_t r = 0; r < q; ++r) elems.push_back(f->element_at(r));
  std::vector<std::uint16_t> mul(q * q), add(q * q);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) {
      mul[a * q + b] = static_cast<std::uint16_t>(f->rank_of(elems[a] * elems[b]));
      add[a * q + b] = static_cast<std::uint16_t>(f->rank_of(elems[a] + elems[b]));
    }

  // Compile the polynomial to (coefficient rank, exponents) pairs and a power
  // table pow[x][e].
  unsigned max_exp = 1;
  std::vector<std::pair<std::uint16_t, Exponents>> terms;
  std::vector<int> var_slot(phi.poly().vars().size(), -1);
  for (std::size_t i = 0; i < phi.poly().vars().size(); ++i) {
    auto it = std::find(phi.vars().begin(), phi.vars().end(), phi.poly().vars()[i]);
    var_slot[i] = static_cast<int>(it - phi.vars().begin());
  }
  for (const auto& [e, c] : phi.poly().terms()) {
    for (auto x : e) max_exp = std::max(max_exp, static_cast<unsigned>(x));
    Exponents slots(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i) slots[static_cast<std::size_t>(var_slot[i])] = e[i];
    terms.emplace_back(static_cast<std::uint16_t>(f->rank_of(c)), std::move(slots));
  }
  std::vector<std::vector<std::uint16_t>> powt(q, std::vector<std::uint16_t>(max_exp + 1));
  for (std::uint64_t x = 0; x < q; ++x) {
    powt[x][0] = static_cast<std::uint16_t>(f->rank_of(f->one()));
    for (unsigned e = 1; e <= max_exp; ++e) powt[x][e] = mul[powt[x][e - 1] * q + x];
  }

  std::set<std::uint64_t> rep;
  std::vector<std::uint16_t> point(n, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::uint16_t acc = 0;
    for (const auto& [crank, exps] : terms) {
      std::uint16_t t = crank;
      for (unsigned i = 0; i < n; ++i)
        if (exps[i]) t = mul[t * q + powt[point[i]][exps[i]]];
      acc = add[acc * q + t];
    }
    if (acc != 0) rep.insert(acc);
    for (unsigned i = 0; i < n; ++i) {
      if (++point[i] < q) break;
      point[i] = 0;
    }
  }

  // Closure of D under multiplication is the generated subgroup.
  std::set<std::uint64_t> sub = rep;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(sub.begin(), sub.end());
    for (auto a : cur)
      for (auto b : cur)
        if (sub.insert(mul[a * q + b]).second) grew = true;
  }

  ValueSet out;
  for (auto r : rep) out.represented.push_back(elems[r]);
  for (auto r : sub) out.subgroup.push_back(elems[r]);
  return out;
}

AlgebraStructure::AlgebraStructure(unsigned dim, std::vector<std::vector<std::vector<SparsePoly>>> c,
                                   FieldPtr field, std::vector<std::string> params,
                                   std::optional<std::vector<Value>> unit)
    : dim_(dim), c_(std::move(c)), field_(std::move(field)), params_(std::move(params)), unit_(std::move(unit)) {
  if (c_.size() != dim_) throw std::invalid_argument("structure constant tensor shape mismatch");
  for (const auto& row : c_) {
    if (row.size() != dim_) throw std::invalid_argument("structure constant tensor shape mismatch");
    for (const auto& cell : row)
      if (cell.size() != dim_) throw std::invalid_argument("structure constant tensor shape mismatch");
  }
  if (unit_) {
    if (unit_->size() != dim_) throw std::invalid_argument("unit coordinate length mismatch");
    // unit * e_j = e_j and e_j * unit = e_j
    for (unsigned j = 0; j < dim_; ++j)
      for (unsigned l = 0; l < dim_; ++l) {
        SparsePoly left = SparsePoly::zero(field_), right = SparsePoly::zero(field_);
        for (unsigned i = 0; i < dim_; ++i) {
          left = left + SparsePoly::constant((*unit_)[i]) * c_[i][j][l];
          right = right + SparsePoly::constant((*unit_)[i]) * c_[j][i][l];
        }
        SparsePoly want = (j == l) ? SparsePoly::constant(field_->one()) : SparsePoly::zero(field_);
        if (!(left == want) || !(right == want))
          throw std::invalid_argument("declared unit element fails the unit laws");
      }
  }
}

AlgebraStructure AlgebraStructure::from_constants(const std::vector<std::vector<std::vector<Value>>>& c,
                                                  FieldPtr field, std::optional<std::vector<Value>> unit) {
  std::vector<std::vector<std::vector<SparsePoly>>> cp;
  cp.reserve(c.size());
  for (const auto& row : c) {
    std::vector<std::vector<SparsePoly>> pr;
    for (const auto& cell : row) {
      std::vector<SparsePoly> pc;
      for (const auto& v : cell) pc.push_back(SparsePoly::constant(v));
      pr.push_back(std::move(pc));
    }
    cp.push_back(std::move(pr));
  }
  unsigned d = static_cast<unsigned>(c.size());
  return AlgebraStructure(d, std::move(cp), std::move(field), {}, std::move(unit));
}

std::vector<SparsePoly> AlgebraStructure::product_polys(const std::vector<std::string>& xvars,
                                                        const std::vector<std::string>& yvars) const {
  if (xvars.size() != dim_ || yvars.size() != dim_)
    throw std::invalid_argument("product variable block size mismatch");
  std::vector<SparsePoly> z(dim_, SparsePoly::zero(field_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      SparsePoly xy = SparsePoly::variable(xvars[i], field_) * SparsePoly::variable(yvars[j], field_);
      for (unsigned l = 0; l < dim_; ++l) {
        if (c_[i][j][l].is_zero()) continue;
        z[l] = z[l] + c_[i][j][l] * xy;
      }
    }
  return z;
}

Matrix<SparsePoly> AlgebraStructure::left_mult_matrix(const std::vector<Value>& x0) const {
  if (x0.size() != dim_) throw std::invalid_argument("coordinate length mismatch");
  Matrix<SparsePoly> m(dim_, dim_, SparsePoly::zero(field_));
  for (unsigned l = 0; l < dim_; ++l)
    for (unsigned j = 0; j < dim_; ++j) {
      SparsePoly acc = SparsePoly::zero(field_);
      for (unsigned i = 0; i < dim_; ++i) {
        if (x0[i].is_zero()) continue;
        acc = acc + SparsePoly::constant(x0[i]) * c_[i][j][l];
      }
      m.at(l, j) = acc;
    }
  return m;
}

VerifyReport permits_composition_check_poly(const SparsePoly& phi_poly,
                                            const std::vector<std::string>& form_vars,
                                            const std::vector<SparsePoly>& product,
                                            const std::vector<std::string>& xvars,
                                            const std::vector<std::string>& yvars) {
  if (product.size() != form_vars.size()) throw std::invalid_argument("product coordinate count mismatch");
  std::map<std::string, SparsePoly> into_product, into_x, into_y;
  for (std::size_t i = 0; i < form_vars.size(); ++i) {
    into_product.emplace(form_vars[i], product[i]);
    into_x.emplace(form_vars[i], SparsePoly::variable(xvars[i], phi_poly.field()));
    into_y.emplace(form_vars[i], SparsePoly::variable(yvars[i], phi_poly.field()));
  }
  SparsePoly lhs = phi_poly.substitute(into_product);
  SparsePoly rhs = phi_poly.substitute(into_x) * phi_poly.substitute(into_y);
  VerifyReport r;
  r.identity = "composition";
  r.statement = "phi(x*y) == phi(x)*phi(y) for the declared bilinear product";
  r.mode = "exact";
  SparsePoly diff = lhs - rhs;
  r.pass = diff.is_zero();
  if (!r.pass) {
    const auto& [e, c] = *diff.terms().begin();
    SparsePoly lead = diff.zero_like();
    lead.add_term(e, c);
    r.witness["difference_leading_term"] = lead.str();
  }
  return r;
}

VerifyReport permits_composition_check(const Form& phi, const AlgebraStructure& algebra) {
  if (phi.dim() != algebra.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  if (!exactalg::same_field(phi.field(), algebra.field()))
    throw FieldMismatchError("form and algebra over different fields");
  std::vector<std::string> xvars, yvars;
  for (unsigned i = 0; i < phi.dim(); ++i) {
    xvars.push_back("cx" + std::to_string(i + 1));
    yvars.push_back("cy" + std::to_string(i + 1));
  }
  auto product = algebra.product_polys(xvars, yvars);
  return permits_composition_check_poly(phi.poly(), phi.vars(), product, xvars, yvars);
}

Form power_form(const Form& phi, unsigned m) {
  if (m < 2) throw std::invalid_argument("power exponent must be >= 2");
  return Form(phi.degree() * m, phi.vars(), phi.poly().pow(m), phi.params());
}

Form product_form(const Form& phi1, const Form& phi2) {
  std::set<std::string> v1(phi1.vars().begin(), phi1.vars().end());
  for (const auto& v : phi2.vars())
    if (v1.count(v)) throw std::invalid_argument("product form requires disjoint variable blocks");
  if (!exactalg::same_field(phi1.field(), phi2.field()))
    throw FieldMismatchError("product form over different fields");
  std::vector<std::string> vars = phi1.vars();
  vars.insert(vars.end(), phi2.vars().begin(), phi2.vars().end());
  std::vector<std::string> params = phi1.params();
  for (const auto& p : phi2.params())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  return Form(phi1.degree() + phi2.degree(), vars, phi1.poly() * phi2.poly(), params);
}

TrivialSnpResult classify_trivial_snp(const FormStructure& s) {
  using Origin = FormStructure::Origin;
  TrivialSnpResult r;
  if (s.origin == Origin::RepeatedCoefficient && s.degree >= 3) {
    r.verdict = TrivialSnp::ViaDthPowers;
    r.rule = "repeated-coefficient similarity group is the d-th powers";
    return r;
  }
  if (s.origin == Origin::Diagonal && s.degree >= 3) {
    bool dims = s.dim == 1;
    if (!dims && s.dim >= s.degree - 1) {
      unsigned d = s.degree;
      dims = ((s.dim - 1) % d == 0 && (s.dim - 1) / d >= 1) || ((s.dim + 1) % d == 0 && (s.dim + 1) / d >= 1);
    }
    if (dims) {
      r.verdict = TrivialSnp::ViaDthPowers;
      r.rule = "diagonal of dimension 1, sd+1 or sd-1 has d-th-power similarity group";
      return r;
    }
  }
  if (s.origin == Origin::DeterminantForm) {
    r.verdict = TrivialSnp::ViaFullGroup;
    r.rule = "determinant form: every scalar is a similarity factor";
    return r;
  }
  // SliceScaled descriptors carry the degree of the built form (one more than
  // the inner form), so characteristic 0 or > degree is the right gate.
  if (s.origin == Origin::SliceScaled && (s.characteristic == 0 || s.characteristic > s.degree)) {
    r.verdict = TrivialSnp::ViaFullGroup;
    r.rule = "scaled-slice construction: every scalar is represented and similar";
    return r;
  }
  r.verdict = TrivialSnp::NotClassified;
  r.rule = "no structural rule applies";
  return r;
}

}  // namespace normforms::forms
