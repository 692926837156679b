#include "normforms/extfields/simple_ext.hpp"

#include "normforms/exactalg/quotient.hpp"

namespace normforms::extfields {

using exactalg::FieldDesc;
using exactalg::QuotientExt;

SimpleExt::SimpleExt(const FieldPtr& base, std::vector<Value> monic_minpoly, std::string generator)
    : ext_(FieldDesc::extension(base, std::move(monic_minpoly), std::move(generator))) {}

SimpleExt::SimpleExt(FieldPtr extension_field) : ext_(std::move(extension_field)) {
  if (!ext_ || ext_->kind() != FieldDesc::Kind::Extension)
    throw std::invalid_argument("SimpleExt needs an extension field descriptor");
}

Value SimpleExt::element(std::vector<Value> coords) const {
  return Value::make_extension(std::move(coords), ext_);
}

Value SimpleExt::generator() const {
  return Value::make_extension({base()->zero(), base()->one()}, ext_);
}

Matrix<Value> SimpleExt::regular_rep(const Value& a) const {
  if (!exactalg::same_field(a.field(), ext_)) throw FieldMismatchError("element not in this extension");
  const unsigned d = degree();
  Matrix<Value> m(d, d, base()->zero());
  Value power = ext_->one();
  Value gen = generator();
  for (unsigned j = 0; j < d; ++j) {
    Value col = a * power;  // a * alpha^j
    for (unsigned i = 0; i < d; ++i) m.at(i, j) = col.coords()[i];
    if (j + 1 < d) power = power * gen;
  }
  return m;
}

Value SimpleExt::norm(const Value& a) const { return exactalg::det_gauss(regular_rep(a)); }

Value SimpleExt::trace(const Value& a) const {
  Matrix<Value> m = regular_rep(a);
  Value t = base()->zero();
  for (unsigned i = 0; i < degree(); ++i) t = t + m.at(i, i);
  return t;
}

forms::Form SimpleExt::norm_form(const std::string& var_prefix) const {
  const unsigned d = degree();
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= d; ++i) vars.push_back(var_prefix + std::to_string(i));

  std::vector<SparsePoly> mp;
  for (const auto& c : ext_->minpoly()) mp.push_back(SparsePoly::constant(c));
  QuotientExt<SparsePoly> ring(mp);
  std::vector<SparsePoly> coords;
  for (const auto& v : vars) coords.push_back(SparsePoly::variable(v, base()));
  SparsePoly nf = ring.norm(ring.element(coords));
  return forms::Form(d, vars, std::move(nf));
}

forms::Form SimpleExt::transfer_form(const forms::Form& phi0_in,
                                     const std::vector<std::string>& block_prefixes) const {
  // Forms with base-field coefficients lift coefficient-wise.
  forms::Form phi0 = [&] {
    if (exactalg::same_field(phi0_in.field(), ext_)) return phi0_in;
    if (!exactalg::same_field(phi0_in.field(), base()))
      throw FieldMismatchError("transfer input must be a form over this extension or its base");
    SparsePoly lifted = SparsePoly::zero(ext_, phi0_in.poly().vars());
    for (const auto& [e, c] : phi0_in.poly().terms()) lifted.add_term(e, ext_->embed(c));
    return forms::Form(phi0_in.degree(), phi0_in.vars(), lifted, phi0_in.params());
  }();
  const unsigned r = degree();
  const unsigned k = phi0.dim();

  std::vector<std::vector<std::string>> names(k, std::vector<std::string>(r));
  std::vector<std::string> ordered;  // coordinate-major: blocks of one source variable together
  for (unsigned j = 0; j < k; ++j)
    for (unsigned t = 0; t < r; ++t) {
      std::string n = block_prefixes.empty()
                          ? phi0.vars()[j] + "_" + std::to_string(t + 1)
                          : block_prefixes.at(t) + std::to_string(j + 1);
      names[j][t] = n;
      ordered.push_back(n);
    }

  std::vector<SparsePoly> mp;
  for (const auto& c : ext_->minpoly()) mp.push_back(SparsePoly::constant(c));
  QuotientExt<SparsePoly> ring(mp);

  using Elem = QuotientExt<SparsePoly>::Elem;
  std::vector<Elem> subs;
  for (unsigned j = 0; j < k; ++j) {
    std::vector<SparsePoly> coords;
    for (unsigned t = 0; t < r; ++t) coords.push_back(SparsePoly::variable(names[j][t], base()));
    subs.push_back(ring.element(coords));
  }

  // Evaluate phi0 term by term inside the quotient ring.
  Elem acc = ring.zero();
  std::vector<std::map<unsigned, Elem>> pow_memo(k);
  for (const auto& [e, c] : phi0.poly().terms()) {
    // coefficient lives in the extension: its coordinates become constants
    std::vector<SparsePoly> ccoords;
    for (const auto& cc : c.coords()) ccoords.push_back(SparsePoly::constant(cc));
    Elem term = ring.element(ccoords);
    for (std::size_t pos = 0; pos < e.size(); ++pos) {
      if (e[pos] == 0) continue;
      const std::string& vname = phi0.poly().vars()[pos];
      auto idx_it = std::find(phi0.vars().begin(), phi0.vars().end(), vname);
      if (idx_it == phi0.vars().end()) {
        // parameter: stays a scalar of the base polynomial ring
        term = ring.scale(term, SparsePoly::variable(vname, base()).pow(e[pos]));
        continue;
      }
      unsigned j = static_cast<unsigned>(idx_it - phi0.vars().begin());
      auto& memo = pow_memo[j];
      auto it = memo.find(e[pos]);
      if (it == memo.end()) it = memo.emplace(e[pos], ring.pow(subs[j], e[pos])).first;
      term = ring.mul(term, it->second);
    }
    acc = ring.add(acc, term);
  }

  SparsePoly transferred = ring.norm(acc);
  return forms::Form(phi0.degree() * r, ordered, std::move(transferred), phi0.params());
}

forms::AlgebraStructure SimpleExt::multiplication_algebra() const {
  const unsigned d = degree();
  std::vector<std::vector<std::vector<Value>>> c(
      d, std::vector<std::vector<Value>>(d, std::vector<Value>(d, base()->zero())));
  std::vector<Value> basis;
  Value power = ext_->one();
  Value gen = generator();
  for (unsigned i = 0; i < d; ++i) {
    basis.push_back(power);
    power = power * gen;
  }
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      Value prod = basis[i] * basis[j];
      for (unsigned k = 0; k < d; ++k) c[i][j][k] = prod.coords()[k];
    }
  std::vector<Value> unit(d, base()->zero());
  unit[0] = base()->one();
  return forms::AlgebraStructure::from_constants(c, base(), unit);
}

}  // namespace normforms::extfields
