#include "normforms/exactalg/sparsepoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace normforms::exactalg {

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::vector<std::string> canonical_vars(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), natural_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Embeds a coefficient into the target field when a canonical map exists.
Value lift_into(const Value& v, const FieldPtr& target) {
  if (same_field(v.field(), target)) return v;
  if (v.field()->kind() == FieldDesc::Kind::Rationals) return target->from_rat(v.rat());
  if (target->kind() == FieldDesc::Kind::Extension) return target->embed(lift_into(v, target->base()));
  throw FieldMismatchError("no embedding from " + v.field()->str() + " into " + target->str());
}

// True iff `small` maps canonically into `big` (same field, rationals into
// anything, or a base field of an extension tower).
bool field_extends(const FieldPtr& big, const FieldPtr& small) {
  if (same_field(big, small)) return true;
  if (small->kind() == FieldDesc::Kind::Rationals) return true;
  if (big->kind() == FieldDesc::Kind::Extension) return field_extends(big->base(), small);
  return false;
}

}  // namespace

SparsePoly::SparsePoly() : field_(FieldDesc::rationals()) {}

SparsePoly SparsePoly::zero(FieldPtr f, std::vector<std::string> vars) {
  SparsePoly p;
  p.field_ = std::move(f);
  p.vars_ = canonical_vars(std::move(vars));
  return p;
}

SparsePoly SparsePoly::constant(Value c, std::vector<std::string> vars) {
  SparsePoly p = zero(c.field(), std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name, FieldPtr f) {
  SparsePoly p = zero(std::move(f), {name});
  p.terms_.emplace(Exponents{1}, p.field_->one());
  return p;
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u) == 0;
}

Value SparsePoly::constant_value() const {
  if (terms_.empty()) return field_->zero();
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_.begin()->second;
}

unsigned SparsePoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;  // leading term has maximal degree
  return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned SparsePoly::degree_in(const std::set<std::string>& subset) const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (subset.count(vars_[i])) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

void SparsePoly::add_term(Exponents e, Value c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent tuple length mismatch");
  if (!same_field(c.field(), field_)) throw FieldMismatchError("coefficient in wrong field");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::zero_like() const { return zero(field_, vars_); }

SparsePoly SparsePoly::one_like() const { return constant(field_->one(), vars_); }

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = zero_like();
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::vector<std::string> SparsePoly::merged_vars(const std::vector<std::string>& a,
                                                 const std::vector<std::string>& b) {
  std::vector<std::string> m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m), natural_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

SparsePoly SparsePoly::remapped(const std::vector<std::string>& new_vars) const {
  if (new_vars == vars_) return *this;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i], natural_less);
    if (it == new_vars.end() || *it != vars_[i]) throw std::invalid_argument("variable lost in remap");
    pos[i] = static_cast<std::size_t>(it - new_vars.begin());
  }
  SparsePoly r = zero(field_, new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

void SparsePoly::align(SparsePoly& a, SparsePoly& b) {
  if (!same_field(a.field_, b.field_))
    throw FieldMismatchError("polynomials over different coefficient fields: " + a.field_->str() + " vs " +
                             b.field_->str());
  if (a.vars_ == b.vars_) return;
  auto m = merged_vars(a.vars_, b.vars_);
  a = a.remapped(m);
  b = b.remapped(m);
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x = a, y = b;
  SparsePoly::align(x, y);
  for (const auto& [e, c] : y.terms_) x.add_term(e, c);
  return x;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x = a, y = b;
  SparsePoly::align(x, y);
  SparsePoly r = x.zero_like();
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Value c = ca * cb;
      if (c.is_zero()) continue;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (!same_field(a.field_, b.field_)) return false;
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  SparsePoly x = a, y = b;
  SparsePoly::align(x, y);
  return x.terms_ == y.terms_;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly acc = one_like();
  SparsePoly b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    if (e >>= 1) b = b * b;
  }
  return acc;
}

Value SparsePoly::eval(const std::map<std::string, Value>& point) const {
  FieldPtr target = field_;
  for (const auto& [name, v] : point) {
    (void)name;
    if (field_extends(v.field(), target))
      target = v.field();
    else if (!field_extends(target, v.field()))
      throw FieldMismatchError("evaluation point not in a compatible field");
  }
  std::vector<std::vector<Value>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw std::invalid_argument("evaluation point missing variable " + vars_[i]);
    powers[i].push_back(target->one());
    powers[i].push_back(lift_into(it->second, target));
  }
  Value acc = target->zero();
  for (const auto& [e, c] : terms_) {
    Value t = lift_into(c, target);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      if (e[i]) t = t * powers[i][e[i]];
    }
    acc = acc + t;
  }
  return acc;
}

std::uint64_t SparsePoly::eval_mod(const std::map<std::string, std::uint64_t>& point, std::uint64_t p) const {
  std::vector<std::vector<std::uint64_t>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw std::invalid_argument("evaluation point missing variable " + vars_[i]);
    powers[i] = {1 % p, it->second % p};
  }
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t;
    if (field_->kind() == FieldDesc::Kind::Rationals) {
      BigInt num = numerator(c.rat()), den = denominator(c.rat());
      BigInt pp(p);
      BigInt nm = num % pp;
      if (nm < 0) nm += pp;
      BigInt dm = den % pp;
      if (dm == 0) throw DivisionByZeroError("coefficient denominator vanishes modulo p");
      t = mul_mod(nm.convert_to<std::uint64_t>(), inv_mod(dm.convert_to<std::uint64_t>(), p), p);
    } else if (field_->kind() == FieldDesc::Kind::Prime && field_->modulus() == p) {
      t = c.residue();
    } else {
      throw UnsupportedError("modular evaluation needs rational or matching prime-field coefficients");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(mul_mod(powers[i].back(), powers[i][1], p));
      if (e[i]) t = mul_mod(t, powers[i][e[i]], p);
    }
    acc += t;
    if (acc >= p) acc -= p;
  }
  return acc;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& subs) const {
  std::vector<const SparsePoly*> target(vars_.size(), nullptr);
  std::vector<SparsePoly> identity;
  identity.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = subs.find(vars_[i]);
    if (it != subs.end()) {
      target[i] = &it->second;
    } else {
      identity.push_back(variable(vars_[i], field_));
      target[i] = &identity.back();
    }
  }
  // identity vector must not reallocate after pointers are taken
  std::vector<std::map<unsigned, SparsePoly>> pow_memo(vars_.size());
  SparsePoly acc = SparsePoly::zero(field_);
  for (const auto& [e, c] : terms_) {
    SparsePoly term = constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& memo = pow_memo[i];
      auto it = memo.find(e[i]);
      if (it == memo.end()) it = memo.emplace(e[i], target[i]->pow(e[i])).first;
      term = term * it->second;
    }
    acc = acc + term;
  }
  return acc;
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return zero_like();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  SparsePoly r = zero_like();
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    r.add_term(std::move(ne), c * field_->from_int(e[idx]));
  }
  return r;
}

SparsePoly SparsePoly::rename_vars(const std::map<std::string, std::string>& renames) const {
  std::vector<std::string> new_names = vars_;
  for (auto& n : new_names) {
    auto it = renames.find(n);
    if (it != renames.end()) n = it->second;
  }
  std::vector<std::string> sorted = canonical_vars(new_names);
  if (sorted.size() != new_names.size()) throw std::invalid_argument("variable rename causes a collision");
  SparsePoly r = zero(field_, sorted);
  for (const auto& [e, c] : terms_) {
    Exponents ne(sorted.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto pos = std::lower_bound(sorted.begin(), sorted.end(), new_names[i], natural_less) - sorted.begin();
      ne[static_cast<std::size_t>(pos)] = e[i];
    }
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

SparsePoly SparsePoly::with_vars(const std::vector<std::string>& extra) const {
  return remapped(merged_vars(vars_, canonical_vars(extra)));
}

SparsePoly SparsePoly::extract(const std::map<std::string, std::uint32_t>& exact) const {
  std::vector<std::string> keep;
  std::vector<std::int32_t> want(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = exact.find(vars_[i]);
    if (it == exact.end())
      keep.push_back(vars_[i]);
    else
      want[i] = static_cast<std::int32_t>(it->second);
  }
  SparsePoly r = zero(field_, keep);
  for (const auto& [e, c] : terms_) {
    bool match = true;
    Exponents ne;
    ne.reserve(keep.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (want[i] >= 0) {
        if (e[i] != static_cast<std::uint32_t>(want[i])) {
          match = false;
          break;
        }
      } else {
        ne.push_back(e[i]);
      }
    }
    if (match) r.add_term(std::move(ne), c);
  }
  return r;
}

bool SparsePoly::is_homogeneous(unsigned d, const std::vector<std::string>& in_vars) const {
  std::set<std::string> subset(in_vars.begin(), in_vars.end());
  for (const auto& [e, c] : terms_) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (subset.count(vars_[i])) deg += e[i];
    if (deg != d) return false;
  }
  return true;
}

SparsePoly SparsePoly::exact_divide(const SparsePoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError("exact division by zero polynomial");
  SparsePoly rem = *this, div = divisor;
  align(rem, div);
  SparsePoly q = rem.zero_like();
  const auto& [lede, ledc] = *div.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.begin();
    Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lede[i]) throw std::invalid_argument("polynomial division is not exact");
      qe[i] = re[i] - lede[i];
    }
    Value qc = rc / ledc;
    SparsePoly t = rem.zero_like();
    t.add_term(qe, qc);
    q = q + t;
    rem = rem - t * div;
  }
  return q;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rational = field_->kind() == FieldDesc::Kind::Rationals;
  for (const auto& [e, c] : terms_) {
    Value coeff = c;
    if (first) {
      if (rational && coeff.rat() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      if (rational && coeff.rat() < 0) {
        os << " - ";
        coeff = -coeff;
      } else {
        os << " + ";
      }
    }
    bool any_var = std::accumulate(e.begin(), e.end(), 0u) > 0;
    bool unit = coeff.is_one();
    if (!any_var || !unit) os << coeff.str();
    bool need_star = !any_var || !unit;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

PolyRing::PolyRing(FieldPtr f, std::vector<std::string> vars) : field_(std::move(f)), vars_(std::move(vars)) {}

SparsePoly PolyRing::var(const std::string& name) const {
  if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
    throw std::invalid_argument("unknown ring variable " + name);
  return SparsePoly::variable(name, field_).with_vars(vars_);
}

SparsePoly PolyRing::c(const Rat& r) const { return SparsePoly::constant(field_->from_rat(r), vars_); }
SparsePoly PolyRing::c(long long n) const { return c(Rat(n)); }
SparsePoly PolyRing::c(const Value& v) const { return SparsePoly::constant(v, vars_); }
SparsePoly PolyRing::zero() const { return SparsePoly::zero(field_, vars_); }
SparsePoly PolyRing::one() const { return c(Rat(1)); }

SparsePoly operator*(const Value& c, const SparsePoly& p) { return SparsePoly::constant(c) * p; }
SparsePoly operator*(const Rat& c, const SparsePoly& p) {
  return SparsePoly::constant(p.field()->from_rat(c)) * p;
}

}  // namespace normforms::exactalg
