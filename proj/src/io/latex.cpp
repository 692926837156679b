#include "normforms/io/latex.hpp"

#include <cctype>
#include <sstream>

#include "normforms/extfields/quad_identities.hpp"

namespace normforms::io {

using exactalg::FieldDesc;
using exactalg::Rat;
using exactalg::SparsePoly;
using exactalg::Value;

namespace {

std::string latex_var(const std::string& name) {
  // split a trailing digit run into a subscript
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == name.size() || cut == 0) return name;
  return name.substr(0, cut) + "_{" + name.substr(cut) + "}";
}

std::string latex_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  std::string num = numerator(r).str();
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num = num.substr(1);
  return std::string(neg ? "-" : "") + "\\tfrac{" + num + "}{" + denominator(r).str() + "}";
}

}  // namespace

std::string latex_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rational = p.field()->kind() == FieldDesc::Kind::Rationals;
  for (const auto& [e, c] : p.terms()) {
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
    bool any_var = false;
    for (auto x : e) any_var = any_var || x > 0;
    if (!any_var || !coeff.is_one()) os << (rational ? latex_rat(coeff.rat()) : coeff.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << " " << latex_var(p.vars()[i]);
      if (e[i] > 1) os << "^{" << e[i] << "}";
    }
    first = false;
  }
  return os.str();
}

std::string latex_report(const VerifyReport& r) {
  std::ostringstream os;
  os << "% " << r.identity << " (" << r.mode << ")\n";
  os << "\\paragraph{" << r.identity << "} " << r.statement << ".\\\\\n";
  os << "Outcome: \\textbf{" << (r.pass ? "pass" : "fail") << "}";
  if (!r.failure_bound.empty()) os << ", failure bound $" << r.failure_bound << "$";
  os << ".\n";
  if (r.identity == "thm2" || r.identity == "thm3") {
    extfields::QuadIdentitySpec spec;
    spec.d = static_cast<unsigned>(std::stoul(r.parameters.at("d")));
    spec.shifted = r.identity == "thm3";
    spec.specialize_b_zero = r.parameters.count("b") && r.parameters.at("b") == "0";
    auto vec = extfields::quad_identity_vector_polys(spec);
    os << "\\begin{align*}\n";
    for (std::size_t i = 0; i < vec.size(); ++i)
      os << "B_{" << i + 1 << "} &= " << latex_poly(vec[i]) << "\\\\\n";
    os << "\\end{align*}\n";
    os << "with $N_{K/F}(\\varphi_K(z)) = \\varphi(B_1,\\dots,B_" << vec.size() << ")$.\n";
  }
  if (!r.witness.empty() && !(r.identity == "thm2" || r.identity == "thm3")) {
    os << "\\begin{verbatim}\n" << r.witness.dump(2) << "\n\\end{verbatim}\n";
  }
  return os.str();
}

}  // namespace normforms::io
