#include "normforms/io/formats.hpp"

#include <fstream>
#include <sstream>

namespace normforms::io {

using exactalg::Exponents;
using exactalg::FieldDesc;
using exactalg::Rat;
using exactalg::SparsePoly;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits on a separator at paren/bracket depth zero.
std::vector<std::string> split_depth0(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string encode_value(const Value& v) {
  switch (v.field()->kind()) {
    case FieldDesc::Kind::Rationals:
      return exactalg::rat_to_string(v.rat());
    case FieldDesc::Kind::Prime:
      return std::to_string(v.residue());
    case FieldDesc::Kind::Extension: {
      std::string out = "[";
      const auto& c = v.coords();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += encode_value(c[i]);
      }
      return out + "]";
    }
  }
  throw std::logic_error("unreachable");
}

Value parse_value(const std::string& text, const FieldPtr& field) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  switch (field->kind()) {
    case FieldDesc::Kind::Rationals:
      return Value::make_rational(exactalg::rat_from_string(s));
    case FieldDesc::Kind::Prime:
      return field->from_rat(exactalg::rat_from_string(s));
    case FieldDesc::Kind::Extension: {
      if (s.front() != '[') {
        // scalar shorthand: a base/rational literal embeds
        return field->from_rat(exactalg::rat_from_string(s));
      }
      if (s.back() != ']') throw ParseError("unterminated coordinate list: " + s);
      std::vector<Value> coords;
      for (const auto& part : split_depth0(s.substr(1, s.size() - 2), ','))
        coords.push_back(parse_value(part, field->base()));
      return Value::make_extension(std::move(coords), field);
    }
  }
  throw std::logic_error("unreachable");
}

std::string encode_field(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldDesc::Kind::Rationals:
      return "rationals";
    case FieldDesc::Kind::Prime:
      return "prime(" + std::to_string(f->modulus()) + ")";
    case FieldDesc::Kind::Extension: {
      std::string out = "ext(" + encode_field(f->base()) + "; ";
      const auto& m = f->minpoly();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += " ";
        out += encode_value(m[i]);
      }
      return out + "; " + f->generator() + ")";
    }
  }
  throw std::logic_error("unreachable");
}

FieldPtr parse_field(const std::string& text) {
  std::string s = trim(text);
  if (s == "rationals") return FieldDesc::rationals();
  if (s.rfind("prime(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(6, s.size() - 7);
    try {
      return FieldDesc::prime(std::stoull(trim(inner)));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad prime modulus: " + inner);
    }
  }
  if (s.rfind("ext(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(4, s.size() - 5);
    auto parts = split_depth0(inner, ';');
    if (parts.size() != 3) throw ParseError("extension descriptor needs base; minpoly; generator");
    FieldPtr base = parse_field(parts[0]);
    std::vector<Value> minpoly;
    for (const auto& tok : split_ws(trim(parts[1]))) minpoly.push_back(parse_value(tok, base));
    return FieldDesc::extension(base, std::move(minpoly), trim(parts[2]));
  }
  throw ParseError("unknown field descriptor: " + s);
}

std::string encode_form(const forms::Form& form) {
  std::ostringstream os;
  os << "normforms-form v1\n";
  os << "field " << encode_field(form.field()) << "\n";
  os << "degree " << form.degree() << "\n";
  os << "vars";
  for (const auto& v : form.vars()) os << " " << v;
  os << "\n";
  if (!form.params().empty()) {
    os << "params";
    for (const auto& p : form.params()) os << " " << p;
    os << "\n";
  }
  // exponents are emitted in declaration order: form variables then params
  std::vector<std::string> order = form.vars();
  order.insert(order.end(), form.params().begin(), form.params().end());
  const auto& pv = form.poly().vars();
  for (const auto& [e, c] : form.poly().terms()) {
    os << "term " << encode_value(c) << " :";
    for (const auto& name : order) {
      auto it = std::find(pv.begin(), pv.end(), name);
      std::uint32_t exp = it == pv.end() ? 0 : e[static_cast<std::size_t>(it - pv.begin())];
      os << " " << exp;
    }
    os << "\n";
  }
  return os.str();
}

forms::Form parse_form(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  FieldPtr field;
  unsigned degree = 0;
  std::vector<std::string> vars, params;
  std::vector<std::pair<Value, std::vector<std::uint32_t>>> terms;
  bool header = false;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "normforms-form v1") throw ParseError("expected 'normforms-form v1' header");
      header = true;
      continue;
    }
    if (line.rfind("field ", 0) == 0) {
      field = parse_field(line.substr(6));
    } else if (line.rfind("degree ", 0) == 0) {
      degree = static_cast<unsigned>(std::stoul(trim(line.substr(7))));
    } else if (line.rfind("vars", 0) == 0) {
      vars = split_ws(line.substr(4));
    } else if (line.rfind("params", 0) == 0) {
      params = split_ws(line.substr(6));
    } else if (line.rfind("term ", 0) == 0) {
      if (!field) throw ParseError("term before field declaration");
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("term needs 'coefficient : exponents'");
      Value c = parse_value(line.substr(5, colon - 5), field);
      std::vector<std::uint32_t> exps;
      for (const auto& tok : split_ws(line.substr(colon + 1)))
        exps.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      terms.emplace_back(std::move(c), std::move(exps));
    } else {
      throw ParseError("unrecognized form-file line: " + line);
    }
  }
  if (!header) throw ParseError("missing form header");
  if (!field) throw ParseError("missing field declaration");
  if (degree == 0) throw ParseError("missing or zero degree");
  if (vars.empty()) throw ParseError("missing variable list");

  std::vector<std::string> order = vars;
  order.insert(order.end(), params.begin(), params.end());
  SparsePoly poly = SparsePoly::zero(field, order);
  const auto& pv = poly.vars();
  for (auto& [c, exps] : terms) {
    if (exps.size() != order.size()) throw ParseError("exponent tuple length mismatch");
    Exponents e(pv.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto it = std::find(pv.begin(), pv.end(), order[i]);
      e[static_cast<std::size_t>(it - pv.begin())] = exps[i];
    }
    poly.add_term(std::move(e), c);
  }
  return forms::Form(degree, vars, std::move(poly), params);
}

std::string encode_extension(const extfields::SimpleExt& ext) {
  std::ostringstream os;
  os << "normforms-extension v1\n";
  os << "base " << encode_field(ext.base()) << "\n";
  os << "minpoly";
  for (const auto& c : ext.field()->minpoly()) os << " " << encode_value(c);
  os << "\n";
  os << "generator " << ext.field()->generator() << "\n";
  return os.str();
}

extfields::SimpleExt parse_extension(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  FieldPtr base;
  std::vector<Value> minpoly;
  std::string generator = "a";
  bool header = false;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "normforms-extension v1") throw ParseError("expected 'normforms-extension v1' header");
      header = true;
      continue;
    }
    if (line.rfind("base ", 0) == 0) {
      base = parse_field(line.substr(5));
    } else if (line.rfind("minpoly", 0) == 0) {
      if (!base) throw ParseError("minpoly before base declaration");
      for (const auto& tok : split_ws(line.substr(7))) minpoly.push_back(parse_value(tok, base));
    } else if (line.rfind("generator", 0) == 0) {
      generator = trim(line.substr(9));
    } else {
      throw ParseError("unrecognized extension-file line: " + line);
    }
  }
  if (!header) throw ParseError("missing extension header");
  if (!base) throw ParseError("missing base declaration");
  if (minpoly.empty()) throw ParseError("missing minimal polynomial");
  return extfields::SimpleExt(base, std::move(minpoly), generator);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

forms::Form load_form(const std::string& path) { return parse_form(read_file(path)); }

extfields::SimpleExt load_extension(const std::string& path) {
  return parse_extension(read_file(path));
}

}  // namespace normforms::io
