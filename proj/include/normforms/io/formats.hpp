// Textual file formats: field descriptors, exact scalar literals, form files
// (degree, variables, field, term list) and extension files (base descriptor
// plus monic minimal polynomial), with exact rational coefficients throughout.
#pragma once

#include <string>

#include "normforms/extfields/simple_ext.hpp"
#include "normforms/forms/form.hpp"

namespace normforms::io {

using exactalg::FieldPtr;
using exactalg::Value;

// rationals | prime(p) | ext(<base>; c0 c1 ... 1; generator)
std::string encode_field(const FieldPtr& f);
FieldPtr parse_field(const std::string& text);

// rationals: "p/q"; prime fields: the residue; extensions: "[c0,c1,...]".
std::string encode_value(const Value& v);
Value parse_value(const std::string& text, const FieldPtr& field);

std::string encode_form(const forms::Form& form);
forms::Form parse_form(const std::string& text);

std::string encode_extension(const extfields::SimpleExt& ext);
extfields::SimpleExt parse_extension(const std::string& text);

forms::Form load_form(const std::string& path);
extfields::SimpleExt load_extension(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace normforms::io
