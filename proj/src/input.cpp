#include "nodal/input.hpp"

#include <sstream>

namespace nodal {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  InputDocument doc;
  bool have_field = false, have_vars = false;
  std::size_t offset = 0;
  std::istringstream in(text);
  for (std::string raw; std::getline(in, raw); offset += raw.size() + 1) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError(offset, "expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "field") {
      if (have_field) throw SyntaxError(offset, "duplicate field line");
      try {
        doc.field = FieldSpec::parse(value);
      } catch (const Error& e) {
        throw SyntaxError(offset, e.what());
      }
      have_field = true;
    } else if (key == "vars") {
      if (have_vars) throw SyntaxError(offset, "duplicate vars line");
      doc.vars = split_words(value);
      if (doc.vars.empty()) throw SyntaxError(offset, "no variables");
      have_vars = true;
    } else if (key == "F") {
      if (value.empty()) throw SyntaxError(offset, "empty equation");
      doc.equations.push_back(value);
    } else if (key == "node") {
      if (value.size() < 2 || value.front() != '(' || value.back() != ')') {
        throw SyntaxError(offset, "node must be written (a0 : a1 : ...)");
      }
      std::vector<std::string> coords;
      std::istringstream parts(value.substr(1, value.size() - 2));
      for (std::string c; std::getline(parts, c, ':');) {
        c = trim(c);
        if (c.empty()) throw SyntaxError(offset, "empty node coordinate");
        coords.push_back(c);
      }
      doc.nodes.push_back(std::move(coords));
    } else {
      throw SyntaxError(offset, "unknown key '" + key + "'");
    }
  }
  if (!have_field) throw SyntaxError(offset, "missing field line");
  if (!have_vars) throw SyntaxError(offset, "missing vars line");
  if (doc.equations.empty()) throw SyntaxError(offset, "no equations");
  return doc;
}

std::string emit_input(const InputDocument& doc) {
  std::ostringstream out;
  out << "field: " << (doc.field.kind() == FieldSpec::Kind::Rationals
                           ? std::string("Q")
                           : "Fp " + std::to_string(doc.field.characteristic()))
      << "\n";
  out << "vars:";
  for (const auto& v : doc.vars) out << ' ' << v;
  out << "\n";
  for (const auto& e : doc.equations) out << "F: " << e << "\n";
  for (const auto& n : doc.nodes) {
    out << "node: (";
    for (std::size_t i = 0; i < n.size(); ++i) out << (i ? " : " : "") << n[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace nodal
