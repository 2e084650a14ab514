#pragma once

// Line-oriented system description:
//   field: Fp 10007        (or  field: Q)
//   vars: x0 x1 x2 x3 x4
//   F: x0^5 + ...          (one line per equation)
//   node: (1 : 0 : 0 : 0 : 0)
// with '#' starting a comment.

#include <string>
#include <vector>

#include "nodal/field.hpp"
#include "nodal/nodal_locus.hpp"
#include "nodal/parse.hpp"

namespace nodal {

struct InputDocument {
  FieldSpec field = FieldSpec::prime(kDefaultPrime);
  std::vector<std::string> vars;
  std::vector<std::string> equations;
  std::vector<std::vector<std::string>> nodes;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws SyntaxError on malformed documents.
InputDocument parse_input(const std::string& text);

std::string emit_input(const InputDocument& doc);

template <class F>
InputDocument document_of(const CompleteIntersection<F>& ci) {
  InputDocument doc{FieldSpec(ci.field()), ci.ring()->names(), {}, {}};
  for (const auto& f : ci.equations()) doc.equations.push_back(to_string(f));
  return doc;
}

template <class F>
CompleteIntersection<F> system_of(const InputDocument& doc, const F& field) {
  auto ring = make_ring(field, doc.vars);
  std::vector<Polynomial<F>> eqs;
  for (const auto& e : doc.equations) eqs.push_back(parse_polynomial(e, ring));
  return CompleteIntersection<F>(ring, std::move(eqs));
}

/// Declared nodes as points; each must satisfy every equation.
template <class F>
std::vector<std::vector<typename F::Element>> nodes_of(const InputDocument& doc, const CompleteIntersection<F>& ci) {
  std::vector<std::vector<typename F::Element>> out;
  for (const auto& coords : doc.nodes) {
    if (coords.size() != doc.vars.size()) {
      throw Error(ErrorKind::InvalidArgument, "node has " + std::to_string(coords.size()) + " coordinates, expected " +
                                                  std::to_string(doc.vars.size()));
    }
    std::vector<typename F::Element> p;
    for (const auto& c : coords) {
      const auto value = parse_polynomial(c, ci.ring());
      if (value.degree() > 0) throw Error(ErrorKind::InvalidArgument, "node coordinate '" + c + "' is not a constant");
      p.push_back(value.is_zero() ? ci.field().zero() : value.leading_coefficient());
    }
    for (const auto& f : ci.equations()) {
      if (!ci.field().is_zero(evaluate(f, p))) {
        throw Error(ErrorKind::InvalidArgument, "declared node does not lie on " + to_string(f));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace nodal
