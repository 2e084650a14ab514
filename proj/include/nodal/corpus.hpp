#pragma once

#include <array>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "nodal/pipeline.hpp"
#include "nodal/parse.hpp"

namespace nodal {

struct ExpectedRecord {
  std::size_t mu;
  std::optional<std::size_t> dim_i;
  std::optional<std::size_t> dim_ij;
  std::size_t delta;
  long h11;
  long h12;
  long smooth_h12;
};

struct ExampleDescriptor {
  std::string name;
  std::optional<ExpectedRecord> expected;
  std::uint64_t recommended_prime = kDefaultPrime;
};

namespace corpus_detail {

template <class F>
void require_characteristic(const F& field, std::initializer_list<std::uint64_t> bad, const std::string& what) {
  for (auto p : bad) {
    if (field.characteristic() == p) {
      throw Error(ErrorKind::BadCharacteristic, what + " needs characteristic other than " + std::to_string(p));
    }
  }
}

template <class F>
CompleteIntersection<F> from_text(const F& field, const std::vector<std::string>& names,
                                  const std::vector<std::string>& eqs) {
  auto ring = make_ring(field, names);
  std::vector<Polynomial<F>> polys;
  for (const auto& e : eqs) polys.push_back(parse_polynomial(e, ring));
  return CompleteIntersection<F>(ring, std::move(polys));
}

}  // namespace corpus_detail

/// Four quadrics in P^7 with 96 nodes.
template <class F>
CompleteIntersection<F> build_vgn(const F& field) {
  corpus_detail::require_characteristic(field, {2}, "vgn");
  return corpus_detail::from_text(field, {"Y0", "Y1", "Y2", "Y3", "X0", "X1", "X2", "X3"},
                                  {"Y0^2 - X0^2 - X1^2 - X2^2 - X3^2", "Y1^2 - X0^2 + X1^2 - X2^2 + X3^2",
                                   "Y2^2 - X0^2 - X1^2 + X2^2 + X3^2", "Y3^2 - X0^2 + X1^2 + X2^2 - X3^2"});
}

/// Quadric and quartic in P^5 with 122 nodes.
template <class F>
CompleteIntersection<F> build_wvg(const F& field) {
  corpus_detail::require_characteristic(field, {2}, "wvg");
  return corpus_detail::from_text(field, indexed_names("x", 6),
                                  {"x0^2 + x1^2 + x2^2 - x3^2 - x4^2 - x5^2",
                                   "x0^4 + x1^4 + x2^4 - x3^4 - x4^4 - x5^4"});
}

/// Two cubics in P^5 with 108 nodes.
template <class F>
CompleteIntersection<F> build_schoen(const F& field) {
  corpus_detail::require_characteristic(field, {2, 3}, "schoen");
  return corpus_detail::from_text(field, indexed_names("x", 6),
                                  {"x0^3 + x1^3 + x2^3 - x3^3 - x4^3 - x5^3", "x0*x1*x2 - x3*x4*x5"});
}

template <class F>
struct ContainingSurface {
  CompleteIntersection<F> system;
  /// G_1, G_2, G_3 cutting out the contained surface.
  std::vector<Polynomial<F>> surface;
};

/// Random (d1, d2) complete intersection in P^5 containing the surface
/// V(G_1, G_2, G_3) with deg G_j = e_j: F_i = sum_j A_ij G_j where A_ij is
/// a random form of degree d_i - e_j, or zero when that is negative.
template <class F>
ContainingSurface<F> containing_surface_system(int d1, int d2, const std::array<int, 3>& e, const F& field, Rng& rng) {
  for (int x : {d1, d2, e[0], e[1], e[2]})
    if (x <= 0) throw Error(ErrorKind::DegreeInfeasible, "degrees must be positive");
  auto ring = make_ring(field, indexed_names("x", 6));
  std::vector<Polynomial<F>> g;
  for (int ej : e) g.push_back(random_form(ring, ej, rng));
  std::vector<Polynomial<F>> eqs;
  for (int di : {d1, d2}) {
    Polynomial<F> f(ring);
    for (std::size_t j = 0; j < 3; ++j)
      if (di >= e[j]) f += random_form(ring, di - e[j], rng) * g[j];
    if (f.is_zero()) {
      throw Error(ErrorKind::DegreeInfeasible, "no generator of degree at most " + std::to_string(di));
    }
    eqs.push_back(std::move(f));
  }
  return {CompleteIntersection<F>(ring, std::move(eqs)), std::move(g)};
}

template <class F>
CompleteIntersection<F> build_containing_surface(int d1, int d2, const std::array<int, 3>& e, const F& field,
                                                 Rng& rng) {
  return containing_surface_system(d1, d2, e, field, rng).system;
}

/// Random hypersurface of the given degree in P^4 singular at each of the
/// given points: a random member of the forms whose value and gradient
/// vanish there.
template <class F>
CompleteIntersection<F> build_nodal_hypersurface(int degree, const std::vector<std::vector<typename F::Element>>& nodes,
                                                 const F& field, Rng& rng) {
  auto ring = make_ring(field, indexed_names("x", 5));
  const auto monos = monomial_basis(5, degree);
  std::vector<std::vector<typename F::Element>> conditions;
  for (const auto& p : nodes) {
    if (p.size() != 5) throw Error(ErrorKind::InvalidArgument, "nodes need 5 coordinates");
    std::vector<typename F::Element> value;
    for (const auto& m : monos) value.push_back(evaluate(Polynomial<F>::term(ring, m, field.one()), p));
    conditions.push_back(std::move(value));
    for (int v = 0; v < 5; ++v) {
      std::vector<typename F::Element> row;
      for (const auto& m : monos)
        row.push_back(evaluate(partial_derivative(Polynomial<F>::term(ring, m, field.one()), v), p));
      conditions.push_back(std::move(row));
    }
  }
  std::vector<std::vector<typename F::Element>> basis;
  if (conditions.empty()) {
    for (std::size_t i = 0; i < monos.size(); ++i) {
      std::vector<typename F::Element> e(monos.size(), field.zero());
      e[i] = field.one();
      basis.push_back(std::move(e));
    }
  } else {
    basis = kernel_basis(DenseMatrix<F>::from_rows(field, conditions));
  }
  if (basis.empty()) throw Error(ErrorKind::SystemInfeasible, "no form of degree " + std::to_string(degree) +
                                                                  " is singular at all prescribed points");
  std::vector<typename F::Element> coeffs(monos.size(), field.zero());
  for (const auto& b : basis) {
    const auto c = field.random(rng);
    for (std::size_t i = 0; i < monos.size(); ++i) coeffs[i] = field.add(coeffs[i], field.mul(c, b[i]));
  }
  std::vector<typename Polynomial<F>::Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i) terms.push_back({monos[i], coeffs[i]});
  Polynomial<F> f(ring, std::move(terms));
  if (f.is_zero()) throw Error(ErrorKind::SystemInfeasible, "sampled the zero form");
  for (const auto& p : nodes) {
    for (int v = 0; v < 5; ++v) {
      if (!field.is_zero(evaluate(partial_derivative(f, v), p))) {
        throw Error(ErrorKind::SystemInfeasible, "prescribed point is not singular");
      }
    }
  }
  return CompleteIntersection<F>(ring, {f});
}

inline std::optional<std::array<int, 5>> parse_containing_surface_name(const std::string& name) {
  static const std::regex pattern(R"(cs-(\d)-(\d)-(\d)(\d)(\d))");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return std::nullopt;
  std::array<int, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = std::stoi(m[i + 1].str());
  return out;
}

struct SurfaceRow {
  int d1, d2;
  std::array<int, 3> e;
  std::size_t mu;
  long h12;
};

/// Reference rows for a quartic and a quadric containing a surface.
inline const std::vector<SurfaceRow>& containing_surface_table() {
  static const std::vector<SurfaceRow> rows{
      {4, 2, {1, 1, 1}, 13, 77}, {4, 2, {2, 1, 1}, 18, 72}, {4, 2, {2, 2, 1}, 24, 66}, {4, 2, {2, 2, 2}, 32, 58},
      {4, 2, {3, 2, 1}, 18, 72}, {4, 2, {3, 2, 2}, 24, 66}, {4, 2, {3, 3, 2}, 18, 72},
  };
  return rows;
}

inline std::string containing_surface_name(const SurfaceRow& row) {
  return "cs-" + std::to_string(row.d1) + "-" + std::to_string(row.d2) + "-" + std::to_string(row.e[0]) +
         std::to_string(row.e[1]) + std::to_string(row.e[2]);
}

/// Descriptor for a named example; nullopt for unknown names.
inline std::optional<ExampleDescriptor> describe_example(const std::string& name) {
  if (name == "vgn") return ExampleDescriptor{name, ExpectedRecord{96, 144, 79, 31, 32, 0, 65}, kDefaultPrime};
  if (name == "wvg") return ExampleDescriptor{name, ExpectedRecord{122, 200, 111, 33, 34, 0, 89}, kDefaultPrime};
  if (name == "schoen") return ExampleDescriptor{name, ExpectedRecord{108, 219, 146, 35, 36, 0, 73}, kDefaultPrime};
  if (auto cs = parse_containing_surface_name(name)) {
    ExampleDescriptor desc{name, std::nullopt, kDefaultPrime};
    for (const auto& row : containing_surface_table()) {
      if (row.d1 == (*cs)[0] && row.d2 == (*cs)[1] && row.e == std::array<int, 3>{(*cs)[2], (*cs)[3], (*cs)[4]}) {
        desc.expected = ExpectedRecord{row.mu, std::nullopt, std::nullopt, 1, 2, row.h12, 89};
      }
    }
    return desc;
  }
  return std::nullopt;
}

/// Mismatches between an analysis and an expected record, one line each.
inline std::vector<std::string> compare_with_expected(const AnalysisReport& r, const ExpectedRecord& e) {
  std::vector<std::string> out;
  auto check = [&](const std::string& what, long got, long want) {
    if (got != want) out.push_back(what + ": computed " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  check("mu", static_cast<long>(r.mu), static_cast<long>(e.mu));
  check("defect", static_cast<long>(r.delta), static_cast<long>(e.delta));
  check("h11", r.h11.value_or(-1), e.h11);
  check("h12", r.h12.value_or(-1), e.h12);
  check("smooth h12", r.smooth_h12.value_or(-1), e.smooth_h12);
  if (e.dim_i && e.dim_ij && (r.dim_i != *e.dim_i || r.dim_ij != *e.dim_ij)) {
    std::string line = "expected dim I_k = " + std::to_string(*e.dim_i) + ", dim (I cap J)_k = " +
                       std::to_string(*e.dim_ij) + " not reproduced by the " + r.strategy + " strategy (computed " +
                       std::to_string(r.dim_i) + ", " + std::to_string(r.dim_ij) + ")";
    if (r.dim_s_kstar - r.dim_ij == *e.dim_i && r.dim_s_kstar - r.dim_i == *e.dim_ij) {
      line += "; the expected pair equals the codimensions of (I cap J)_k and I_k in S_k";
    }
    out.push_back(line);
  }
  return out;
}

/// The system of a named example; rng is used only by random families.
template <class F>
CompleteIntersection<F> build_example(const std::string& name, const F& field, Rng& rng) {
  if (name == "vgn") return build_vgn(field);
  if (name == "wvg") return build_wvg(field);
  if (name == "schoen") return build_schoen(field);
  if (auto cs = parse_containing_surface_name(name)) {
    return build_containing_surface((*cs)[0], (*cs)[1], {(*cs)[2], (*cs)[3], (*cs)[4]}, field, rng);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown example '" + name + "'");
}

}  // namespace nodal
