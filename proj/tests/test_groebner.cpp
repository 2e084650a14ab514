#include <doctest.h>

#include <algorithm>
#include <set>

#include "nodal/parse.hpp"
#include "nodal/zero_dim.hpp"

using namespace nodal;

namespace {

template <class F>
std::vector<Polynomial<F>> polys(const RingPtr<F>& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial<F>> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

template <class F>
Ideal<F> ideal(const RingPtr<F>& ring, std::initializer_list<const char*> texts) {
  return Ideal<F>(ring, polys(ring, texts));
}

template <class F>
bool same_ideal(const Ideal<F>& a, const Ideal<F>& b) {
  return groebner_basis(a, MonomialOrder::grevlex()) == groebner_basis(b, MonomialOrder::grevlex());
}

// Ideal of a finite set of affine points, as an intersection of maximal ideals.
template <class F>
Ideal<F> points_ideal(const RingPtr<F>& ring, const std::vector<std::vector<typename F::Element>>& pts) {
  std::optional<Ideal<F>> acc;
  for (const auto& p : pts) {
    std::vector<Polynomial<F>> gens;
    for (int v = 0; v < ring->n_vars(); ++v) {
      gens.push_back(Polynomial<F>::variable(ring, v) - Polynomial<F>::constant(ring, p[static_cast<std::size_t>(v)]));
    }
    Ideal<F> m(ring, gens);
    acc = acc ? ideal_intersection(*acc, m) : m;
  }
  return *acc;
}

template <class F>
void check_reduced_basis(const Ideal<F>& source, const GroebnerBasis<F>& gb, Rng& rng) {
  const auto& el = gb.elements();
  for (const auto& g : el) CHECK(gb.ring()->field().is_one(g.leading_coefficient()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j)
      if (i != j) CHECK(!el[i].leading_monomial().divides(el[j].leading_monomial()));
  for (const auto& g : source.generators()) CHECK(gb.normal_form(g).is_zero());
  if (el.size() < 2) return;
  for (int k = 0; k < 25; ++k) {
    const auto i = rng.below(el.size()), j = rng.below(el.size());
    if (i == j) continue;
    CHECK(gb.normal_form(s_polynomial(el[i], el[j])).is_zero());
  }
}

}  // namespace

TEST_CASE("lex basis of a triangular system") {
  auto ring = make_ring(RationalField(), {"y", "x"}, MonomialOrder::lex());
  auto gb = groebner_basis(ideal(ring, {"x - 1", "y - x"}), MonomialOrder::lex());
  auto expected = polys(ring, {"x - 1", "y - 1"});
  CHECK(gb.elements() == expected);
}

TEST_CASE("monomial ideal is its own reduced basis") {
  auto ring = make_ring(PrimeField(101), {"x", "y"});
  auto gb = groebner_basis(ideal(ring, {"x^2", "x*y", "y^2"}));
  CHECK(gb.elements().size() == 3);
  std::set<std::string> got;
  for (const auto& g : gb.elements()) got.insert(to_string(g));
  CHECK(got == std::set<std::string>{"x^2", "x*y", "y^2"});
}

TEST_CASE("circle meets diagonal over Q") {
  auto ring = make_ring(RationalField(), {"x", "y"}, MonomialOrder::lex());
  auto gb = groebner_basis(ideal(ring, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == parse_polynomial("2*y^2 - 1", ring).monic());
  CHECK(gb.elements()[1] == parse_polynomial("x - y", ring));
}

TEST_CASE("normal forms") {
  Rng rng(1);
  auto ring = make_ring(PrimeField(10007), indexed_names("x", 3));
  auto I = ideal(ring, {"x0^2 - x1*x2", "x1^2 - x0*x2", "x2^3 - x0*x1*x2"});
  auto gb = groebner_basis(I);
  auto f = parse_polynomial("(x0 + x2) * (x0^2 - x1*x2) + x1 * (x1^2 - x0*x2)", ring);
  CHECK(gb.normal_form(f).is_zero());
  CHECK(gb.normal_form(Polynomial<PrimeField>::from_int(ring, 1)) == Polynomial<PrimeField>::from_int(ring, 1));
  for (int i = 0; i < 20; ++i) {
    Polynomial<PrimeField> a(ring), b(ring);
    for (const auto& m : monomial_basis(3, 3)) {
      a += Polynomial<PrimeField>::term(ring, m, ring->field().random(rng));
      b += Polynomial<PrimeField>::term(ring, m, ring->field().random(rng));
    }
    CHECK(gb.normal_form(a + b) == gb.normal_form(a) + gb.normal_form(b));
    auto r = gb.normal_form(a);
    CHECK(gb.normal_form(a - r).is_zero());
    for (const auto& t : r.terms())
      for (const auto& lm : gb.leading_monomials()) CHECK(!lm.divides(t.mono));
  }
  auto other = make_ring(PrimeField(10007), indexed_names("y", 3));
  try {
    gb.normal_form(Polynomial<PrimeField>::variable(other, 0));
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}

TEST_CASE("basis invariants and uniqueness under generator shuffles") {
  Rng rng(2);
  auto ring = make_ring(PrimeField(10007), indexed_names("x", 4));
  auto gens = polys(ring, {"x0^2 + x1*x2 - x3^2", "x1^2 - 3*x0*x3 + x2^2", "x0*x1*x2 - x3^3 + x0^2*x1",
                           "x2^3 + x0*x1*x3"});
  Ideal<PrimeField> I(ring, gens);
  auto gb = groebner_basis(I);
  check_reduced_basis(I, gb, rng);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(gens.begin(), gens.end(), std::mt19937_64(rng.next()));
    auto scaled = gens;
    for (auto& g : scaled) g = g.scale(ring->field().random_nonzero(rng));
    CHECK(groebner_basis(Ideal<PrimeField>(ring, scaled)) == gb);
  }
  auto lex = groebner_basis(I, MonomialOrder::lex());
  check_reduced_basis(I, lex, rng);
}

TEST_CASE("homogeneous flag is checked") {
  auto ring = make_ring(PrimeField(7), indexed_names("x", 2));
  CHECK_THROWS_AS(Ideal<PrimeField>(ring, polys(ring, {"x0^2 + x1"}), true), Error);
  CHECK(Ideal<PrimeField>(ring, polys(ring, {"x0^2 + x1^2"}), true).is_homogeneous());
}

TEST_CASE("capacity limits") {
  auto ring = make_ring(PrimeField(10007), indexed_names("x", 4));
  auto I = ideal(ring, {"x0^3 + x1^3 + x2^3 + x3^3", "x0*x1*x2 + x3^3", "x0^2*x1 + x2^2*x3 + x1^3"});
  GbOptions tiny;
  tiny.max_elements = 4;
  try {
    groebner_basis(I, tiny);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapacityExceeded);
  }
  GbOptions low_degree;
  low_degree.max_degree = 4;
  CHECK_THROWS_AS(groebner_basis(I, low_degree), Error);
}

TEST_CASE("truncated bases agree with the full basis in low degrees") {
  auto ring = make_ring(PrimeField(10007), indexed_names("x", 4));
  auto I = ideal(ring, {"x0^2 + x1*x2 - x3^2", "x1^2 - 3*x0*x3 + x2^2", "x0*x1*x2 - x3^3 + x0^2*x1"});
  auto full = groebner_basis(I);
  GbOptions opts;
  opts.truncate_degree = 4;
  auto part = groebner_basis(I, opts);
  CHECK(part.truncated());
  std::vector<Polynomial<PrimeField>> low;
  for (const auto& g : full.elements())
    if (g.degree() <= 4) low.push_back(g);
  CHECK(part.elements() == low);
}

TEST_CASE("elimination") {
  auto ring = make_ring(RationalField(), {"x", "y"});
  auto e1 = elimination_ideal(ideal(ring, {"x - y", "y^2 - 2"}), {1});
  CHECK(same_ideal(e1, ideal(ring, {"y^2 - 2"})));
  auto e2 = elimination_ideal(ideal(ring, {"x^2", "y"}), {0});
  CHECK(same_ideal(e2, ideal(ring, {"x^2"})));

  // Three points with distinct first coordinates: the eliminant in x has degree 3.
  auto pring = make_ring(PrimeField(10007), {"x", "y", "z"});
  auto I = points_ideal<PrimeField>(pring, {{1, 5, 7}, {2, 11, 3}, {9, 4, 4}});
  auto e3 = elimination_ideal(I, {0});
  REQUIRE(e3.generators().size() == 1);
  CHECK(e3.generators()[0].degree() == 3);
  CHECK(quotient_dimension(I) == 3);
}

TEST_CASE("saturation") {
  auto ring = make_ring(PrimeField(10007), {"x", "y"});
  auto sat = saturation(ideal(ring, {"x^2*y", "x*y^2"}), ideal(ring, {"x", "y"}));
  CHECK(same_ideal(sat, ideal(ring, {"x*y"})));
  CHECK(same_ideal(saturation(sat, ideal(ring, {"x", "y"})), sat));

  auto ring3 = make_ring(PrimeField(10007), indexed_names("x", 3));
  auto I = ideal(ring3, {"x0^2*x1 - x2^3", "x0*x1*x2"});
  auto m = ideal(ring3, {"x0", "x1", "x2"});
  auto s = saturation(I, m);
  auto gb = groebner_basis(s);
  for (const auto& g : I.generators()) CHECK(gb.contains(g));
}

TEST_CASE("intersection") {
  auto ring = make_ring(PrimeField(10007), {"x", "y"});
  CHECK(same_ideal(ideal_intersection(ideal(ring, {"x"}), ideal(ring, {"y"})), ideal(ring, {"x*y"})));
  auto I = ideal(ring, {"x^2 - y", "x*y^2 + 1"});
  CHECK(same_ideal(ideal_intersection(I, Ideal<PrimeField>::unit(ring)), I));

  auto ring4 = make_ring(PrimeField(10007), indexed_names("x", 4));
  auto A = ideal(ring4, {"x0^2 - x1*x2", "x3^2 + x0*x1"});
  auto B = ideal(ring4, {"x1^2 - x0*x3", "x2*x3 - x0^2", "x0*x1*x2"});
  auto C = ideal_intersection(A, B);
  auto ga = groebner_basis(A), gbb = groebner_basis(B), gc = groebner_basis(C);
  for (const auto& g : C.generators()) {
    CHECK(ga.contains(g));
    CHECK(gbb.contains(g));
  }
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) CHECK(gc.contains(a * b));
}

TEST_CASE("quotient dimension") {
  auto ring = make_ring(PrimeField(10007), {"x", "y"});
  CHECK(quotient_dimension(ideal(ring, {"x^2", "y^3"})) == 6);
  auto planar = points_ideal<PrimeField>(ring, {{1, 2}, {3, 2}, {5, 9}});
  CHECK(quotient_dimension(planar) == 3);
  try {
    quotient_dimension(ideal(ring, {"x*y"}));
    FAIL("expected NotZeroDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotZeroDimensional);
  }
}

TEST_CASE("quotient dimension counts constructed point sets") {
  Rng rng(3);
  auto ring = make_ring(PrimeField(10007), indexed_names("x", 3));
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::vector<std::uint64_t>> pts;
    std::set<std::vector<std::uint64_t>> seen;
    while (pts.size() < n) {
      std::vector<std::uint64_t> p{rng.below(10007), rng.below(10007), rng.below(10007)};
      if (seen.insert(p).second) pts.push_back(p);
    }
    auto I = points_ideal<PrimeField>(ring, pts);
    CHECK(quotient_dimension(I) == n);
    auto sol = solve_zero_dimensional(I, rng);
    CHECK(sol.point_count() == n);
  }
}

TEST_CASE("solving over a prime field") {
  Rng rng(4);
  auto ring = make_ring(PrimeField(7), {"x", "y"});
  auto sol = solve_zero_dimensional(ideal(ring, {"x^2 - 1", "y - x"}), rng);
  CHECK(sol.quotient_dim == 2);
  REQUIRE(sol.orbits.size() == 2);
  std::set<std::vector<std::uint64_t>> pts;
  for (const auto& o : sol.orbits) {
    CHECK(o.size() == 1);
    pts.insert({o.coords[0][0], o.coords[1][0]});
  }
  CHECK(pts == std::set<std::vector<std::uint64_t>>{{1, 1}, {6, 6}});

  auto conj = solve_zero_dimensional(ideal(ring, {"x^2 + 1", "y"}), rng);
  REQUIRE(conj.orbits.size() == 1);
  const auto& o = conj.orbits[0];
  CHECK(o.size() == 2);
  CHECK(conj.point_count() == 2);
  const auto& k = o.field;
  CHECK(k.is_zero(k.add(k.mul(o.coords[0], o.coords[0]), k.one())));
  CHECK(k.is_zero(o.coords[1]));
  // The conjugate point is a root too, and differs from the representative.
  auto frob = k.frobenius(o.coords[0]);
  CHECK(frob != o.coords[0]);
  CHECK(k.is_zero(k.add(k.mul(frob, frob), k.one())));
}

TEST_CASE("solving over Q with rational points") {
  Rng rng(5);
  auto ring = make_ring(RationalField(), {"x", "y"});
  auto I = points_ideal<RationalField>(ring, {{mpq_class(1, 2), mpq_class(3)}, {mpq_class(-4), mpq_class(2, 7)}});
  auto sol = solve_zero_dimensional(I, rng);
  REQUIRE(sol.points_available);
  REQUIRE(sol.orbits.size() == 2);
  std::set<std::pair<mpq_class, mpq_class>> pts;
  for (const auto& o : sol.orbits) pts.insert({o.coords[0], o.coords[1]});
  CHECK(pts == std::set<std::pair<mpq_class, mpq_class>>{{mpq_class(1, 2), mpq_class(3)}, {mpq_class(-4), mpq_class(2, 7)}});
  auto irr = solve_zero_dimensional(ideal(ring, {"x^2 - 2", "y - 1"}), rng);
  CHECK(irr.quotient_dim == 2);
  CHECK(!irr.points_available);
}

TEST_CASE("non-radical ideals are rejected") {
  Rng rng(6);
  auto ring = make_ring(PrimeField(10007), {"x", "y"});
  try {
    solve_zero_dimensional(ideal(ring, {"x^2", "y - 3"}), rng);
    FAIL("expected NotRadical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRadical);
  }
}
