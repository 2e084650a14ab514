#include <doctest.h>

#include <memory>

#include "nodal/field.hpp"
#include "nodal/upoly.hpp"

using namespace nodal;

TEST_CASE("rational addition is exact") {
  RationalField q;
  CHECK(q.add(mpq_class(1, 2), mpq_class(1, 3)) == mpq_class(5, 6));
}

TEST_CASE("prime field multiplication") {
  PrimeField f7(7);
  CHECK(f7.mul(3, 5) == 1);
}

TEST_CASE("division in F_9 with modulus x^2+1") {
  ExtensionField f9(PrimeField(3), {1, 0, 1});
  auto x = f9.generator();
  auto q = f9.div(f9.one(), x);
  CHECK(q == ExtensionField::Element{0, 2});
  CHECK(f9.is_one(f9.mul(q, x)));
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(PrimeField(10), Error);
  CHECK_THROWS_AS(ExtensionField(PrimeField(5), {1, 0, 1}), Error);  // x^2+1 = (x-2)(x-3) mod 5
  PrimeField f7(7);
  try {
    f7.inv(0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  RationalField q;
  CHECK_THROWS_AS(q.inv(mpq_class(0)), Error);
}

TEST_CASE("random elements are reproducible") {
  PrimeField f7(7);
  Rng a(42), b(42);
  for (int i = 0; i < 32; ++i) {
    auto x = f7.random(a);
    CHECK(x < 7);
    CHECK(x == f7.random(b));
  }
}

TEST_CASE("different seeds give different streams") {
  PrimeField f(kDefaultPrime);
  Rng s1(1), s2(2);
  std::vector<std::uint64_t> d1, d2;
  for (int i = 0; i < 16; ++i) {
    d1.push_back(f.random(s1));
    d2.push_back(f.random(s2));
  }
  // Frozen from a reference run of the generator.
  CHECK(d1 == std::vector<std::uint64_t>{5776, 4717, 8705, 2567, 3037, 3, 7404, 4377,
                                                  6175, 8743, 4403, 5485, 822, 5312, 6320, 4686});
  CHECK(d2 == std::vector<std::uint64_t>{4268, 9287, 3914, 6470, 5541, 2638, 1534, 7846,
                                                  4718, 4827, 5666, 3823, 1244, 3535, 9606, 2440});
  CHECK(d1 != d2);
}

TEST_CASE("rational random draws stay in the configured range") {
  RationalField q(3);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto x = q.random(rng);
    CHECK(x >= -3);
    CHECK(x <= 3);
    CHECK(x.get_den() == 1);
  }
}

template <class F>
void check_field_axioms(const F& f, Rng& rng) {
  for (int i = 0; i < 100; ++i) {
    auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    CHECK(f.equal(f.add(a, b), f.add(b, a)));
    CHECK(f.equal(f.mul(a, b), f.mul(b, a)));
    CHECK(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    CHECK(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    CHECK(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    CHECK(f.is_zero(f.add(a, f.neg(a))));
    CHECK(f.equal(f.sub(a, b), f.add(a, f.neg(b))));
    if (!f.is_zero(a)) {
      CHECK(f.is_one(f.mul(a, f.inv(a))));
      CHECK(f.equal(f.div(f.mul(a, b), a), b));
    }
    CHECK(f.equal(f.canonical(f.canonical(a)), f.canonical(a)));
  }
}

TEST_CASE("field axioms hold in every supported field") {
  Rng rng(7);
  check_field_axioms(PrimeField(kDefaultPrime), rng);
  check_field_axioms(PrimeField(2), rng);
  check_field_axioms(PrimeField(9223372036854775783ULL), rng);
  check_field_axioms(RationalField(), rng);
  check_field_axioms(ExtensionField::from_seed(PrimeField(7), 3, rng), rng);
  check_field_axioms(ExtensionField::from_seed(PrimeField(kDefaultPrime), 5, rng), rng);
}

TEST_CASE("rational arithmetic is exact at 4096 bits") {
  mpz_class big = 1;
  big <<= 4096;
  mpq_class a(big + 1, big - 1), b(big - 3, big + 7);
  RationalField q;
  auto s = q.add(a, b);
  CHECK(q.sub(s, b) == a);
  auto p = q.mul(a, b);
  CHECK(q.div(p, b) == a);
  CHECK(mpz_sizeinbase(p.get_num().get_mpz_t(), 2) > 8000);
  auto c = q.canonical(mpq_class(big * 6, big * 4));
  CHECK(c == mpq_class(3, 2));
  CHECK(c.get_den() > 0);
}

TEST_CASE("primality checks") {
  CHECK(is_prime(kDefaultPrime));
  CHECK(is_prime(7919));
  CHECK(!is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(9223372036854775783ULL));
  CHECK(!is_prime(1));
}

TEST_CASE("field specs and scalars") {
  auto fp = std::make_shared<const FieldSpec>(FieldSpec::parse("Fp 7"));
  auto q = std::make_shared<const FieldSpec>(FieldSpec::parse("Q"));
  CHECK(fp->kind() == FieldSpec::Kind::Prime);
  CHECK(q->kind() == FieldSpec::Kind::Rationals);
  CHECK_THROWS_AS(FieldSpec::parse("Fp 8"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
  auto three = Scalar::from_int(fp, 3), five = Scalar::from_int(fp, 5);
  CHECK((three * five) == Scalar::from_int(fp, 1));
  CHECK((three / five * five) == three);
  try {
    (void)(three + Scalar::from_int(q, 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  CHECK_THROWS_AS(Scalar::from_int(q, 0).inverse(), Error);
  CHECK((Scalar::from_int(q, 1) / Scalar::from_int(q, 3)).to_string() == "1/3");
}

TEST_CASE("univariate factorization over F_p") {
  PrimeField f(kDefaultPrime);
  Rng rng(3);
  // (x-1)(x-2) times random irreducible quadratic and cubic factors.
  upoly::Coeffs<PrimeField> a{f.neg(1), 1}, b{f.neg(2), 1};
  auto quad = ExtensionField::from_seed(f, 2, rng).modulus();
  auto cub = ExtensionField::from_seed(f, 3, rng).modulus();
  auto prod = upoly::mul(f, upoly::mul(f, a, b), upoly::mul(f, quad, cub));
  CHECK(upoly::is_squarefree(f, prod));
  auto factors = upoly::factor_squarefree(f, prod, rng);
  REQUIRE(factors.size() == 4);
  CHECK(upoly::degree<PrimeField>(factors[0]) == 1);
  CHECK(upoly::degree<PrimeField>(factors[1]) == 1);
  CHECK(factors[2] == quad);
  CHECK(factors[3] == cub);
  CHECK(!upoly::is_squarefree(f, upoly::mul(f, a, a)));
}
