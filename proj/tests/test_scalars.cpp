#include <doctest.h>

#include "braidpbw/errors.hpp"
#include "braidpbw/qcomb.hpp"

#include <random>

using namespace braidpbw;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec Qq = FieldSpec::rational_functions();

Scalar P(const char* s, FieldSpec f = Qq) { return parse_scalar(s, f); }

Scalar random_scalar(std::mt19937_64& rng, FieldSpec f) {
  std::uniform_int_distribution<long> coef(-4, 4);
  if (f.kind != FieldKind::rational_functions) {
    long den = 0;
    while (den == 0) den = coef(rng);
    return Scalar::from_int(f, coef(rng)) / Scalar::from_int(f, den);
  }
  auto poly = [&] {
    Scalar s = Scalar::zero(f);
    for (long e = 0; e < 3; ++e) s += Scalar::from_int(f, coef(rng)) * Scalar::q_power(e);
    return s;
  };
  Scalar den = poly();
  while (den.is_zero()) den = poly();
  return poly() / den;
}

Scalar binomial(unsigned r, unsigned i) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), r, i);
  return Scalar::from_mpz(QQ, b);
}

} // namespace

TEST_CASE("canonical reduction in Q(q)") {
  CHECK(P("(q^2-1)/(q-1)") == P("q+1"));
  CHECK(P("q^3").inverse() == P("1/q^3"));
  CHECK(P("q^-3") == P("1/(q*q*q)"));
  CHECK(P("(2*q+2)/(4*q+4)") == P("1/2"));
  CHECK(P("(q^2-1)/(q-1)").to_string() == P("1+q").to_string());
}

TEST_CASE("prime field arithmetic") {
  auto f = FieldSpec::prime_field(5);
  CHECK(Scalar::from_int(f, 3) * Scalar::from_int(f, 4) == Scalar::from_int(f, 2));
  CHECK(parse_scalar("-1", f) == Scalar::from_int(f, 4));
  CHECK(parse_scalar("7", f).residue() == 2);
  CHECK(Scalar::from_int(f, 2).inverse() == Scalar::from_int(f, 3));
  CHECK_THROWS_AS(FieldSpec::prime_field(6), DomainError);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Scalar::zero(QQ).inverse(), ArithmeticError);
  CHECK_THROWS_AS((void)(Scalar::one(QQ) / Scalar::zero(QQ)), ArithmeticError);
  CHECK_THROWS_AS((void)(Scalar::one(QQ) + Scalar::one(Qq)), FieldMismatch);
  CHECK_THROWS_AS((void)(Scalar::one(QQ) == Scalar::one(FieldSpec::prime_field(3))), FieldMismatch);
  CHECK_THROWS_AS(parse_scalar("q", QQ), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", QQ), ParseError);
  try {
    parse_scalar("1 + * 2", QQ);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("literal grammar") {
  CHECK(P("-1/3", QQ) == Scalar::from_rational(QQ, mpq_class(-1, 3)));
  CHECK(P("q^-2") == Scalar::q_power(-2));
  CHECK(P("q^(-2)") == Scalar::q_power(-2));
  CHECK(P("(q^2-1)/q") == Scalar::q() - Scalar::q_power(-1));
  CHECK(P("(1 - q^2)/q^2") == Scalar::q_power(-2) - Scalar::one(Qq));
  CHECK(P("(q^6 - q^4 - q^2 + 1)/q^4") == P("(q^2-1)^2*(q^2+1)/q^4"));
  for (const char* s : {"q^-2", "(q^2-1)/q", "-1/3*q^5+7", "3/(q+2)"}) {
    Scalar x = P(s);
    CHECK(P(x.to_string().c_str()) == x);
  }
}

TEST_CASE("field names") {
  CHECK(FieldSpec::parse("Q") == QQ);
  CHECK(FieldSpec::parse("Q(q)") == Qq);
  CHECK(FieldSpec::parse("GF(7)") == FieldSpec::prime_field(7));
  CHECK(FieldSpec::parse("GF(7)").name() == "GF(7)");
  CHECK_THROWS(FieldSpec::parse("R"));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (FieldSpec f : {QQ, Qq, FieldSpec::prime_field(7)}) {
    for (int t = 0; t < 60; ++t) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Scalar a = random_scalar(rng, Qq);
    Scalar again = P(a.to_string().c_str());
    CHECK(again.to_string() == a.to_string());
    CHECK((a * Scalar::one(Qq)).to_string() == a.to_string());
  }
}

TEST_CASE("gauss_binomial") {
  Scalar q = Scalar::q();
  CHECK(gauss_binomial(5, 0, q) == Scalar::one(Qq));
  CHECK(gauss_binomial(4, 2, q) == P("1 + q + 2*q^2 + q^3 + q^4"));
  for (unsigned h = 1; h <= 6; ++h) {
    CHECK(gauss_binomial(h, h - 1, q) == q_integer(h, q));
    Scalar sum = Scalar::zero(Qq);
    for (unsigned j = 0; j < h; ++j) sum += q.pow(j);
    CHECK(q_integer(h, q) == sum);
  }
  CHECK_THROWS_AS(gauss_binomial(2, 3, q), DomainError);
  for (unsigned r = 0; r <= 8; ++r)
    for (unsigned i = 0; i <= r; ++i) CHECK(gauss_binomial(r, i, Scalar::one(QQ)) == binomial(r, i));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    Scalar g = random_scalar(rng, Qq);
    for (unsigned r = 0; r <= 8; ++r)
      for (unsigned i = 0; i <= r; ++i) CHECK(gauss_binomial(r, i, g) == gauss_binomial(r, r - i, g));
  }
}

TEST_CASE("unity_order") {
  CHECK(unity_order(Scalar::one(QQ)) == 1ul);
  CHECK(unity_order(Scalar::from_int(QQ, -1)) == 2ul);
  CHECK(unity_order(Scalar::from_int(Qq, -1)) == 2ul);
  CHECK_FALSE(unity_order(Scalar::q_power(3)).has_value());
  CHECK_FALSE(unity_order(Scalar::from_int(QQ, 2)).has_value());
  CHECK_THROWS_AS(unity_order(Scalar::zero(QQ)), DomainError);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    auto f = FieldSpec::prime_field(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      Scalar s = Scalar::from_int(f, static_cast<long>(a));
      auto t = unity_order(s);
      REQUIRE(t.has_value());
      CHECK(s.pow(static_cast<long>(*t)).is_one());
      for (unsigned long j = 1; j < *t; ++j) CHECK_FALSE(s.pow(static_cast<long>(j)).is_one());
    }
  }
  for (int e = 1; e <= 12; ++e) CHECK_FALSE(Scalar::q_power(3).pow(e).is_one());
}
