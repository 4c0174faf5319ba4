#include <doctest.h>

#include "braidpbw/errors.hpp"
#include "braidpbw/freealg.hpp"
#include "braidpbw/qcomb.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

#include <map>
#include <tuple>

using namespace braidpbw;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec Qq = FieldSpec::rational_functions();

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

void add(Triple& t, const Word& a, const Word& b, const Word& c, const Scalar& s) {
  auto [it, fresh] = t.try_emplace({a, b, c}, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

Triple delta_left(const Braiding& c, const TensorSquareElement& d) {
  Triple out;
  for (const auto& [key, s] : d.terms()) {
    auto dl = coproduct(c, FreeElement::monomial(c.alphabet(), c.field(), key.first));
    for (const auto& [k2, s2] : dl.terms()) add(out, k2.first, k2.second, key.second, s * s2);
  }
  return out;
}

Triple delta_right(const Braiding& c, const TensorSquareElement& d) {
  Triple out;
  for (const auto& [key, s] : d.terms()) {
    auto dr = coproduct(c, FreeElement::monomial(c.alphabet(), c.field(), key.second));
    for (const auto& [k2, s2] : dr.terms()) add(out, key.first, k2.first, k2.second, s * s2);
  }
  return out;
}

FreeElement random_element(std::mt19937_64& rng, const Alphabet& a, FieldSpec f, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, a.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  FreeElement e(a, f);
  for (int t = 0; t < 3; ++t) {
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w.letters().push_back(static_cast<Letter>(letter(rng)));
    e.add(w, Scalar::from_int(f, coef(rng)));
  }
  return e;
}

FreeElement mono(const Alphabet& a, FieldSpec f, const Word& w) { return FreeElement::monomial(a, f, w); }

DiagonalBraiding diagonal(const char* g00, const char* g01, const char* g10, const char* g11) {
  auto p = [](const char* s) { return parse_scalar(s, Qq); };
  return DiagonalBraiding(Alphabet::indexed(2), {{p(g00), p(g01)}, {p(g10), p(g11)}});
}

} // namespace

TEST_CASE("concatenation") {
  Alphabet a = Alphabet::indexed(2);
  auto x = mono(a, QQ, {0}), y = mono(a, QQ, {1});
  CHECK(concat_mult(x, y) == mono(a, QQ, {0, 1}));
  auto xx_yx = mono(a, QQ, {0, 0}) + mono(a, QQ, {1, 0});
  CHECK(concat_mult(x + y, x) == xx_yx);
  auto e = x + Scalar::from_int(QQ, 3) * mono(a, QQ, {1, 1, 0});
  CHECK(concat_mult(FreeElement::constant(a, Scalar::one(QQ)), e) == e);
  CHECK_THROWS_AS(concat_mult(x, mono(Alphabet({"a", "b"}), QQ, {0})), AlphabetMismatch);
  CHECK((x - x).is_zero());
  CHECK(e.to_string() == "x0 + 3*x1x1x0");
}

TEST_CASE("braided square product") {
  Alphabet a = Alphabet::indexed(2);
  auto c = build_braiding(1).braiding;
  auto v = TensorSquareElement::pure(a, Qq, {0}, {});
  auto w = TensorSquareElement::pure(a, Qq, {1}, {});
  CHECK(braided_square_mult(c, v, w) == TensorSquareElement::pure(a, Qq, {0, 1}, {}));
  for (Letter i = 0; i < 2; ++i)
    for (Letter j = 0; j < 2; ++j) {
      auto prod = braided_square_mult(c, TensorSquareElement::pure(a, Qq, {}, {i}),
                                       TensorSquareElement::pure(a, Qq, {j}, {}));
      TensorSquareElement expect(a, Qq);
      for (const auto& t : c.image(i, j)) expect.add({t.first}, {t.second}, t.coeff);
      CHECK(prod == expect);
    }
  auto d = diagonal("q", "q^2", "-1", "q^-1");
  auto dc = d.to_braiding();
  Word u{0, 1}, w2{1, 1, 0};
  auto prod = braided_square_mult(dc, TensorSquareElement::pure(a, Qq, {}, u), TensorSquareElement::pure(a, Qq, w2, {}));
  CHECK(prod == d.gamma_extend(u, w2) * TensorSquareElement::pure(a, Qq, w2, u));
  ExpansionCaps tiny{2, 4};
  CHECK_THROWS_AS(coproduct(c, mono(a, Qq, {0, 1, 0}), tiny), ResourceError);
}

TEST_CASE("coproduct examples") {
  Alphabet a = Alphabet::indexed(2);
  auto d = diagonal("q", "q^2", "-1", "q^-1");
  auto c = d.to_braiding();
  auto dx = coproduct(c, mono(a, Qq, {0}));
  CHECK(dx == TensorSquareElement::pure(a, Qq, {0}, {}) + TensorSquareElement::pure(a, Qq, {}, {0}));
  auto one = FreeElement::constant(a, Scalar::one(Qq));
  CHECK(coproduct(c, one) == TensorSquareElement::pure(a, Qq, {}, {}));
  auto dxy = coproduct(c, mono(a, Qq, {0, 1}));
  auto expect = TensorSquareElement::pure(a, Qq, {0, 1}, {}) + TensorSquareElement::pure(a, Qq, {0}, {1}) +
                d.gamma(0, 1) * TensorSquareElement::pure(a, Qq, {1}, {0}) + TensorSquareElement::pure(a, Qq, {}, {0, 1});
  CHECK(dxy == expect);
}

TEST_CASE("counit") {
  Alphabet a = Alphabet::indexed(2);
  CHECK(counit(FreeElement::constant(a, Scalar::one(QQ))).is_one());
  CHECK(counit(mono(a, QQ, {0})).is_zero());
  CHECK(counit(FreeElement::constant(a, Scalar::from_int(QQ, 3)) + mono(a, QQ, {0, 1})) == Scalar::from_int(QQ, 3));
}

TEST_CASE("coproduct is counital, coassociative and multiplicative") {
  std::mt19937_64 rng(31);
  std::vector<Braiding> cs{build_braiding(1).braiding, build_braiding(2).braiding};
  for (int t = 0; t < 3; ++t) cs.push_back(random_triangular_braiding(rng, 2 + t % 2, QQ));
  cs.push_back(random_triangular_braiding(rng, 3, FieldSpec::prime_field(5)));
  for (const Braiding& c : cs) {
    const Alphabet& a = c.alphabet();
    for (int t = 0; t < 3; ++t) {
      FreeElement x = random_element(rng, a, c.field(), 2), y = random_element(rng, a, c.field(), 2);
      FreeElement xy = concat_mult(x, y);
      auto dxy = coproduct(c, xy);
      CHECK(dxy == braided_square_mult(c, coproduct(c, x), coproduct(c, y)));
      CHECK(delta_left(c, dxy) == delta_right(c, dxy));
      FreeElement left(a, c.field()), right(a, c.field());
      for (const auto& [key, s] : dxy.terms()) {
        if (key.second.empty()) left.add(key.first, s);
        if (key.first.empty()) right.add(key.second, s);
      }
      CHECK(left == xy);
      CHECK(right == xy);
    }
  }
}

TEST_CASE("commutator examples") {
  Alphabet a = Alphabet::indexed(2);
  auto d = diagonal("q", "q^2", "-1", "q^-1");
  auto r = d.inverse().to_braiding();
  Commutators com(r);
  CHECK(com(Word{1}) == mono(a, Qq, {1}));
  auto expect = mono(a, Qq, {0, 1}) - d.gamma(1, 0).inverse() * mono(a, Qq, {1, 0});
  CHECK(com(Word{0, 1}) == expect);
  CHECK(com(Word{0, 1, 0, 1}) == concat_mult(com(Word{0, 1}), com(Word{0, 1})));
  CHECK(commutator(r, Word{1, 0}) == concat_mult(mono(a, Qq, {1}), mono(a, Qq, {0})));

  auto c = build_braiding(1).braiding;
  auto xy = commutator(c, Word{0, 1});
  CHECK(xy.degree() == 2u);
  CHECK(xy.coeff(Word{0, 1}).is_one());

  Matrix bad = c.matrix();
  bad(0, 3) = Scalar::one(Qq);
  CHECK_THROWS_AS(Commutators(Braiding(a, bad)), DomainError);
}

TEST_CASE("lemma checks") {
  std::mt19937_64 rng(77);
  std::vector<Braiding> cs{build_braiding(1).braiding};
  for (int t = 0; t < 3; ++t) cs.push_back(random_triangular_braiding(rng, 2, t % 2 ? QQ : FieldSpec::prime_field(3)));
  cs.push_back(random_triangular_braiding(rng, 3, QQ));
  for (const Braiding& c : cs) {
    const bool small = c.dim() == 3;
    CHECK(check_smallest_term(c, small ? 4 : 5) == std::nullopt);
    CHECK(check_smallest_term(c.left_diagonal()->inverse().to_braiding(), small ? 4 : 5) == std::nullopt);
    CHECK(check_smallest_term_lift(c, 4) == std::nullopt);
    CHECK(check_comult_lyndon(c, small ? 4 : 5) == std::nullopt);
    CHECK(check_comult_power(c, 2, 3) == std::nullopt);
    CHECK(check_comult(c, small ? 4 : 5) == std::nullopt);
  }
}

TEST_CASE("free element JSON") {
  Alphabet a = Alphabet::indexed(2);
  auto r = mono(a, Qq, {0, 1}) - Scalar::q() * mono(a, Qq, {1, 0});
  auto back = relations_from_json_text(relations_to_json({r}).dump(), a, Qq);
  REQUIRE(back.size() == 1);
  CHECK(back.front() == r);
  CHECK_THROWS_AS(relations_from_json_text(R"([[{"coeff": "1", "word": ["x7"]}]])", a, Qq), ParseError);
  CHECK_THROWS_AS(relations_from_json_text(R"([[{"coeff": "q^", "word": ["x0"]}]])", a, Qq), ParseError);
  CHECK_THROWS_AS(relations_from_json_text(R"([{"coeff": "1", "word": ["x0"]}])", a, Qq), ParseError);
  try {
    relations_from_json_text("[[\n  {\"coeff\": \"1\", \"word\": [\"x0\", \"x9\"]}\n]]", a, Qq);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
