#include <doctest.h>

#include "braidpbw/braiding.hpp"
#include "braidpbw/errors.hpp"
#include "braidpbw/qcomb.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

using namespace braidpbw;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec Qq = FieldSpec::rational_functions();

std::size_t ipow(std::size_t d, std::size_t n) {
  std::size_t r = 1;
  while (n--) r *= d;
  return r;
}

// (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) through Kronecker products.
bool ybe_oracle(const Braiding& c) {
  auto id = Matrix::identity(c.field(), c.dim());
  Matrix c12 = kron(c.matrix(), id), c23 = kron(id, c.matrix());
  return c12 * c23 * c12 == c23 * c12 * c23;
}

// c_{n,m} from the two inductive formulas, written with Kronecker products.
Matrix lift_oracle(const Braiding& c, std::size_t n, std::size_t m) {
  const std::size_t d = c.dim();
  const FieldSpec f = c.field();
  if (n == 0 || m == 0) return Matrix::identity(f, ipow(d, n + m));
  if (n == 1) {
    if (m == 1) return c.matrix();
    return kron(Matrix::identity(f, d), lift_oracle(c, 1, m - 1)) * kron(c.matrix(), Matrix::identity(f, ipow(d, m - 1)));
  }
  return kron(lift_oracle(c, n - 1, m), Matrix::identity(f, d)) *
         kron(Matrix::identity(f, ipow(d, n - 1)), lift_oracle(c, 1, m));
}

// Left triangular shape read entry by entry from the matrix.
bool left_shape_oracle(const Braiding& c) {
  const std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          if (c.matrix()(k * d + l, i * d + j).is_zero()) continue;
          bool flip_term = k == j && l == i;
          if (!flip_term && k <= j) return false;
        }
  return true;
}

Braiding l1() { return build_braiding(1).braiding; }

Braiding non_triangular() {
  // c = τ∘(g⊗g) with g = [[0,1],[1,1]]: no basis order is triangular.
  const std::size_t d = 2;
  long g[2][2] = {{0, 1}, {1, 1}};
  Matrix m(QQ, 4, 4);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          m(k * d + l, i * d + j) = Scalar::from_int(QQ, g[k][j] * g[l][i]);
  return Braiding(Alphabet::indexed(2), m);
}

DiagonalBraiding random_diagonal(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> e(-3, 3);
  std::vector<std::vector<Scalar>> g(d, std::vector<Scalar>(d));
  for (auto& row : g)
    for (auto& s : row) s = Scalar::q_power(e(rng)) * Scalar::from_int(Qq, e(rng) % 2 == 0 ? 1 : -1);
  return DiagonalBraiding(Alphabet::indexed(d), g);
}

} // namespace

TEST_CASE("braid equation examples") {
  auto tau = Braiding::flip(QQ, Alphabet::indexed(3));
  CHECK(tau.satisfies_braid_equation());
  CHECK(tau.invertible());
  std::mt19937_64 rng(4);
  for (int t = 0; t < 4; ++t) {
    auto d = random_diagonal(rng, 3).to_braiding();
    CHECK(d.satisfies_braid_equation());
    CHECK(ybe_oracle(d));
  }
  Matrix m = l1().matrix();
  m(0, 3) = Scalar::one(Qq);
  Braiding bad(Alphabet::indexed(2), m);
  CHECK_FALSE(bad.satisfies_braid_equation());
  CHECK(bad.braid_check().witness.has_value());
  CHECK_FALSE(ybe_oracle(bad));
}

TEST_CASE("braid equation agrees with the Kronecker oracle") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    for (FieldSpec f : {QQ, FieldSpec::prime_field(5)}) {
      Braiding c = random_triangular_braiding(rng, 2 + t % 2, f);
      CHECK(c.satisfies_braid_equation());
      CHECK(ybe_oracle(c));
      Matrix m = c.matrix();
      m(t % m.rows(), (3 * t + 1) % m.cols()) += Scalar::one(f);
      Braiding perturbed(c.alphabet(), m);
      CHECK(perturbed.satisfies_braid_equation() == ybe_oracle(perturbed));
      CHECK(flip_conjugate(perturbed).satisfies_braid_equation() == perturbed.satisfies_braid_equation());
      CHECK(flip_conjugate(c).satisfies_braid_equation());
    }
  }
  for (unsigned n = 1; n <= 3; ++n) CHECK(ybe_oracle(build_braiding(n).braiding));
  CHECK(non_triangular().satisfies_braid_equation());
}

TEST_CASE("lifts") {
  auto c = l1();
  CHECK(lift(c, 1, 1) == c.matrix());
  CHECK(lift(c, 2, 0) == Matrix::identity(Qq, 4));
  CHECK(lift(c, 0, 3) == Matrix::identity(Qq, 8));
  std::mt19937_64 rng(12);
  std::vector<Braiding> cs{c, build_braiding(2).braiding, random_triangular_braiding(rng, 3, QQ),
                           random_triangular_braiding(rng, 2, FieldSpec::prime_field(3))};
  for (const Braiding& b : cs)
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n + m <= 4; ++m) {
        if (ipow(b.dim(), n + m) > 81) continue;
        CHECK(lift(b, n, m) == lift_oracle(b, n, m));
      }
  CHECK_THROWS_AS(lift(c, 6, 6, 1024), ResourceError);
}

TEST_CASE("diagonal lifts act by gamma times the block flip") {
  std::mt19937_64 rng(3);
  auto d = random_diagonal(rng, 2);
  auto c = d.to_braiding();
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 1; m <= 2; ++m)
      for (std::size_t a = 0; a < ipow(2, n); ++a)
        for (std::size_t b = 0; b < ipow(2, m); ++b) {
          Word u = word_from_index(a, n, 2), v = word_from_index(b, m, 2);
          auto img = lift_apply(c, u, v);
          REQUIRE(img.size() == 1);
          CHECK(img.begin()->first == std::pair{v, u});
          CHECK(img.begin()->second == d.gamma_extend(u, v));
        }
}

TEST_CASE("lifts of left triangular braidings keep the smallest term") {
  std::mt19937_64 rng(21);
  std::vector<Braiding> cs{l1(), build_braiding(2).braiding};
  for (int t = 0; t < 4; ++t) cs.push_back(random_triangular_braiding(rng, 2 + t % 2, QQ));
  for (const Braiding& c : cs) {
    auto diag = check_left_triangular(c);
    REQUIRE(diag.has_value());
    const std::size_t d = c.dim();
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; n + m <= 4; ++m)
        for (std::size_t a = 0; a < ipow(d, n); ++a)
          for (std::size_t b = 0; b < ipow(d, m); ++b) {
            Word u = word_from_index(a, n, d), v = word_from_index(b, m, d);
            for (const auto& [key, s] : lift_apply(c, u, v)) {
              const auto& [v2, u2] = key;
              if (v2 == v && u2 == u) {
                CHECK(s == diag->gamma_extend(u, v));
                continue;
              }
              CHECK(v2.size() == v.size());
              CHECK(lex_cmp(v2, v) == Cmp::greater);
            }
          }
  }
}

TEST_CASE("triangularity") {
  std::mt19937_64 rng(6);
  auto d = random_diagonal(rng, 3);
  auto dc = d.to_braiding();
  REQUIRE(check_left_triangular(dc).has_value());
  CHECK(*check_left_triangular(dc) == d);
  CHECK(check_right_triangular(dc).has_value());

  auto tau = Braiding::flip(QQ, Alphabet::indexed(2));
  auto g = check_left_triangular(tau);
  REQUIRE(g.has_value());
  for (Letter x = 0; x < 2; ++x)
    for (Letter y = 0; y < 2; ++y) CHECK(g->gamma(x, y).is_one());

  auto c = l1();
  CHECK(c.is_left_triangular());
  CHECK_FALSE(check_right_triangular(c).has_value());
  CHECK(check_right_triangular(permute_basis(c, {1, 0})).has_value());

  Matrix m = dc.matrix();
  // c(x1⊗x0) gains x0⊗x0: the second slot is not above x1.
  m(0, 1 * 3 + 0) = Scalar::one(Qq);
  CHECK_FALSE(check_right_triangular(Braiding(dc.alphabet(), m)).has_value());

  for (int t = 0; t < 20; ++t) {
    Braiding r = random_triangular_braiding(rng, 2 + t % 2, t % 2 ? QQ : FieldSpec::prime_field(5));
    CHECK(r.is_left_triangular());
    CHECK(left_shape_oracle(r));
    for (std::vector<std::size_t> perm : {std::vector<std::size_t>{1, 0}, std::vector<std::size_t>{1, 0, 2},
                                          std::vector<std::size_t>{2, 1, 0}}) {
      if (perm.size() != r.dim()) continue;
      Braiding p = permute_basis(r, perm);
      CHECK(p.is_left_triangular() == left_shape_oracle(p));
    }
  }

  std::vector<std::string> warnings;
  auto z = check_left_triangular(non_triangular(), &warnings);
  CHECK_FALSE(z.has_value());
}

TEST_CASE("zero diagonal coefficients warn") {
  Matrix m(QQ, 4, 4);
  // c(x0⊗x0) = x1⊗x1, everything else the flip.
  m(3, 0) = Scalar::one(QQ);
  m(2, 1) = Scalar::one(QQ);
  m(1, 2) = Scalar::one(QQ);
  m(3, 3) = Scalar::one(QQ);
  std::vector<std::string> warnings;
  auto d = check_left_triangular(Braiding(Alphabet::indexed(2), m), &warnings);
  CHECK(d.has_value());
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("gamma_extend") {
  auto d = *check_left_triangular(l1());
  CHECK(d.gamma_extend(Word{}, Word{0, 1}).is_one());
  CHECK(d.gamma_extend(Word{0}, Word{}).is_one());
  CHECK(d.gamma_extend(Word{0, 1}, Word{0, 1}) == Scalar::q_power(-6));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> idx(0, 15);
  for (int t = 0; t < 30; ++t) {
    Word u = word_from_index(idx(rng) % 4, 2, 2), u2 = word_from_index(idx(rng) % 8, 3, 2);
    Word v = word_from_index(idx(rng), 4, 2);
    CHECK(d.gamma_extend(u, v) * d.gamma_extend(u2, v) == d.gamma_extend(u + u2, v));
    CHECK(d.gamma_extend(v, u) * d.gamma_extend(v, u2) == d.gamma_extend(v, u + u2));
  }
  auto inv = d.inverse();
  for (Letter x = 0; x < 2; ++x)
    for (Letter y = 0; y < 2; ++y) CHECK(inv.gamma(x, y) * d.gamma(y, x) == Scalar::one(Qq));
}

TEST_CASE("flip_conjugate") {
  auto c = l1();
  CHECK(flip_conjugate(flip_conjugate(c)) == c);
  std::mt19937_64 rng(13);
  auto d = random_diagonal(rng, 3);
  auto fd = check_left_triangular(flip_conjugate(d.to_braiding()));
  REQUIRE(fd.has_value());
  for (Letter x = 0; x < 3; ++x)
    for (Letter y = 0; y < 3; ++y) CHECK(fd->gamma(x, y) == d.gamma(y, x));
  auto rev = permute_basis(c, {1, 0});
  CHECK(rev.is_right_triangular());
  CHECK(flip_conjugate(rev).is_left_triangular());
  for (unsigned n = 2; n <= 3; ++n) {
    auto b = build_braiding(n).braiding;
    std::vector<std::size_t> perm;
    for (std::size_t i = b.dim(); i-- > 0;) perm.push_back(i);
    CHECK(flip_conjugate(permute_basis(b, perm)).is_left_triangular());
  }
}

TEST_CASE("search_triangular_order") {
  auto c = l1();
  CHECK(search_triangular_order(c) == std::vector<std::size_t>{0, 1});
  CHECK(search_triangular_order(permute_basis(c, {1, 0})) == std::vector<std::size_t>{1, 0});
  CHECK_FALSE(search_triangular_order(non_triangular()).has_value());
  CHECK_THROWS_AS(search_triangular_order(Braiding::flip(QQ, Alphabet::indexed(3)), 2), ResourceError);
}

TEST_CASE("braiding JSON") {
  for (unsigned n = 1; n <= 2; ++n) {
    auto c = build_braiding(n).braiding;
    auto back = braiding_from_json_text(braiding_to_json(c).dump(2));
    CHECK(back == c);
  }
  std::mt19937_64 rng(1);
  auto gf = random_triangular_braiding(rng, 2, FieldSpec::prime_field(5));
  CHECK(braiding_from_json_text(braiding_to_json(gf).dump()) == gf);

  const char* bad_literal = R"js({
  "field": "Q(q)",
  "basis": ["a"],
  "matrix": [["q^"]]
})js";
  try {
    braiding_from_json_text(bad_literal);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 13);
  }
  CHECK_THROWS_AS(braiding_from_json_text(R"({"field": "Q", "basis": ["a"], "matrix": [["1", "0"]]})"), ParseError);
  CHECK_THROWS_AS(braiding_from_json_text(R"({"field": "Q", "basis": ["a"], "matrix": [["q"]]})"), ParseError);
  CHECK_THROWS_AS(braiding_from_json_text(R"({"field": "R", "basis": ["a"], "matrix": [["1"]]})"), ParseError);
  CHECK_THROWS_AS(braiding_from_json_text("{\"field\": "), ParseError);
  CHECK_THROWS_AS(Braiding(Alphabet::indexed(2), Matrix::identity(QQ, 3)), DomainError);
}
