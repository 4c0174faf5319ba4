#include <doctest.h>

#include "braidpbw/errors.hpp"
#include "braidpbw/nichols.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

using namespace braidpbw;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec Qq = FieldSpec::rational_functions();

Braiding line(FieldSpec f, long gamma) {
  Matrix m(f, 1, 1);
  m(0, 0) = Scalar::from_int(f, gamma);
  return Braiding(Alphabet::indexed(1), m);
}

std::size_t ipow(std::size_t d, std::size_t n) {
  std::size_t r = 1;
  while (n--) r *= d;
  return r;
}

// Rows x·r and r·x for every kernel row r of degree n-1 and letter x.
Matrix products_with_letters(const Braiding& c, const Matrix& lower, std::size_t n) {
  const std::size_t d = c.dim();
  Matrix out(c.field(), 0, ipow(d, n));
  const Alphabet& a = c.alphabet();
  for (std::size_t i = 0; i < lower.rows(); ++i) {
    FreeElement r = from_dense(a, c.field(), lower.row(i), n - 1);
    for (Letter x = 0; x < d; ++x) {
      FreeElement lx = FreeElement::monomial(a, c.field(), {x});
      out.append_row(to_dense(concat_mult(lx, r), n));
      out.append_row(to_dense(concat_mult(r, lx), n));
    }
  }
  return out;
}

NicholsOptions exact_opts() {
  NicholsOptions o;
  o.rank.exact = true;
  return o;
}

} // namespace

TEST_CASE("symmetrizer examples") {
  auto c = build_braiding(1).braiding;
  CHECK(symmetrizer(c, 1) == Matrix::identity(Qq, 2));
  CHECK(symmetrizer(c, 2) == Matrix::identity(Qq, 4) + c.matrix());
  auto tau = line(QQ, 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    long fact = 1;
    for (long k = 2; k <= static_cast<long>(n); ++k) fact *= k;
    CHECK(symmetrizer(tau, n) == Scalar::from_int(QQ, fact) * Matrix::identity(QQ, 1));
  }
  CHECK_THROWS_AS(symmetrizer(build_braiding(3).braiding, 7), ResourceError);
}

TEST_CASE("symmetrizer recursion equals the permutation sum") {
  std::mt19937_64 rng(19);
  std::vector<Braiding> cs{build_braiding(1).braiding, build_braiding(2).braiding};
  for (int t = 0; t < 4; ++t) cs.push_back(random_triangular_braiding(rng, 2 + t % 2, t < 2 ? QQ : FieldSpec::prime_field(5)));
  for (const Braiding& c : cs)
    for (std::size_t n = 1; n <= 3; ++n) {
      Matrix s = symmetrizer(c, n, Exec::serial);
      CHECK(s == symmetrizer_permutation_sum(c, n));
      CHECK(s == symmetrizer(c, n, Exec::parallel));
    }
  auto c = build_braiding(1).braiding;
  CHECK(symmetrizer(c, 4, Exec::serial) == symmetrizer_permutation_sum(c, 4));
}

TEST_CASE("Nichols dimensions") {
  auto c = build_braiding(1).braiding;
  CHECK(nichols_dim(c, 0) == 1);
  CHECK(nichols_dim(c, 1) == 2);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(nichols_dim(c, n, exact_opts()) == n + 1);
  auto minus = line(QQ, -1);
  CHECK(nichols_dim(minus, 0) == 1);
  CHECK(nichols_dim(minus, 1) == 1);
  CHECK(nichols_dim(minus, 2) == 0);
  CHECK(nichols_dim(minus, 3) == 0);
  auto k = ideal_component_nichols(minus, 2);
  CHECK(k == Matrix::identity(QQ, 1));
}

TEST_CASE("ideal components") {
  auto c1 = build_braiding(1).braiding;
  CHECK(ideal_component_nichols(c1, 1).rows() == 0);
  CHECK(quadratic_kernel_matches(c1, paper_fixture(1).quadratic));
  auto k = ideal_component_nichols(c1, 2);
  REQUIRE(k.rows() == 1);
  CHECK(from_dense(c1.alphabet(), Qq, k.row(0), 2) == paper_fixture(1).quadratic.front());
  auto c2 = build_braiding(2).braiding;
  CHECK(ideal_component_nichols(c2, 2).rows() == 3);
  CHECK(quadratic_kernel_matches(c2, paper_fixture(2).quadratic));
}

TEST_CASE("kernels form an ideal") {
  std::mt19937_64 rng(23);
  std::vector<Braiding> cs{build_braiding(1).braiding, line(QQ, -1), line(FieldSpec::prime_field(3), 1)};
  for (int t = 0; t < 3; ++t) cs.push_back(random_triangular_braiding(rng, 2, t ? QQ : FieldSpec::prime_field(3)));
  for (const Braiding& c : cs)
    for (std::size_t n = 3; n <= 4; ++n) {
      Matrix lower = ideal_component_nichols(c, n - 1);
      Matrix upper = ideal_component_nichols(c, n);
      Matrix prods = products_with_letters(c, lower, n);
      for (std::size_t i = 0; i < prods.rows(); ++i) CHECK(in_span(prods.row(i), upper));
      Matrix s = symmetrizer(c, n);
      if (upper.rows() > 0) CHECK((s * upper.transpose()).is_zero());
    }
}

TEST_CASE("new relations") {
  CHECK(new_relations(build_braiding(1).braiding, 3).empty());
  CHECK(new_relations(build_braiding(3).braiding, 3).empty());
  auto gf3 = line(FieldSpec::prime_field(3), 1);
  CHECK(new_relations(gf3, 2).empty());
  auto r3 = new_relations(gf3, 3);
  REQUIRE(r3.size() == 1);
  CHECK(r3.front() == FreeElement::monomial(gf3.alphabet(), gf3.field(), {0, 0, 0}));
  auto r2 = new_relations(build_braiding(2).braiding, 2);
  CHECK(r2.size() == 3);
  for (const auto& r : r2) CHECK(r.terms().begin()->second.is_one());
}

TEST_CASE("printed cubic identities lie in the quadratic ideal") {
  const auto& fx = paper_fixture(3);
  auto c = build_braiding(3).braiding;
  Matrix quad(Qq, 0, 16);
  for (const auto& r : fx.quadratic) quad.append_row(to_dense(r, 2));
  Matrix deg3 = products_with_letters(c, quad, 3);
  REQUIRE(fx.cubic.size() == 2);
  for (const auto& r : fx.cubic) CHECK(in_span(to_dense(r, 3), deg3));
}

TEST_CASE("flip conjugation keeps the Nichols dimensions") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto c = build_braiding(n).braiding;
    auto t = flip_conjugate(c);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(nichols_dim(c, k) == nichols_dim(t, k));
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 4; ++i) {
    auto c = random_triangular_braiding(rng, 3, QQ);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(nichols_dim(c, k) == nichols_dim(flip_conjugate(c), k));
  }
}

TEST_CASE("L(3) dimensions and report") {
  auto c = build_braiding(3).braiding;
  std::vector<std::size_t> expect{1, 4, 11, 24, 46};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(nichols_dim(c, n) == expect[n]);
  auto rep = nichols_report(c, 2);
  CHECK(rep.dim == 11);
  CHECK(rep.ideal_dim == 5);
  CHECK(rep.dim + rep.ideal_dim == 16);
  CHECK(rep.new_relations.size() == 5);
  auto j = report_to_json(rep);
  CHECK(j["degree"] == 2);
  CHECK(j["dim"] == 11);
  CHECK(j["relations"].size() == 5);
}
