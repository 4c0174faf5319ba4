#include "braidpbw/verify.hpp"

#include "braidpbw/errors.hpp"
#include "braidpbw/qcomb.hpp"

#include <algorithm>

namespace braidpbw {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::vector<Word> words_up_to(std::size_t d, std::size_t max_len, std::size_t min_len = 1) {
  std::vector<Word> out;
  for (std::size_t n = min_len; n <= max_len; ++n) {
    const std::size_t total = checked_power(d, n, 1u << 20);
    for (std::size_t i = 0; i < total; ++i) out.push_back(word_from_index(i, n, d));
  }
  return out;
}

std::string show(const Alphabet& a, const Word& w) { return w.empty() ? "1" : word_to_string(a, w); }

Scalar random_nonzero(std::mt19937_64& rng, FieldSpec f) {
  if (f.kind == FieldKind::prime_field) {
    std::uniform_int_distribution<long> pick(1, static_cast<long>(f.characteristic) - 1);
    return Scalar::from_int(f, pick(rng));
  }
  static const long values[] = {1, -1, 2, -2, 3, 1, -1};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(values) - 1);
  return Scalar::from_int(f, values[pick(rng)]);
}

Braiding diagonal_inverse(const Braiding& c) { return c.left_diagonal()->inverse().to_braiding(); }

FreeElement power(const FreeElement& a, std::size_t k) {
  FreeElement r = FreeElement::constant(a.alphabet(), Scalar::one(a.field()));
  for (std::size_t i = 0; i < k; ++i) r = concat_mult(r, a);
  return r;
}

// First term a⊗b violating "a, b nonempty and a ≫ v".
std::optional<std::string> dominated_violation(const TensorSquareElement& t, const Word& v) {
  for (const auto& [key, s] : t.terms()) {
    const auto& [a, b] = key;
    if (a.empty() || b.empty() || !lyndon_dominates(a, v))
      return show(t.alphabet(), a) + "⊗" + show(t.alphabet(), b);
  }
  return std::nullopt;
}

void require_left(const Braiding& c) {
  if (!c.is_left_triangular()) throw DomainError("lemma checks need a left triangular braiding");
}

} // namespace

Braiding random_triangular_braiding(std::mt19937_64& rng, std::size_t d, FieldSpec f) {
  if (d == 0) throw DomainError("random_triangular_braiding: empty alphabet");
  std::uniform_int_distribution<std::size_t> grade_pick(0, d - 1);
  std::vector<std::size_t> grade(d);
  for (auto& g : grade) g = grade_pick(rng);

  // N on each block: random entries from letter j to later letters k of the same grade.
  std::uniform_int_distribution<long> small(-2, 2);
  Matrix nil(f, d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k)
      if (grade[j] == grade[k]) nil(k, j) = Scalar::from_int(f, small(rng));

  std::uniform_int_distribution<int> exp_pick(0, 2);
  std::vector<Matrix> unipotent_powers{Matrix::identity(f, d)};
  const Matrix unipotent = Matrix::identity(f, d) + nil;
  for (int e = 1; e <= 2; ++e) unipotent_powers.push_back(unipotent_powers.back() * unipotent);

  // action[g] restricted to block h = χ(g,h)(I + N)^{e(g,h)}.
  std::vector<Matrix> action(d, Matrix(f, d, d));
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t h = 0; h < d; ++h) {
      const Scalar chi = random_nonzero(rng, f);
      const Matrix& u = unipotent_powers[exp_pick(rng)];
      for (std::size_t j = 0; j < d; ++j)
        if (grade[j] == h)
          for (std::size_t k = 0; k < d; ++k)
            if (grade[k] == h) action[g](k, j) = chi * u(k, j);
    }

  Matrix c(f, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c(k * d + i, i * d + j) = action[grade[i]](k, j);
  return Braiding(Alphabet::indexed(d), std::move(c));
}

std::optional<std::string> check_smallest_term(const Braiding& r, std::size_t max_len) {
  Commutators com(r);
  const Alphabet& a = r.alphabet();
  for (const Word& u : words_up_to(r.dim(), max_len)) {
    const FreeElement& e = com(u);
    if (!e.coeff(u).is_one()) return show(a, u) + ": coefficient of the word is not 1";
    for (const auto& [w, s] : e.terms())
      if (w.size() != u.size() || w < u) return show(a, u) + ": term " + show(a, w);
  }
  return std::nullopt;
}

std::optional<std::string> check_smallest_term_lift(const Braiding& c, std::size_t max_len) {
  require_left(c);
  const DiagonalBraiding& diag = *c.left_diagonal();
  const Alphabet& a = c.alphabet();
  const FieldSpec f = c.field();
  for (const Braiding& r : {diag.to_braiding(), diagonal_inverse(c)}) {
    Commutators com(r);
    for (const Word& u : words_up_to(c.dim(), max_len - 1))
      for (const Word& v : words_up_to(c.dim(), max_len - u.size())) {
        const FreeElement one = FreeElement::constant(a, Scalar::one(f));
        const TensorSquareElement lifted =
            braided_square_mult(c, tensor(one, com(u)), tensor(com(v), one));
        const TensorSquareElement rest = lifted - diag.gamma_extend(u, v) * tensor(com(v), com(u));
        for (const auto& [key, s] : rest.terms())
          if (key.first.size() != v.size() || !(key.first > v))
            return show(a, u) + "," + show(a, v) + ": term " + show(a, key.first) + "⊗" + show(a, key.second);
      }
  }
  return std::nullopt;
}

std::optional<std::string> check_comult_lyndon(const Braiding& c, std::size_t max_len) {
  require_left(c);
  Commutators com(diagonal_inverse(c));
  const Alphabet& a = c.alphabet();
  const FreeElement one = FreeElement::constant(a, Scalar::one(c.field()));
  for (const Word& u : enumerate_lyndon(a, max_len)) {
    const FreeElement& bu = com(u);
    const TensorSquareElement rest = coproduct(c, bu) - tensor(bu, one) - tensor(one, bu);
    for (const auto& [key, s] : rest.terms())
      if (key.first.empty() || key.second.empty() || !(key.first > u))
        return show(a, u) + ": term " + show(a, key.first) + "⊗" + show(a, key.second);
  }
  return std::nullopt;
}

std::optional<std::string> check_comult_power(const Braiding& c, std::size_t max_lyndon_len, std::size_t max_r) {
  require_left(c);
  const DiagonalBraiding& diag = *c.left_diagonal();
  Commutators com(diagonal_inverse(c));
  const Alphabet& a = c.alphabet();
  for (const Word& v : enumerate_lyndon(a, max_lyndon_len)) {
    const Scalar g = diag.gamma_extend(v, v);
    const FreeElement bv = com(v);
    for (std::size_t r = 1; r <= max_r; ++r) {
      TensorSquareElement rest = coproduct(c, power(bv, r));
      for (std::size_t i = 0; i <= r; ++i)
        rest = rest - gauss_binomial(static_cast<unsigned>(r), static_cast<unsigned>(i), g) *
                          tensor(power(bv, i), power(bv, r - i));
      if (auto bad = dominated_violation(rest, v)) return show(a, v) + "^" + std::to_string(r) + ": term " + *bad;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_comult(const Braiding& c, std::size_t max_len) {
  require_left(c);
  const DiagonalBraiding& diag = *c.left_diagonal();
  Commutators com(diagonal_inverse(c));
  const Alphabet& a = c.alphabet();
  const FreeElement one = FreeElement::constant(a, Scalar::one(c.field()));
  for (const Word& u : words_up_to(c.dim(), max_len, 2)) {
    const std::vector<Word> factors = lyndon_factorize(u);
    const Word& v = factors.back();
    std::size_t r = 0;
    while (r < factors.size() && factors[factors.size() - 1 - r] == v) ++r;
    if (r == factors.size()) continue;
    const Word z = u.substr(0, u.size() - r * v.size());
    const Scalar gvv = diag.gamma_extend(v, v);
    const Scalar gzv = diag.gamma_extend(z, v);
    const FreeElement& bu = com(u);
    const FreeElement& bz = com(z);
    const FreeElement& bv = com(v);
    TensorSquareElement rest = coproduct(c, bu) - tensor(bu, one);
    for (std::size_t i = 0; i <= r; ++i) {
      const Scalar k = gauss_binomial(static_cast<unsigned>(r), static_cast<unsigned>(i), gvv) * gzv.pow(static_cast<long>(i));
      rest = rest - k * tensor(power(bv, i), concat_mult(bz, power(bv, r - i)));
    }
    if (auto bad = dominated_violation(rest, v)) return show(a, u) + ": term " + *bad;
  }
  return std::nullopt;
}

std::vector<CheckResult> lemma_suite(const std::string& label, const Braiding& c, const LemmaScale& scale) {
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, const std::optional<std::string>& bad) {
    out.push_back({label + ": " + name, !bad.has_value(), bad.value_or("")});
  };
  record("smallest term of [u]_c", check_smallest_term(c, scale.smallest_len));
  record("smallest term of [u]_d^-1", check_smallest_term(diagonal_inverse(c), scale.smallest_len));
  record("smallest term of [u]_0", check_smallest_term(Braiding(c.alphabet(), Matrix(c.field(), c.dim() * c.dim(), c.dim() * c.dim())),
                                                       scale.smallest_len));
  record("lift of diagonal commutators", check_smallest_term_lift(c, scale.lift_len));
  record("coproduct of Lyndon commutators", check_comult_lyndon(c, scale.lyndon_len));
  record("coproduct of powers", check_comult_power(c, scale.power_len, scale.power_r));
  record("coproduct of z v^r", check_comult(c, scale.comult_len));
  return out;
}

namespace {

std::string join_words(const Alphabet& a, const std::vector<Word>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + show(a, ws[i]);
  return s + "}";
}

std::size_t nullity(const Matrix& m) { return m.cols() - rank_exact(m, Exec::serial); }

void fixture_checks(const PaperFixture& fx, const VerifyOptions& opts, std::vector<CheckResult>& out) {
  const std::string L = "L(" + std::to_string(fx.n) + ")";
  auto add = [&](const std::string& name, bool ok, std::string detail = {}) {
    out.push_back({L + " " + name, ok, std::move(detail)});
  };

  const UqBraiding ub = build_braiding(fx.n);
  const Braiding& c = ub.braiding;
  const std::size_t d = c.dim();
  const Alphabet& a = c.alphabet();
  add("convention", true, ub.convention.describe());
  add("braid equation", c.satisfies_braid_equation());
  add("left triangular for x0 < ... < xn", c.is_left_triangular());
  std::vector<std::size_t> reversed(d);
  for (std::size_t i = 0; i < d; ++i) reversed[i] = d - 1 - i;
  add("right triangular for xn < ... < x0", check_right_triangular(permute_basis(c, reversed)).has_value());

  bool weights_ok = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : c.image(static_cast<Letter>(i), static_cast<Letter>(j)))
        if (ub.module.weights[t.first] + ub.module.weights[t.second] != ub.module.weights[i] + ub.module.weights[j])
          weights_ok = false;
  add("preserves total weight", weights_ok);

  bool powers_of_q = c.is_left_triangular();
  if (powers_of_q)
    for (const auto& row : c.left_diagonal()->table())
      for (const Scalar& g : row) {
        bool found = false;
        for (long e = -24; e <= 24 && !found; ++e) found = g == Scalar::q_power(e);
        powers_of_q = powers_of_q && found;
      }
  add("diagonal coefficients are powers of q", powers_of_q);

  add("degree-2 kernel equals the printed relations", quadratic_kernel_matches(c, fx.quadratic));

  if (fx.n == 1) {
    const FieldSpec f = c.field();
    const Matrix id = Matrix::identity(f, d * d);
    const Matrix plus = c.matrix() + id;
    const Matrix minus = c.matrix() - Scalar::q_power(-2) * id;
    const bool split = (plus * minus).is_zero();
    const std::size_t m1 = nullity(plus), m2 = nullity(minus);
    add("spectrum {-1: 1, q^-2: 3}", split && m1 == 1 && m2 == 3,
        "nullity(c+1) = " + std::to_string(m1) + ", nullity(c-q^-2) = " + std::to_string(m2) +
            (split ? ", diagonalizable" : ", not diagonalizable"));
  }

  const std::size_t cap = fx.dims.empty() ? 2 : fx.dims.size() - 1;
  const auto p = GradedIdealPresentation::nichols_kernel(c, cap, opts.nichols);
  const PBWData data = compute_pbw(p);
  std::vector<Word> gens;
  bool infinite = true;
  for (const auto& g : data.generators) {
    gens.push_back(g.word);
    infinite = infinite && g.height.kind == HeightRecord::Kind::infinite;
  }
  std::vector<Word> expected = fx.generators;
  std::sort(expected.begin(), expected.end());
  add("PBW generators", gens == expected, join_words(a, gens));
  add("heights certified infinite", infinite);

  bool dims_ok = data.dims.size() == fx.dims.size();
  std::string dims;
  for (std::size_t n = 0; n < data.dims.size(); ++n) {
    const auto& dd = data.dims[n];
    dims += (n ? "," : "") + std::to_string(dd.quotient_dim);
    dims_ok = dims_ok && dd.quotient_dim == fx.dims[n] && dd.monomial_count == fx.dims[n];
  }
  add("quotient dimensions", dims_ok, dims);

  const auto extra = new_relations(c, 3, opts.nichols);
  add("no new relations in degree 3", extra.empty(), std::to_string(extra.size()) + " new");

  if (!fx.cubic.empty()) {
    const auto quad = GradedIdealPresentation::from_generators(c, fx.quadratic, 3, opts.nichols);
    const Matrix& i3 = quad.basis(3).rows;
    bool all_in = true;
    for (const auto& cubic : fx.cubic) all_in = all_in && in_span(to_dense(cubic, 3), i3);
    add("printed cubic relations lie in the quadratic ideal", all_in);
  }

  bool cor_ok = true;
  std::string cor;
  const Braiding flipped = flip_conjugate(c);
  for (std::size_t n = 0; n <= std::min<std::size_t>(4, cap); ++n) {
    const std::size_t x = nichols_dim(c, n, opts.nichols), y = nichols_dim(flipped, n, opts.nichols);
    cor += (n ? "," : "") + std::to_string(x);
    cor_ok = cor_ok && x == y;
  }
  add("Nichols dims agree for c and τcτ", cor_ok, cor);
}

} // namespace

VerifyReport verify_paper(const std::vector<PaperFixture>& fixtures, const VerifyOptions& opts) {
  VerifyReport report;
  for (const auto& fx : fixtures) fixture_checks(fx, opts, report.checks);

  LemmaScale small;
  small.smallest_len = 4;
  small.lift_len = 3;
  small.lyndon_len = 4;
  small.comult_len = 4;
  for (unsigned n : {1u, 2u}) {
    const auto s = lemma_suite("L(" + std::to_string(n) + ")", build_braiding(n).braiding, n == 1 ? LemmaScale{} : small);
    report.checks.insert(report.checks.end(), s.begin(), s.end());
  }

  std::mt19937_64 rng(opts.seed);
  for (std::size_t k = 0; k < opts.random_braidings; ++k) {
    const FieldSpec f = k % 2 == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(5);
    const std::size_t d = 2 + k % 2;
    const Braiding c = random_triangular_braiding(rng, d, f);
    const std::string label = "random #" + std::to_string(k) + " over " + f.name();
    const auto s = lemma_suite(label, c, small);
    report.checks.insert(report.checks.end(), s.begin(), s.end());

    const auto p = GradedIdealPresentation::nichols_kernel(c, 4, opts.nichols);
    const PBWData data = compute_pbw(p);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 0; n <= 4; ++n) {
      const DimensionVerdict v = dimension_check(p, data, n);
      detail += (n ? "," : "") + std::to_string(v.quotient_dim);
      ok = ok && v.passed();
    }
    report.checks.push_back({label + ": PBW dimension check", ok, detail});
  }
  return report;
}

Json verify_to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

} // namespace braidpbw
