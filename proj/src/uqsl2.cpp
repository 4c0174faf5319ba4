#include "braidpbw/uqsl2.hpp"

#include "braidpbw/errors.hpp"
#include "braidpbw/nichols.hpp"
#include "braidpbw/qcomb.hpp"

namespace braidpbw {

namespace {

const FieldSpec Qq = FieldSpec::rational_functions();

// Symmetric quantum integer [k] = (q^k - q^{-k}) / (q - q^{-1}).
Scalar sym_qint(int k) {
  if (k == 0) return Scalar::zero(Qq);
  const Scalar q = Scalar::q();
  return (q.pow(k) - q.pow(-k)) / (q - q.inverse());
}

Scalar sym_qfact(int k) {
  Scalar r = Scalar::one(Qq);
  for (int i = 1; i <= k; ++i) r *= sym_qint(i);
  return r;
}

Matrix power(const Matrix& m, unsigned k) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

Word parse_word(const Alphabet& a, std::string_view s) {
  std::vector<Letter> out;
  while (!s.empty()) {
    bool matched = false;
    for (std::size_t i = 0; i < a.size() && !matched; ++i) {
      const std::string& name = a.name(static_cast<Letter>(i));
      if (s.substr(0, name.size()) == name) {
        out.push_back(static_cast<Letter>(i));
        s.remove_prefix(name.size());
        matched = true;
      }
    }
    if (!matched) throw DomainError("cannot split word '" + std::string(s) + "'");
  }
  return Word(std::move(out));
}

FreeElement relation(const Alphabet& a, std::initializer_list<std::pair<const char*, const char*>> terms) {
  FreeElement e(a, Qq);
  for (const auto& [coeff, word] : terms) e.add(parse_word(a, word), parse_scalar(coeff, Qq));
  return e;
}

} // namespace

UqModuleData build_module(unsigned n, BasisNormalization basis, std::vector<int> signs) {
  if (n < 1 || n > 3) throw DomainError("build_module: n must be 1, 2 or 3");
  const std::size_t d = n + 1;
  if (signs.empty()) signs.assign(d, 1);
  if (signs.size() != d) throw DomainError("build_module: one sign per basis vector");
  UqModuleData m;
  m.n = n;
  m.alphabet = Alphabet::indexed(d);
  m.basis = basis;
  m.signs = signs;
  m.E = Matrix(Qq, d, d);
  m.F = Matrix(Qq, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m.weights.push_back(static_cast<int>(n) - 2 * static_cast<int>(i));
    const int ii = static_cast<int>(i), nn = static_cast<int>(n);
    // Column i holds the image of x_i; rescaling x_i -> s_i x_i conjugates by diag(s).
    if (i + 1 < d) {
      Scalar v = basis == BasisNormalization::divided_power ? sym_qint(ii + 1) : Scalar::one(Qq);
      m.F(i + 1, i) = Scalar::from_int(Qq, signs[i] * signs[i + 1]) * v;
    }
    if (i >= 1) {
      Scalar v = basis == BasisNormalization::divided_power ? sym_qint(nn - ii + 1)
                                                             : sym_qint(ii) * sym_qint(nn - ii + 1);
      m.E(i - 1, i) = Scalar::from_int(Qq, signs[i] * signs[i - 1]) * v;
    }
  }
  const Matrix comm = m.E * m.F - m.F * m.E;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar expect = i == j ? sym_qint(m.weights[i]) : Scalar::zero(Qq);
      if (!(comm(i, j) == expect)) throw DomainError("build_module: EF - FE differs from [K] on x" + std::to_string(j));
    }
  return m;
}

Scalar weight_factor(unsigned n, int a, int b) {
  if (n % 2 == 1) {
    if ((a * b) % 2 == 0) throw DomainError("weight_factor: odd n needs odd weights");
    return Scalar::q_power(-(3 + a * b) / 2);
  }
  return Scalar::q_power(-2 - (a * b) / 2);
}

std::string BraidingConvention::describe() const {
  std::string s = "quasi-R sign " + std::string(quasi_sign > 0 ? "+1" : "-1") + ", " +
                  (inverted_q ? "q^-1" : "q") + " in s_k, " +
                  (basis == BasisNormalization::divided_power ? "divided-power" : "power") + " basis, signs (";
  for (std::size_t i = 0; i < signs.size(); ++i) s += (i ? "," : "") + std::string(signs[i] > 0 ? "+" : "-");
  return s + ")";
}

Braiding braiding_with_convention(unsigned n, const BraidingConvention& conv) {
  const UqModuleData m = build_module(n, conv.basis, conv.signs);
  const std::size_t d = n + 1;
  const Scalar Q = conv.inverted_q ? Scalar::q().inverse() : Scalar::q();
  std::vector<Scalar> s;
  std::vector<Matrix> Fk, Ek;
  for (unsigned k = 0; k < d; ++k) {
    const int ki = static_cast<int>(k);
    Scalar sk = Scalar::from_int(Qq, conv.quasi_sign).pow(ki) * Q.pow(-ki * (ki - 1) / 2) *
                (Q - Q.inverse()).pow(ki) / sym_qfact(ki);
    s.push_back(sk);
    Fk.push_back(power(m.F, k));
    Ek.push_back(power(m.E, k));
  }
  Matrix c(Qq, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar f = weight_factor(n, m.weights[j], m.weights[i]);
      for (unsigned k = 0; k < d; ++k)
        for (std::size_t a = 0; a < d; ++a) {
          if (Fk[k](a, j).is_zero()) continue;
          for (std::size_t b = 0; b < d; ++b) {
            if (Ek[k](b, i).is_zero()) continue;
            c(a * d + b, i * d + j) += f * s[k] * Fk[k](a, j) * Ek[k](b, i);
          }
        }
    }
  return Braiding(m.alphabet, std::move(c));
}

bool quadratic_kernel_matches(const Braiding& c, const std::vector<FreeElement>& relations) {
  const std::size_t d = c.dim();
  const Matrix s2 = symmetrizer(c, 2, Exec::serial);
  Matrix rel(c.field(), 0, d * d);
  for (const auto& r : relations) rel.append_row(to_dense(r, 2));
  if (rank_exact(rel, Exec::serial) != relations.size()) return false;
  if (rank_exact(s2, Exec::serial) != d * d - relations.size()) return false;
  return (s2 * rel.transpose()).is_zero();
}

UqBraiding build_braiding(unsigned n) {
  const PaperFixture& fx = paper_fixture(n);
  const std::size_t d = n + 1;
  std::vector<std::size_t> reversed(d);
  for (std::size_t i = 0; i < d; ++i) reversed[i] = d - 1 - i;
  for (bool inverted : {false, true})
    for (int sign : {1, -1})
      for (auto basis : {BasisNormalization::divided_power, BasisNormalization::power})
        for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
          BraidingConvention conv{sign, inverted, basis, std::vector<int>(d, 1)};
          for (std::size_t i = 1; i < d; ++i)
            if (pattern & (1u << (i - 1))) conv.signs[i] = -1;
          Braiding c = braiding_with_convention(n, conv);
          if (!quadratic_kernel_matches(c, fx.quadratic)) continue;
          if (!c.is_left_triangular() || !check_right_triangular(permute_basis(c, reversed))) continue;
          if (!c.satisfies_braid_equation()) continue;
          return {c, conv, build_module(n, conv.basis, conv.signs)};
        }
  throw DomainError("build_braiding: no quasi-R convention reproduces the printed relations for L(" +
                    std::to_string(n) + ")");
}

std::vector<PaperFixture> paper_fixtures() {
  std::vector<PaperFixture> out;
  {
    PaperFixture f;
    f.n = 1;
    const Alphabet a = Alphabet::indexed(2);
    f.quadratic = {relation(a, {{"1", "x0x1"}, {"-q", "x1x0"}})};
    f.generators = {parse_word(a, "x0"), parse_word(a, "x1")};
    for (std::size_t k = 0; k <= 6; ++k) f.dims.push_back(k + 1);
    out.push_back(std::move(f));
  }
  {
    PaperFixture f;
    f.n = 2;
    const Alphabet a = Alphabet::indexed(3);
    f.quadratic = {relation(a, {{"1", "x0x1"}, {"-q^2", "x1x0"}}),
                   relation(a, {{"1", "x1x2"}, {"-q^2", "x2x1"}}),
                   relation(a, {{"1", "x0x2"}, {"q^2-1", "x1x1"}, {"-1", "x2x0"}})};
    f.generators = {parse_word(a, "x0"), parse_word(a, "x1"), parse_word(a, "x2")};
    for (std::size_t k = 0; k <= 4; ++k) f.dims.push_back((k + 1) * (k + 2) / 2);
    out.push_back(std::move(f));
  }
  {
    PaperFixture f;
    f.n = 3;
    const Alphabet a = Alphabet::indexed(4);
    f.quadratic = {
        relation(a, {{"1", "x0x1"}, {"-q^3", "x1x0"}}),
        relation(a, {{"1", "x0x2"}, {"(1-q^4)/q", "x1x1"}, {"-1", "x2x0"}}),
        relation(a, {{"q^3", "x0x3"}, {"q^2*(q^2+1-q^4)", "x1x2"}, {"q-q^3-q^5", "x2x1"}, {"-1", "x3x0"}}),
        relation(a, {{"1", "x1x3"}, {"(1-q^6)/(q*(q^2+1))", "x2x2"}, {"-1", "x3x1"}}),
        relation(a, {{"1", "x2x3"}, {"-q^3", "x3x2"}})};
    f.cubic = {relation(a, {{"q^4-q^2+1", "x1x2x2"}, {"-q*(q^6+1)", "x2x1x2"}, {"(q^4-q^2+1)*q^4", "x2x2x1"}}),
               relation(a, {{"1", "x1x1x2"}, {"-q*(q^2+1)", "x1x2x1"}, {"q^4", "x2x1x1"}})};
    f.generators = {parse_word(a, "x0"), parse_word(a, "x1"), parse_word(a, "x1x2"), parse_word(a, "x2"),
                    parse_word(a, "x3")};
    f.dims = {1, 4, 11, 24, 46};
    out.push_back(std::move(f));
  }
  return out;
}

const PaperFixture& paper_fixture(unsigned n) {
  static const std::vector<PaperFixture> all = paper_fixtures();
  if (n < 1 || n > 3) throw DomainError("fixtures exist for n = 1, 2, 3");
  return all[n - 1];
}

} // namespace braidpbw
