#include "braidpbw/braiding.hpp"

#include "braidpbw/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace braidpbw {

DiagonalBraiding::DiagonalBraiding(Alphabet alphabet, std::vector<std::vector<Scalar>> gamma)
    : alphabet_(std::move(alphabet)), gamma_(std::move(gamma)) {
  if (gamma_.size() != alphabet_.size()) throw DomainError("diagonal table size does not match the alphabet");
  for (const auto& row : gamma_) {
    if (row.size() != alphabet_.size()) throw DomainError("diagonal table is not square");
    for (const auto& g : row) require_same_field(gamma_[0][0].field(), g.field());
  }
}

FieldSpec DiagonalBraiding::field() const { return gamma_.at(0).at(0).field(); }

Scalar DiagonalBraiding::gamma_extend(const Word& u, const Word& v) const {
  Scalar r = Scalar::one(field());
  for (Letter a : u.letters())
    for (Letter b : v.letters()) r *= gamma_.at(a).at(b);
  return r;
}

DiagonalBraiding DiagonalBraiding::inverse() const {
  const std::size_t d = dim();
  std::vector<std::vector<Scalar>> g(d, std::vector<Scalar>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) g[x][y] = gamma_[y][x].inverse();
  return DiagonalBraiding(alphabet_, std::move(g));
}

Braiding DiagonalBraiding::to_braiding() const {
  const std::size_t d = dim();
  Matrix m(field(), d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) m(y * d + x, x * d + y) = gamma_[x][y];
  return Braiding(alphabet_, std::move(m));
}

struct Braiding::Cache {
  std::once_flag braid_once, left_once, right_once;
  BraidCheck braid;
  std::optional<DiagonalBraiding> left, right;
};

Braiding::Braiding() : cache_(std::make_shared<Cache>()) {}

Braiding::Braiding(Alphabet alphabet, Matrix matrix)
    : alphabet_(std::move(alphabet)), matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  const std::size_t d = alphabet_.size();
  if (matrix_.rows() != d * d || matrix_.cols() != d * d)
    throw DomainError("braiding matrix must be " + std::to_string(d * d) + "x" + std::to_string(d * d));
  columns_.resize(d * d);
  for (std::size_t col = 0; col < d * d; ++col)
    for (std::size_t row = 0; row < d * d; ++row) {
      const Scalar& x = matrix_(row, col);
      if (!x.is_zero()) columns_[col].push_back({static_cast<Letter>(row / d), static_cast<Letter>(row % d), x});
    }
}

Braiding Braiding::flip(FieldSpec f, const Alphabet& a) {
  const std::size_t d = a.size();
  Matrix m(f, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(j * d + i, i * d + j) = Scalar::one(f);
  return Braiding(a, std::move(m));
}

const Scalar& Braiding::coeff(Letter k, Letter l, Letter i, Letter j) const {
  const std::size_t d = dim();
  return matrix_(k * d + l, i * d + j);
}

void Braiding::apply_slot(std::span<const Scalar> in, std::span<Scalar> out, std::size_t n, std::size_t slot) const {
  const std::size_t d = dim();
  if (slot + 1 >= n) throw DomainError("apply_slot: slot out of range");
  std::size_t s2 = 1;
  for (std::size_t p = slot + 2; p < n; ++p) s2 *= d;
  const std::size_t s1 = s2 * d;
  for (std::size_t w = 0; w < in.size(); ++w) {
    const Scalar& x = in[w];
    if (x.is_zero()) continue;
    const std::size_t a = (w / s1) % d, b = (w / s2) % d;
    const std::size_t base = w - a * s1 - b * s2;
    for (const Term& t : columns_[a * d + b]) out[base + t.first * s1 + t.second * s2] += t.coeff * x;
  }
}

std::map<Word, Scalar> Braiding::apply_slot(const std::map<Word, Scalar>& in, std::size_t slot) const {
  std::map<Word, Scalar> out;
  for (const auto& [w, x] : in) {
    if (slot + 1 >= w.size()) throw DomainError("apply_slot: slot out of range");
    Word v = w;
    for (const Term& t : columns_[w[slot] * dim() + w[slot + 1]]) {
      v.letters()[slot] = t.first;
      v.letters()[slot + 1] = t.second;
      auto [it, inserted] = out.try_emplace(v, t.coeff * x);
      if (!inserted) {
        it->second += t.coeff * x;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

const BraidCheck& Braiding::braid_check() const {
  std::call_once(cache_->braid_once, [&] { cache_->braid = check_braid_equation(*this); });
  return cache_->braid;
}

const std::optional<DiagonalBraiding>& Braiding::left_diagonal() const {
  std::call_once(cache_->left_once, [&] { cache_->left = check_left_triangular(*this); });
  return cache_->left;
}

const std::optional<DiagonalBraiding>& Braiding::right_diagonal() const {
  std::call_once(cache_->right_once, [&] { cache_->right = check_right_triangular(*this); });
  return cache_->right;
}

BraidCheck check_braid_equation(const Braiding& c) {
  const std::size_t d = c.dim();
  const std::size_t n3 = d * d * d;
  const FieldSpec f = c.field();
  BraidCheck r;
  r.ok = true;
  auto run = [&](std::size_t w, std::initializer_list<std::size_t> slots) {
    std::vector<Scalar> v(n3, Scalar::zero(f));
    v[w] = Scalar::one(f);
    for (std::size_t s : slots) {
      std::vector<Scalar> next(n3, Scalar::zero(f));
      c.apply_slot(v, next, 3, s);
      v = std::move(next);
    }
    return v;
  };
  for (std::size_t w = 0; w < n3 && r.ok; ++w) {
    // (c⊗id)(id⊗c)(c⊗id) versus (id⊗c)(c⊗id)(id⊗c), rightmost factor first.
    if (run(w, {0, 1, 0}) != run(w, {1, 0, 1})) {
      r.ok = false;
      r.witness = word_from_index(w, 3, d);
    }
  }
  r.invertible = rank_exact(c.matrix()) == d * d;
  return r;
}

namespace {

enum class Side { left, right };

std::optional<DiagonalBraiding> check_triangular(const Braiding& c, Side side, std::vector<std::string>* warnings) {
  const std::size_t d = c.dim();
  std::vector<std::vector<Scalar>> gamma(d, std::vector<Scalar>(d, Scalar::zero(c.field())));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      for (const auto& t : c.image(static_cast<Letter>(x), static_cast<Letter>(y))) {
        if (t.first == y && t.second == x) {
          gamma[x][y] = t.coeff;
          continue;
        }
        // Left: forbidden z⊗t with z < y, or y⊗t with t != x.
        // Right: forbidden t⊗z with z < x, or t⊗x with t != y.
        const bool allowed = side == Side::left ? t.first > y : t.second > x;
        if (!allowed) return std::nullopt;
      }
      if (gamma[x][y].is_zero() && warnings)
        warnings->push_back("diagonal coefficient of (" + c.alphabet().name(static_cast<Letter>(x)) + ", " +
                            c.alphabet().name(static_cast<Letter>(y)) + ") is zero; c is not bijective");
    }
  return DiagonalBraiding(c.alphabet(), std::move(gamma));
}

} // namespace

std::optional<DiagonalBraiding> check_left_triangular(const Braiding& c, std::vector<std::string>* warnings) {
  return check_triangular(c, Side::left, warnings);
}

std::optional<DiagonalBraiding> check_right_triangular(const Braiding& c, std::vector<std::string>* warnings) {
  return check_triangular(c, Side::right, warnings);
}

Matrix lift(const Braiding& c, std::size_t n, std::size_t m, std::size_t cap) {
  const std::size_t d = c.dim();
  const std::size_t len = n + m;
  const std::size_t size = checked_power(d, len, cap);
  const FieldSpec f = c.field();
  Matrix out(f, size, size);
  std::vector<std::size_t> slots;
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = k; j < k + m; ++j) slots.push_back(j);
  for (std::size_t w = 0; w < size; ++w) {
    std::vector<Scalar> v(size, Scalar::zero(f));
    v[w] = Scalar::one(f);
    for (std::size_t s : slots) {
      std::vector<Scalar> next(size, Scalar::zero(f));
      c.apply_slot(v, next, len, s);
      v = std::move(next);
    }
    for (std::size_t r = 0; r < size; ++r) out(r, w) = std::move(v[r]);
  }
  return out;
}

std::map<std::pair<Word, Word>, Scalar> lift_apply(const Braiding& c, const Word& u, const Word& v) {
  const std::size_t n = u.size(), m = v.size();
  std::map<Word, Scalar> cur{{u + v, Scalar::one(c.field())}};
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = k; j < k + m; ++j) cur = c.apply_slot(cur, j);
  std::map<std::pair<Word, Word>, Scalar> out;
  for (auto& [w, x] : cur) out.emplace(std::make_pair(w.substr(0, m), w.substr(m)), std::move(x));
  return out;
}

Braiding flip_conjugate(const Braiding& c) {
  const std::size_t d = c.dim();
  Matrix m(c.field(), d * d, d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(k * d + l, i * d + j) = c.matrix()(l * d + k, j * d + i);
  return Braiding(c.alphabet(), std::move(m));
}

Braiding permute_basis(const Braiding& c, const std::vector<std::size_t>& perm) {
  const std::size_t d = c.dim();
  if (perm.size() != d) throw DomainError("permutation size does not match the alphabet");
  std::vector<std::string> names;
  for (std::size_t p : perm) names.push_back(c.alphabet().name(static_cast<Letter>(p)));
  Matrix m(c.field(), d * d, d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          m(k * d + l, i * d + j) = c.matrix()(perm[k] * d + perm[l], perm[i] * d + perm[j]);
  return Braiding(Alphabet(std::move(names)), std::move(m));
}

std::optional<std::vector<std::size_t>> search_triangular_order(const Braiding& c, std::size_t cap) {
  const std::size_t d = c.dim();
  if (d > cap)
    throw ResourceError("triangular order search: dimension " + std::to_string(d) + " exceeds the cap of " +
                        std::to_string(cap));
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (check_left_triangular(permute_basis(c, perm))) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Braiding braiding_from_json_text(std::string_view text) {
  Json j = parse_json_text(text);
  auto fail = [&](const std::string& msg, SourcePos p = {}) { throw ParseError(msg, p.line, p.column); };
  if (!j.is_object()) fail("braiding file must be a JSON object");
  for (const char* key : {"field", "basis", "matrix"})
    if (!j.contains(key)) fail(std::string("braiding file lacks \"") + key + "\"");
  if (!j["field"].is_string()) fail("\"field\" must be a string", locate_value(text, "field", 0, 0));
  FieldSpec field;
  try {
    field = FieldSpec::parse(j["field"].get<std::string>());
  } catch (const DomainError& e) {
    fail(e.what(), locate_value(text, "field", 0, 0));
  }
  if (!j["basis"].is_array()) fail("\"basis\" must be an array", locate_value(text, "basis", 0, 0));
  std::vector<std::string> names;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) fail("basis entries must be strings", locate_value(text, "basis", 0, names.size()));
    names.push_back(b.get<std::string>());
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const DomainError& e) {
    fail(e.what(), locate_value(text, "basis", 0, 0));
  }
  const std::size_t n = names.size() * names.size();
  const Json& mj = j["matrix"];
  if (!mj.is_array() || mj.size() != n)
    fail("\"matrix\" must have " + std::to_string(n) + " rows", locate_value(text, "matrix", 0, 0));
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!mj[r].is_array() || mj[r].size() != n)
      fail("matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries",
           locate_value(text, "matrix", 0, r * n));
    for (std::size_t col = 0; col < n; ++col)
      m(r, col) = scalar_from_json(mj[r][col], field, locate_value(text, "matrix", 0, r * n + col));
  }
  return Braiding(std::move(alphabet), std::move(m));
}

Json braiding_to_json(const Braiding& c) {
  Json j;
  j["field"] = c.field().name();
  j["basis"] = c.alphabet().names();
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.matrix().rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : c.matrix().row(r)) row.push_back(scalar_to_json_literal(x));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

} // namespace braidpbw
