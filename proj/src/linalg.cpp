#include "braidpbw/linalg.hpp"

#include "braidpbw/errors.hpp"

#include <algorithm>
#include <numeric>

namespace braidpbw {

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_) throw DomainError("row width mismatch");
  for (const auto& x : r) require_same_field(field_, x.field());
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix s(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i)
    if (!b.data_[i].is_zero()) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (Scalar::from_int(b.field_, -1) * b); }

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_)
    if (!x.is_zero()) x = s * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (bkl.is_zero()) continue;
          r(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

namespace {

std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  return o;
}

// Plain Gauss-Jordan on a dense copy: the serial reference.
Echelon echelonize_dense(const Matrix& m, std::span<const std::size_t> order) {
  const FieldSpec f = m.field();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col : order) {
    if (rank == rows.size()) break;
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    auto& prow = rows[rank];
    if (!prow[col].is_one()) {
      Scalar inv = prow[col].inverse();
      for (auto& x : prow)
        if (!x.is_zero()) x = x * inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols; ++j)
      if (!prow[j].is_zero()) support.push_back(j);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Scalar factor = rows[i][col];
      for (std::size_t j : support) rows[i][j] -= factor * prow[j];
    }
    pivots.push_back(col);
    ++rank;
  }
  Echelon e{Matrix(f, 0, cols), std::move(pivots)};
  for (std::size_t i = 0; i < rank; ++i) e.rows.append_row(rows[i]);
  return e;
}

} // namespace

std::vector<Component> column_components(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> parent(cols);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<bool> touched(cols, false);
  std::vector<std::size_t> row_anchor(m.rows(), cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t first = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j).is_zero()) continue;
      touched[j] = true;
      if (first == cols) {
        first = j;
      } else {
        std::size_t a = find(first), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    row_anchor[i] = first;
  }
  std::vector<std::size_t> slot(cols, cols);
  std::vector<Component> comps;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!touched[j]) continue;
    std::size_t r = find(j);
    if (slot[r] == cols) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].cols.push_back(j);
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (row_anchor[i] != cols) comps[slot[find(row_anchor[i])]].rows.push_back(i);
  return comps;
}

Echelon echelonize(const Matrix& m, std::span<const std::size_t> column_order, Exec exec) {
  std::vector<std::size_t> natural;
  if (column_order.empty()) {
    natural = natural_order(m.cols());
    column_order = natural;
  }
  if (column_order.size() != m.cols()) throw DomainError("column order is not a permutation");
  if (exec == Exec::serial) return echelonize_dense(m, column_order);

  std::vector<std::size_t> position(m.cols());
  for (std::size_t k = 0; k < column_order.size(); ++k) position[column_order[k]] = k;

  auto comps = column_components(m);
  std::vector<Echelon> parts(comps.size());
  for_each_index(comps.size(), Exec::parallel, [&](std::size_t c) {
    const auto& comp = comps[c];
    Matrix sub = m.submatrix(comp.rows, comp.cols);
    // Local column order: component columns sorted by global position.
    std::vector<std::size_t> local(comp.cols.size());
    std::iota(local.begin(), local.end(), std::size_t{0});
    std::sort(local.begin(), local.end(),
              [&](std::size_t a, std::size_t b) { return position[comp.cols[a]] < position[comp.cols[b]]; });
    parts[c] = echelonize_dense(sub, local);
  });

  struct Piece {
    std::size_t comp, row, pivot;
  };
  std::vector<Piece> pieces;
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (std::size_t i = 0; i < parts[c].rank(); ++i)
      pieces.push_back({c, i, comps[c].cols[parts[c].pivots[i]]});
  std::sort(pieces.begin(), pieces.end(),
            [&](const Piece& a, const Piece& b) { return position[a.pivot] < position[b.pivot]; });

  Echelon e{Matrix(m.field(), 0, m.cols()), {}};
  std::vector<Scalar> full(m.cols(), Scalar::zero(m.field()));
  for (const auto& p : pieces) {
    std::fill(full.begin(), full.end(), Scalar::zero(m.field()));
    const auto& comp = comps[p.comp];
    auto r = parts[p.comp].rows.row(p.row);
    for (std::size_t j = 0; j < comp.cols.size(); ++j) full[comp.cols[j]] = r[j];
    e.rows.append_row(full);
    e.pivots.push_back(p.pivot);
  }
  return e;
}

Matrix kernel_basis(const Echelon& e, std::size_t cols) {
  const FieldSpec f = e.rows.field();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix k(f, 0, cols);
  std::vector<Scalar> v(cols, Scalar::zero(f));
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      const Scalar& x = e.rows(i, free);
      if (!x.is_zero()) v[e.pivots[i]] = -x;
    }
    k.append_row(v);
  }
  return k;
}

Matrix kernel_basis(const Matrix& m, Exec exec) { return kernel_basis(echelonize(m, {}, exec), m.cols()); }

std::size_t rank_exact(const Matrix& m, Exec exec) { return echelonize(m, {}, exec).rank(); }

std::vector<std::size_t> bareiss_pivots(const Matrix& m, std::span<const std::size_t> column_order) {
  if (m.field().kind != FieldKind::rationals) throw FieldMismatch("bareiss_pivots needs a matrix over Q");
  std::vector<std::size_t> natural;
  if (column_order.empty()) {
    natural = natural_order(m.cols());
    column_order = natural;
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  // Columns are stored in processing order.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& x = m(i, j).rational();
      if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const mpq_class& x = m(i, column_order[k]).rational();
      if (x != 0) a[i][k] = x.get_num() * (l / x.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t rank = 0;
  mpz_class t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[rank], a[sel]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        // a[i][j] = (a[r][c] a[i][j] - a[i][c] a[r][j]) / prev, exact.
        t = a[rank][col] * a[i][j];
        mpz_submul(t.get_mpz_t(), a[i][col].get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    pivots.push_back(column_order[col]);
    ++rank;
  }
  return pivots;
}

std::size_t rank_bareiss(const Matrix& m) { return bareiss_pivots(m).size(); }

std::vector<std::size_t> pivots_probabilistic(const Matrix& m, std::span<const std::size_t> column_order,
                                              std::mt19937_64& rng, Exec exec, int max_redraws) {
  if (m.field().kind != FieldKind::rational_functions)
    throw FieldMismatch("probabilistic elimination needs a matrix over Q(q)");
  std::vector<std::size_t> natural;
  if (column_order.empty()) {
    natural = natural_order(m.cols());
    column_order = natural;
  }
  if (column_order.size() != m.cols()) throw DomainError("column order is not a permutation");
  std::vector<std::size_t> position(m.cols());
  for (std::size_t k = 0; k < column_order.size(); ++k) position[column_order[k]] = k;

  auto comps = column_components(m);
  std::vector<std::vector<std::size_t>> orders(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto& o = orders[c];
    o.resize(comps[c].cols.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::sort(o.begin(), o.end(), [&](std::size_t x, std::size_t y) {
      return position[comps[c].cols[x]] < position[comps[c].cols[y]];
    });
  }

  // best[c][k]: largest rank seen for the first k+1 columns of block c.
  std::vector<std::vector<std::size_t>> best(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) best[c].assign(comps[c].cols.size(), 0);

  std::uniform_int_distribution<long> pick(1000, 1000000);
  int redraws = 0;
  for (int round = 0; round < 2;) {
    const mpq_class x(pick(rng));
    std::vector<std::vector<std::size_t>> found(comps.size());
    try {
      for_each_index(comps.size(), exec, [&](std::size_t c) {
        Matrix sub = m.submatrix(comps[c].rows, comps[c].cols);
        Matrix ev(FieldSpec::rationals(), sub.rows(), sub.cols());
        for (std::size_t i = 0; i < sub.rows(); ++i)
          for (std::size_t j = 0; j < sub.cols(); ++j)
            if (!sub(i, j).is_zero()) ev(i, j) = sub(i, j).eval_q(x);
        found[c] = bareiss_pivots(ev, orders[c]);
      });
    } catch (const ArithmeticError&) {
      if (++redraws > max_redraws) throw ResourceError("evaluation redraw budget exhausted");
      continue;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::vector<bool> is_pivot(comps[c].cols.size(), false);
      for (std::size_t p : found[c]) is_pivot[p] = true;
      std::size_t r = 0;
      for (std::size_t k = 0; k < orders[c].size(); ++k) {
        if (is_pivot[orders[c][k]]) ++r;
        best[c][k] = std::max(best[c][k], r);
      }
    }
    ++round;
  }

  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < orders[c].size(); ++k)
      if (best[c][k] > r) {
        r = best[c][k];
        pivots.push_back(comps[c].cols[orders[c][k]]);
      }
  }
  std::sort(pivots.begin(), pivots.end(), [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
  return pivots;
}

std::size_t rank_probabilistic(const Matrix& m, std::mt19937_64& rng, Exec exec, int max_redraws) {
  return pivots_probabilistic(m, {}, rng, exec, max_redraws).size();
}

std::size_t rank(const Matrix& m, const RankPolicy& policy, Exec exec) {
  if (!policy.exact && m.field().kind == FieldKind::rational_functions && m.cols() > policy.probabilistic_above) {
    std::mt19937_64 rng(policy.seed);
    return rank_probabilistic(m, rng, exec);
  }
  return rank_exact(m, exec);
}

std::vector<Scalar> reduce(const Echelon& e, std::span<const Scalar> v) {
  if (v.size() != e.rows.cols()) throw DomainError("vector width does not match the basis");
  std::vector<Scalar> r(v.begin(), v.end());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Scalar x = r[e.pivots[i]];
    if (x.is_zero()) continue;
    auto row = e.rows.row(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!row[j].is_zero()) r[j] -= x * row[j];
  }
  return r;
}

bool in_span(std::span<const Scalar> v, const Matrix& basis) {
  if (v.size() != basis.cols()) throw DomainError("vector width does not match the basis");
  for (const auto& x : v) require_same_field(basis.field(), x.field());
  auto r = reduce(echelonize(basis), v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace braidpbw
