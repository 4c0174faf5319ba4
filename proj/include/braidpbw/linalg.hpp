#pragma once

#include "braidpbw/parallel.hpp"
#include "braidpbw/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace braidpbw {

/// Dense row-major matrix over one exact field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  // Every row must have `cols` entries in field f.
  static Matrix from_rows(FieldSpec f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> r);
  bool is_zero() const;
  Matrix transpose() const;
  // Rows listed in `rows`, columns listed in `cols` (in the given order).
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form. `rows` holds only the nonzero rows; row i has a
/// leading 1 in column pivots[i], and pivots follow the requested column
/// order.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots are searched column by column following
/// column_order (natural order when empty), taking the first nonzero row.
/// Exec::parallel splits the matrix into independent column components and
/// eliminates them concurrently; the result is identical to Exec::serial.
Echelon echelonize(const Matrix& m, std::span<const std::size_t> column_order = {},
                   Exec exec = Exec::parallel);

/// Groups of columns that share no row support with any other group. Each
/// component lists its columns ascending; rows touching it are returned
/// alongside.
struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
std::vector<Component> column_components(const Matrix& m);

/// Rows form a basis of {v : m v = 0}; one row per non-pivot column.
Matrix kernel_basis(const Matrix& m, Exec exec = Exec::parallel);
Matrix kernel_basis(const Echelon& e, std::size_t cols);

std::size_t rank_exact(const Matrix& m, Exec exec = Exec::parallel);

/// Fraction-free (Bareiss) rank of a matrix over Q.
std::size_t rank_bareiss(const Matrix& m);
/// Pivot columns of a matrix over Q when columns are processed in
/// column_order (natural when empty), by fraction-free elimination.
std::vector<std::size_t> bareiss_pivots(const Matrix& m, std::span<const std::size_t> column_order = {});

/// Rank of a Q(q) matrix from two random specializations q = x with x drawn
/// from [1000, 10^6]; the maximum of the two ranks is returned. This is a
/// lower bound that equals the true rank unless both points are roots of a
/// nonzero minor. Points hitting a denominator zero are redrawn; more than
/// `max_redraws` redraws throw ResourceError.
std::size_t rank_probabilistic(const Matrix& m, std::mt19937_64& rng, Exec exec = Exec::parallel,
                               int max_redraws = 32);

/// Pivot columns (in column_order) of a Q(q) matrix from two random
/// specializations: for every prefix of the order the larger of the two
/// prefix ranks is kept. Same caveats as rank_probabilistic.
std::vector<std::size_t> pivots_probabilistic(const Matrix& m, std::span<const std::size_t> column_order,
                                              std::mt19937_64& rng, Exec exec = Exec::parallel,
                                              int max_redraws = 32);

struct RankPolicy {
  bool exact = false;
  std::uint64_t seed = 20240607;
  // Q(q) matrices with more columns than this use rank_probabilistic.
  std::size_t probabilistic_above = 64;
};
std::size_t rank(const Matrix& m, const RankPolicy& policy, Exec exec = Exec::parallel);

/// Residual of v after reducing by an echelon basis (zero iff v is in the span).
std::vector<Scalar> reduce(const Echelon& e, std::span<const Scalar> v);
bool in_span(std::span<const Scalar> v, const Matrix& basis);

} // namespace braidpbw
