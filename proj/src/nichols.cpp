#include "braidpbw/nichols.hpp"

#include "braidpbw/errors.hpp"

#include <algorithm>
#include <numeric>

namespace braidpbw {

namespace {

std::vector<Scalar> unit_vector(FieldSpec f, std::size_t size, std::size_t w) {
  std::vector<Scalar> v(size, Scalar::zero(f));
  v[w] = Scalar::one(f);
  return v;
}

std::vector<std::size_t> descending(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.rbegin(), o.rend(), std::size_t{0});
  return o;
}

} // namespace

Matrix symmetrizer(const Braiding& c, std::size_t n, Exec exec, std::size_t cap) {
  const FieldSpec f = c.field();
  const std::size_t size = checked_power(c.dim(), n, cap);
  Matrix s(f, size, size);
  for_each_index(size, exec, [&](std::size_t w) {
    std::vector<Scalar> v = unit_vector(f, size, w);
    for (std::size_t k = n; k >= 2; --k) {
      // Horner form of 1 + c_{k-1} + c_{k-1}c_{k-2} + ... on the first k slots.
      std::vector<Scalar> u = v;
      for (std::size_t i = 1; i < k; ++i) {
        std::vector<Scalar> next = v;
        c.apply_slot(u, next, n, i - 1);
        u = std::move(next);
      }
      v = std::move(u);
    }
    for (std::size_t r = 0; r < size; ++r) s(r, w) = std::move(v[r]);
  });
  return s;
}

Matrix symmetrizer_permutation_sum(const Braiding& c, std::size_t n, std::size_t cap) {
  const FieldSpec f = c.field();
  const std::size_t size = checked_power(c.dim(), n, cap);
  // Each permutation contributes the lift of a reduced word, read off the
  // adjacent swaps of a bubble sort.
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<std::size_t> p = perm, swaps;
    for (std::size_t pass = 0; pass < n; ++pass)
      for (std::size_t j = 0; j + 1 < n; ++j)
        if (p[j] > p[j + 1]) {
          std::swap(p[j], p[j + 1]);
          swaps.push_back(j);
        }
    words.push_back(std::move(swaps));
  } while (std::next_permutation(perm.begin(), perm.end()));

  Matrix s(f, size, size);
  for (std::size_t w = 0; w < size; ++w) {
    std::vector<Scalar> total(size, Scalar::zero(f));
    for (const auto& word : words) {
      std::vector<Scalar> v = unit_vector(f, size, w);
      for (std::size_t slot : word) {
        std::vector<Scalar> next(size, Scalar::zero(f));
        c.apply_slot(v, next, n, slot);
        v = std::move(next);
      }
      for (std::size_t r = 0; r < size; ++r)
        if (!v[r].is_zero()) total[r] += v[r];
    }
    for (std::size_t r = 0; r < size; ++r) s(r, w) = std::move(total[r]);
  }
  return s;
}

std::size_t nichols_dim(const Braiding& c, std::size_t n, const NicholsOptions& opts) {
  if (n == 0) return 1;
  return rank(symmetrizer(c, n, opts.exec, opts.space_cap), opts.rank, opts.exec);
}

Matrix ideal_component_nichols(const Braiding& c, std::size_t n, const NicholsOptions& opts) {
  const FieldSpec f = c.field();
  if (n == 0) return Matrix(f, 0, 1);
  const Matrix s = symmetrizer(c, n, opts.exec, opts.space_cap);
  // With columns processed from the lex-largest word down, every kernel vector
  // built from a free column w is w plus lex-larger words.
  const auto order = descending(s.cols());
  const Echelon e = echelonize(s, order, opts.exec);
  const Matrix k = kernel_basis(e, s.cols());
  return echelonize(k, {}, opts.exec).rows;
}

namespace {

Echelon lower_ideal_part(const Braiding& c, const Matrix& lower, Exec exec) {
  const std::size_t d = c.dim();
  const std::size_t below = lower.cols();
  Matrix j(c.field(), 0, below * d);
  std::vector<Scalar> row(below * d);
  for (std::size_t r = 0; r < lower.rows(); ++r)
    for (std::size_t x = 0; x < d; ++x) {
      std::fill(row.begin(), row.end(), Scalar::zero(c.field()));
      for (std::size_t w = 0; w < below; ++w)
        if (!lower(r, w).is_zero()) row[x * below + w] = lower(r, w);
      j.append_row(row);
      std::fill(row.begin(), row.end(), Scalar::zero(c.field()));
      for (std::size_t w = 0; w < below; ++w)
        if (!lower(r, w).is_zero()) row[w * d + x] = lower(r, w);
      j.append_row(row);
    }
  return echelonize(j, {}, exec);
}

} // namespace

std::vector<FreeElement> new_relations(const Braiding& c, std::size_t n, const NicholsOptions& opts) {
  if (n < 2) return {};
  const Matrix k = ideal_component_nichols(c, n, opts);
  const Matrix lower = ideal_component_nichols(c, n - 1, opts);
  // ker S_{n-1} is the degree n-1 slice of an ideal, so the lower degrees
  // generate X·ker S_{n-1} + ker S_{n-1}·X in degree n.
  const Echelon j = lower_ideal_part(c, lower, opts.exec);
  const Echelon ke = echelonize(k, {}, opts.exec);
  std::vector<bool> in_j(k.cols(), false);
  for (std::size_t p : j.pivots) in_j[p] = true;
  std::vector<FreeElement> out;
  for (std::size_t i = 0; i < ke.rank(); ++i) {
    if (in_j[ke.pivots[i]]) continue;
    auto r = reduce(j, ke.rows.row(i));
    out.push_back(from_dense(c.alphabet(), c.field(), r, n));
  }
  return out;
}

NicholsReport nichols_report(const Braiding& c, std::size_t n, const NicholsOptions& opts) {
  NicholsReport r;
  r.degree = n;
  const std::size_t total = checked_power(c.dim(), n, opts.space_cap);
  r.dim = nichols_dim(c, n, opts);
  r.ideal_dim = total - r.dim;
  r.exact = opts.rank.exact || c.field().kind != FieldKind::rational_functions ||
            total <= opts.rank.probabilistic_above;
  r.new_relations = new_relations(c, n, opts);
  return r;
}

Json report_to_json(const NicholsReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["dim"] = r.dim;
  j["ideal_dim"] = r.ideal_dim;
  j["exact"] = r.exact;
  j["relations"] = relations_to_json(r.new_relations);
  return j;
}

} // namespace braidpbw
