#pragma once

#include "braidpbw/freealg.hpp"

namespace braidpbw {

inline constexpr std::size_t default_space_cap = 4096;

struct NicholsOptions {
  RankPolicy rank;
  Exec exec = Exec::parallel;
  // Largest admissible d^n.
  std::size_t space_cap = default_space_cap;
};

/// Quantum symmetrizer S_n on V^{⊗n}: S_1 = id and
/// S_n = (S_{n-1}⊗id)(id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1),
/// evaluated column by column. Exec::parallel distributes columns.
Matrix symmetrizer(const Braiding& c, std::size_t n, Exec exec = Exec::parallel,
                   std::size_t cap = default_space_cap);

/// S_n as the sum over all permutations of their braid lifts (reduced words).
/// Factorial cost; kept as a reference.
Matrix symmetrizer_permutation_sum(const Braiding& c, std::size_t n, std::size_t cap = 256);

/// dim B^n(V) = rank S_n; probabilistic per options.rank.
std::size_t nichols_dim(const Braiding& c, std::size_t n, const NicholsOptions& opts = {});

/// Exact basis of ker S_n (rows over words of length n, lex-indexed).
Matrix ideal_component_nichols(const Braiding& c, std::size_t n, const NicholsOptions& opts = {});

/// Basis of ker S_n modulo X·ker S_{n-1} + ker S_{n-1}·X, as echelonized
/// representatives with lex-ascending leading words of coefficient 1.
std::vector<FreeElement> new_relations(const Braiding& c, std::size_t n, const NicholsOptions& opts = {});

struct NicholsReport {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t ideal_dim = 0;
  bool exact = true;
  std::vector<FreeElement> new_relations;
};

NicholsReport nichols_report(const Braiding& c, std::size_t n, const NicholsOptions& opts = {});
Json report_to_json(const NicholsReport& r);

} // namespace braidpbw
