#pragma once

#include "braidpbw/freealg.hpp"

#include <string>
#include <vector>

namespace braidpbw {

enum class BasisNormalization {
  divided_power,  // F x_i = [i+1] x_{i+1}, E x_i = [n-i+1] x_{i-1}
  power,          // F x_i = x_{i+1},       E x_i = [i][n-i+1] x_{i-1}
};

/// Simple U_q(sl2)-module L(n) of type +1 over Q(q), basis x0..xn.
struct UqModuleData {
  unsigned n = 0;
  Alphabet alphabet;
  // Weight of x_i in units of α/2: n - 2i.
  std::vector<int> weights;
  Matrix E, F;
  BasisNormalization basis = BasisNormalization::divided_power;
  // x_i is rescaled by signs[i].
  std::vector<int> signs;
};

/// Throws DomainError unless 1 <= n <= 3 or if EF - FE = [n-2i] fails on
/// some basis vector. Empty signs means all +1.
UqModuleData build_module(unsigned n, BasisNormalization basis = BasisNormalization::divided_power,
                          std::vector<int> signs = {});

/// f(a, b) for weights a, b in units of α/2: q^{-(3+ab)/2} for odd n and
/// q^{-2-ab/2} for even n.
Scalar weight_factor(unsigned n, int a, int b);

struct BraidingConvention {
  int quasi_sign = 1;        // sign in s_k
  bool inverted_q = false;   // s_k uses q^{-1} in place of q
  BasisNormalization basis = BasisNormalization::divided_power;
  std::vector<int> signs;    // basis rescaling, signs[0] = +1

  std::string describe() const;
};

/// c(x_i⊗x_j) = f(wt x_j, wt x_i) Σ_k s_k F^k x_j ⊗ E^k x_i with
/// s_k = sign^k Q^{-k(k-1)/2} (Q - Q^{-1})^k / [k]!, Q = q or q^{-1}.
Braiding braiding_with_convention(unsigned n, const BraidingConvention& conv);

struct UqBraiding {
  Braiding braiding;
  BraidingConvention convention;
  UqModuleData module;
};

/// Tries conventions in a fixed order and returns the first whose braiding
/// reproduces the printed degree-2 relations, is left triangular for
/// x0 < ... < xn, right triangular for the reversed order xn < ... < x0, and
/// satisfies the braid equation. Throws DomainError when none does.
UqBraiding build_braiding(unsigned n);

struct PaperFixture {
  unsigned n = 0;
  std::vector<FreeElement> quadratic;
  std::vector<FreeElement> cubic;
  std::vector<Word> generators;
  // Quotient dimensions in degrees 0, 1, 2, ...
  std::vector<std::size_t> dims;
};

/// Printed relations and expected PBW data for L(1), L(2), L(3).
std::vector<PaperFixture> paper_fixtures();
const PaperFixture& paper_fixture(unsigned n);

/// True iff the degree-2 kernel of id + c equals the span of `relations`.
bool quadratic_kernel_matches(const Braiding& c, const std::vector<FreeElement>& relations);

} // namespace braidpbw
