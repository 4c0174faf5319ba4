#pragma once

#include "braidpbw/json_io.hpp"
#include "braidpbw/linalg.hpp"
#include "braidpbw/words.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace braidpbw {

class Braiding;

/// Diagonal braiding d(x⊗y) = γ_{x,y} y⊗x.
class DiagonalBraiding {
public:
  DiagonalBraiding() = default;
  // gamma is d×d, gamma[x][y] = γ_{x,y}.
  DiagonalBraiding(Alphabet alphabet, std::vector<std::vector<Scalar>> gamma);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return alphabet_.size(); }
  FieldSpec field() const;
  const Scalar& gamma(Letter x, Letter y) const { return gamma_[x][y]; }
  const std::vector<std::vector<Scalar>>& table() const { return gamma_; }

  /// γ_{u,v} = Π γ_{u_i,v_j}; 1 when either word is empty.
  Scalar gamma_extend(const Word& u, const Word& v) const;

  /// d^{-1}, itself diagonal: d^{-1}(x⊗y) = γ_{y,x}^{-1} y⊗x.
  DiagonalBraiding inverse() const;
  Braiding to_braiding() const;

  friend bool operator==(const DiagonalBraiding&, const DiagonalBraiding&) = default;

private:
  Alphabet alphabet_;
  std::vector<std::vector<Scalar>> gamma_;
};

struct BraidCheck {
  bool ok = false;
  bool invertible = false;
  // First basis triple where the two sides differ.
  std::optional<Word> witness;
};

/// Linear endomorphism c of V⊗V in an ordered basis. Matrix convention:
/// c(x_i⊗x_j) = Σ entry[(k,l),(i,j)] x_k⊗x_l with pair index first·d + second,
/// so column (i,j) is the image of x_i⊗x_j.
///
/// Verdicts are computed lazily and cached; copies share the cache.
class Braiding {
public:
  struct Term {
    Letter first;
    Letter second;
    Scalar coeff;
  };

  Braiding();
  // Throws DomainError unless the matrix is d²×d².
  Braiding(Alphabet alphabet, Matrix matrix);

  static Braiding flip(FieldSpec f, const Alphabet& a);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return alphabet_.size(); }
  FieldSpec field() const { return matrix_.field(); }
  const Matrix& matrix() const { return matrix_; }
  // Coefficient of x_k⊗x_l in c(x_i⊗x_j).
  const Scalar& coeff(Letter k, Letter l, Letter i, Letter j) const;
  // Nonzero terms of c(x_i⊗x_j).
  const std::vector<Term>& image(Letter i, Letter j) const { return columns_[i * dim() + j]; }

  /// Applies c at positions (slot, slot+1) of a dense vector over words of
  /// length n; the result is added into out.
  void apply_slot(std::span<const Scalar> in, std::span<Scalar> out, std::size_t n, std::size_t slot) const;
  /// Sparse variant on word-indexed maps; all words must share one length.
  std::map<Word, Scalar> apply_slot(const std::map<Word, Scalar>& in, std::size_t slot) const;

  const BraidCheck& braid_check() const;
  bool satisfies_braid_equation() const { return braid_check().ok; }
  bool invertible() const { return braid_check().invertible; }
  const std::optional<DiagonalBraiding>& left_diagonal() const;
  const std::optional<DiagonalBraiding>& right_diagonal() const;
  bool is_left_triangular() const { return left_diagonal().has_value(); }
  bool is_right_triangular() const { return right_diagonal().has_value(); }

  friend bool operator==(const Braiding& a, const Braiding& b) {
    return a.alphabet_ == b.alphabet_ && a.matrix_ == b.matrix_;
  }

private:
  struct Cache;
  Alphabet alphabet_;
  Matrix matrix_;
  std::vector<std::vector<Term>> columns_;
  std::shared_ptr<Cache> cache_;
};

BraidCheck check_braid_equation(const Braiding& c);

/// Left triangular: c(x⊗y) = γ_{x,y} y⊗x + Σ_{z>y} z⊗v_{x,y,z}. Returns the
/// diagonal component, or nullopt. Zero diagonal coefficients are reported
/// through `warnings` when given.
std::optional<DiagonalBraiding> check_left_triangular(const Braiding& c,
                                                      std::vector<std::string>* warnings = nullptr);
/// Right triangular: c(x⊗y) = β_{x,y} y⊗x + Σ_{z>x} w_{x,y,z}⊗z.
std::optional<DiagonalBraiding> check_right_triangular(const Braiding& c,
                                                       std::vector<std::string>* warnings = nullptr);

inline constexpr std::size_t default_lift_cap = 1024;

/// Matrix of c_{n,m}: V^{⊗n}⊗V^{⊗m} → V^{⊗m}⊗V^{⊗n}, on words of length n+m.
/// Throws ResourceError when d^{n+m} exceeds cap.
Matrix lift(const Braiding& c, std::size_t n, std::size_t m, std::size_t cap = default_lift_cap);

/// c_{l(u),l(v)}(u⊗v) as a map (v', u') → coefficient.
std::map<std::pair<Word, Word>, Scalar> lift_apply(const Braiding& c, const Word& u, const Word& v);

/// τcτ on the same basis.
Braiding flip_conjugate(const Braiding& c);

/// c in the basis (x_{perm[0]}, x_{perm[1]}, ...).
Braiding permute_basis(const Braiding& c, const std::vector<std::size_t>& perm);

inline constexpr std::size_t default_search_cap = 8;

/// First permutation (in lexicographic order of permutations) making c left
/// triangular. Throws ResourceError when dim exceeds cap.
std::optional<std::vector<std::size_t>> search_triangular_order(const Braiding& c,
                                                                std::size_t cap = default_search_cap);

// {"field", "basis", "matrix"}; literal errors carry line/column.
Braiding braiding_from_json_text(std::string_view text);
Json braiding_to_json(const Braiding& c);

} // namespace braidpbw
