#pragma once

#include "braidpbw/nichols.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace braidpbw {

enum class IdealMode { generators, nichols_kernel };

/// Degree-n slice of a graded ideal. Leading words are the lex-smallest
/// monomials of its elements, ascending.
struct IdealComponent {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::vector<Word> leading_words;
  // False when dim and leading words come from probabilistic elimination.
  bool exact = true;
};

/// Homogeneous ideal I of T(V), given by generators (the two-sided span is
/// computed degreewise; no coideal closure) or as the Nichols ideal ker S.
class GradedIdealPresentation {
public:
  // Generators must be homogeneous of degree >= 2.
  static GradedIdealPresentation from_generators(Braiding c, std::vector<FreeElement> generators,
                                                 std::size_t degree_cap, NicholsOptions opts = {});
  static GradedIdealPresentation nichols_kernel(Braiding c, std::size_t degree_cap, NicholsOptions opts = {});

  IdealMode mode() const { return mode_; }
  const Braiding& braiding() const { return braiding_; }
  const std::vector<FreeElement>& generators() const { return generators_; }
  std::size_t degree_cap() const { return degree_cap_; }
  const NicholsOptions& options() const { return opts_; }

  /// Cached; throws ResourceError above the degree cap.
  const IdealComponent& component(std::size_t n) const;
  /// Exact lex-ordered reduced echelon basis of I_n; cached.
  const Echelon& basis(std::size_t n) const;

  /// Same ideal with every word reversed, over τcτ.
  GradedIdealPresentation reversed() const;

private:
  struct Cache;
  GradedIdealPresentation() = default;
  IdealMode mode_ = IdealMode::generators;
  Braiding braiding_;
  std::vector<FreeElement> generators_;
  std::size_t degree_cap_ = 4;
  NicholsOptions opts_;
  std::shared_ptr<Cache> cache_;
};

/// Basis of I_n as rows over the degree-n words.
Matrix ideal_component(const GradedIdealPresentation& p, std::size_t n);

/// Pivot words of the subspace when columns are ordered lex-ascending.
std::vector<Word> leading_words(const Matrix& subspace, std::size_t n, std::size_t d);

/// Lyndon words up to the degree cap that are not leading words, lex-ascending.
std::vector<Word> pbw_generators(const GradedIdealPresentation& p);

struct HeightRecord {
  enum class Kind { finite, infinite, at_least };
  Kind kind = Kind::infinite;
  std::size_t value = 0;
  // How the record was obtained.
  std::string reason;

  friend bool operator==(const HeightRecord& a, const HeightRecord& b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

/// h(u) for u in S. Only exponents of the admissible shape t·p^l are tested,
/// where t is the multiplicative order of γ_{u,u}.
HeightRecord height(const GradedIdealPresentation& p, const Word& u);

struct PBWGenerator {
  Word word;
  HeightRecord height;
};

struct DegreeDims {
  std::size_t degree = 0;
  std::size_t quotient_dim = 0;
  std::size_t monomial_count = 0;
  bool exact = true;
};

struct PBWData {
  Alphabet alphabet;
  IdealMode mode = IdealMode::generators;
  std::vector<PBWGenerator> generators;
  // Set by the right-triangular transfer: S is ordered by reversed lex.
  bool reversed_order = false;
  std::vector<DegreeDims> dims;
};

/// Generators, heights and the dimension table up to the degree cap.
/// Throws DomainError unless the braiding is left triangular.
PBWData compute_pbw(const GradedIdealPresentation& p);

/// Degree-n words s1^e1 ... st^et with s1 > ... > st in the data's order and
/// 0 < ei < h(si), leading generator descending.
std::vector<Word> pbw_monomials(const PBWData& data, std::size_t n);

struct DimensionVerdict {
  std::size_t degree = 0;
  std::size_t quotient_dim = 0;
  std::size_t monomial_count = 0;
  // Set when the independence checks were run.
  std::optional<bool> monomials_independent;
  std::optional<bool> commutators_independent;

  bool passed() const {
    return quotient_dim == monomial_count && monomials_independent.value_or(true) &&
           commutators_independent.value_or(true);
  }
};

inline constexpr std::size_t independence_max_degree = 4;
inline constexpr std::size_t independence_max_dim = 3;

/// Compares dim of the degree-n quotient with the number of PBW monomials and,
/// for n <= 4 and dim V <= 3, checks that B and [B]_c are independent modulo I_n.
DimensionVerdict dimension_check(const GradedIdealPresentation& p, const PBWData& data, std::size_t n);

/// Runs the left pipeline on the reversed ideal over τcτ and reverses the
/// generators back. Throws DomainError unless the braiding is right triangular.
PBWData transfer_right_triangular(const GradedIdealPresentation& p);

Json height_to_json(const HeightRecord& h);
Json pbw_to_json(const PBWData& data);

} // namespace braidpbw
