#pragma once

#include "braidpbw/braiding.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace braidpbw {

/// Element of the free algebra T(V) = kX. Zero coefficients are never stored.
class FreeElement {
public:
  FreeElement() = default;
  FreeElement(Alphabet a, FieldSpec f) : alphabet_(std::move(a)), field_(f) {}
  static FreeElement monomial(const Alphabet& a, FieldSpec f, const Word& w);
  static FreeElement constant(const Alphabet& a, const Scalar& s);

  const Alphabet& alphabet() const { return alphabet_; }
  FieldSpec field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;
  // Common length of all words, or nullopt for zero and inhomogeneous elements.
  std::optional<std::size_t> degree() const;

  void add(const Word& w, const Scalar& s);

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Scalar& s, const FreeElement& a);
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  // e.g. "x0x1 - (q)*x1x0"; zero prints as "0".
  std::string to_string() const;

private:
  Alphabet alphabet_;
  FieldSpec field_;
  std::map<Word, Scalar> terms_;
};

/// Concatenation product; throws AlphabetMismatch for different alphabets.
FreeElement concat_mult(const FreeElement& a, const FreeElement& b);

// Degree-n slice as a dense vector indexed by word_index, and back.
std::vector<Scalar> to_dense(const FreeElement& a, std::size_t n);
FreeElement from_dense(const Alphabet& a, FieldSpec f, std::span<const Scalar> v, std::size_t n);

/// Element of T(V)⊗T(V).
class TensorSquareElement {
public:
  using Key = std::pair<Word, Word>;
  TensorSquareElement() = default;
  TensorSquareElement(Alphabet a, FieldSpec f) : alphabet_(std::move(a)), field_(f) {}
  static TensorSquareElement pure(const Alphabet& a, FieldSpec f, const Word& left, const Word& right);

  const Alphabet& alphabet() const { return alphabet_; }
  FieldSpec field() const { return field_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& left, const Word& right) const;
  void add(const Word& left, const Word& right, const Scalar& s);

  friend TensorSquareElement operator+(const TensorSquareElement& a, const TensorSquareElement& b);
  friend TensorSquareElement operator-(const TensorSquareElement& a, const TensorSquareElement& b);
  friend TensorSquareElement operator*(const Scalar& s, const TensorSquareElement& a);
  friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b) {
    return a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  Alphabet alphabet_;
  FieldSpec field_;
  std::map<Key, Scalar> terms_;
};

// a ⊗ b for free elements.
TensorSquareElement tensor(const FreeElement& a, const FreeElement& b);

/// Guards on expansion sizes; exceeding them throws ResourceError.
struct ExpansionCaps {
  std::size_t max_degree = 8;
  std::size_t max_dim = 4;
};

/// (a⊗a')(b⊗b') = Σ a b'' ⊗ a'' b' where c_{l(a'),l(b)}(a'⊗b) = Σ b''⊗a''.
TensorSquareElement braided_square_mult(const Braiding& c, const TensorSquareElement& A,
                                        const TensorSquareElement& B, const ExpansionCaps& caps = {});

/// Δ with V primitive: Δ(x1...xn) = Π (xi⊗1 + 1⊗xi) in the braided square.
TensorSquareElement coproduct(const Braiding& c, const FreeElement& a, const ExpansionCaps& caps = {});

/// Coefficient of the empty word.
Scalar counit(const FreeElement& a);

/// Iterated braided commutators [u]_r, memoized per instance. r must satisfy
/// the braid equation and have the left triangular shape (zero diagonal
/// coefficients allowed, so the zero map qualifies).
class Commutators {
public:
  // Throws DomainError when r is not admissible.
  explicit Commutators(Braiding r);
  const Braiding& r() const { return r_; }
  const FreeElement& operator()(const Word& u);

private:
  Braiding r_;
  std::map<Word, FreeElement> memo_;
};

FreeElement commutator(const Braiding& r, const Word& u);

// [{"coeff": literal, "word": [names]}, ...]
Json free_element_to_json(const FreeElement& a);
// Parses a JSON list of relations from source text; errors carry line/column.
std::vector<FreeElement> relations_from_json_text(std::string_view text, const Alphabet& a, FieldSpec f);
Json relations_to_json(const std::vector<FreeElement>& rels);

} // namespace braidpbw
