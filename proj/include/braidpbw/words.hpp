#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace braidpbw {

using Letter = std::uint8_t;

/// Totally ordered finite alphabet; the order is the list order.
class Alphabet {
public:
  Alphabet() = default;
  // Throws DomainError on an empty list, duplicate names or more than 255 letters.
  explicit Alphabet(std::vector<std::string> names);
  // x0, x1, ..., x{n-1}
  static Alphabet indexed(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws DomainError for an unknown name.
  Letter index_of(const std::string& name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

/// Word over letter indices. Comparison operators implement the
/// lexicographic order in which a proper prefix is smaller (x < xy < y).
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>& letters() { return letters_; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word reversed() const;
  Word power(std::size_t k) const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

enum class Cmp { less, equal, greater };

/// Lexicographic order (prefix is smaller).
Cmp lex_cmp(const Word& u, const Word& v);
/// Standard order: shorter is greater; equal lengths compare lexicographically.
/// The empty word is the maximum.
Cmp standard_cmp(const Word& u, const Word& v);
// Alphabet-checked variants; throw AlphabetMismatch when either word uses a
// letter outside the alphabet or the alphabets differ.
Cmp lex_cmp(const Alphabet& a, const Word& u, const Alphabet& b, const Word& v);
Cmp standard_cmp(const Alphabet& a, const Word& u, const Alphabet& b, const Word& v);

bool is_lyndon(const Word& u);

/// Lyndon decomposition u = l1 l2 ... lr with l1 >= ... >= lr, by Duval's
/// algorithm. Throws DomainError on the empty word.
std::vector<Word> lyndon_factorize(const Word& u);

/// Shirshov decomposition u = u'u'' with u'' the longest proper Lyndon
/// suffix. Throws DomainError unless u is Lyndon of length >= 2.
std::pair<Word, Word> shirshov_decompose(const Word& u);

/// All Lyndon words of length <= max_len, lex ascending.
std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, std::size_t max_len);

/// True iff the first Lyndon letter of w is lex-greater than the Lyndon word v.
bool lyndon_dominates(const Word& w, const Word& v);

// Words of a fixed length n over d letters are indexed in base d with the
// first letter most significant, which makes index order equal lex order.
std::size_t word_index(const Word& w, std::size_t d);
Word word_from_index(std::size_t index, std::size_t n, std::size_t d);
// d^n; throws ResourceError when it exceeds cap.
std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap);

std::string word_to_string(const Alphabet& a, const Word& w);

} // namespace braidpbw
