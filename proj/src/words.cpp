#include "braidpbw/words.hpp"

#include "braidpbw/errors.hpp"

#include <algorithm>
#include <set>

namespace braidpbw {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("alphabet must be nonempty");
  if (names_.size() > 255) throw DomainError("alphabet too large");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw DomainError("alphabet letter names must be distinct");
}

Alphabet Alphabet::indexed(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Alphabet(std::move(names));
}

Letter Alphabet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw DomainError("unknown letter '" + name + "'");
  return static_cast<Letter>(it - names_.begin());
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos),
                                  letters_.begin() + static_cast<long>(pos + len)));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::power(std::size_t k) const {
  std::vector<Letter> r;
  r.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) r.insert(r.end(), letters_.begin(), letters_.end());
  return Word(std::move(r));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> r = a.letters_;
  r.insert(r.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(r));
}

Cmp lex_cmp(const Word& u, const Word& v) {
  if (u < v) return Cmp::less;
  if (v < u) return Cmp::greater;
  return Cmp::equal;
}

Cmp standard_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? Cmp::greater : Cmp::less;
  return lex_cmp(u, v);
}

namespace {

void check_word(const Alphabet& a, const Word& w) {
  for (Letter l : w.letters())
    if (l >= a.size()) throw AlphabetMismatch("word letter outside the alphabet");
}

void check_pair(const Alphabet& a, const Word& u, const Alphabet& b, const Word& v) {
  if (!(a == b)) throw AlphabetMismatch("words over different alphabets");
  check_word(a, u);
  check_word(b, v);
}

} // namespace

Cmp lex_cmp(const Alphabet& a, const Word& u, const Alphabet& b, const Word& v) {
  check_pair(a, u, b, v);
  return lex_cmp(u, v);
}

Cmp standard_cmp(const Alphabet& a, const Word& u, const Alphabet& b, const Word& v) {
  check_pair(a, u, b, v);
  return standard_cmp(u, v);
}

bool is_lyndon(const Word& u) {
  const std::size_t n = u.size();
  if (n == 0) return false;
  // Duval scan: u is Lyndon iff the first factor covers all of u.
  std::size_t i = 0, j = 1;
  while (j < n) {
    if (u[i] < u[j]) {
      i = 0;
    } else if (u[i] == u[j]) {
      ++i;
    } else {
      return false;
    }
    ++j;
  }
  return i == 0;
}

std::vector<Word> lyndon_factorize(const Word& u) {
  const std::size_t n = u.size();
  if (n == 0) throw DomainError("lyndon_factorize of the empty word");
  std::vector<Word> out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t i = k, j = k + 1;
    while (j < n && u[i] <= u[j]) {
      i = u[i] < u[j] ? k : i + 1;
      ++j;
    }
    const std::size_t period = j - i;
    while (k <= i) {
      out.push_back(u.substr(k, period));
      k += period;
    }
  }
  return out;
}

std::pair<Word, Word> shirshov_decompose(const Word& u) {
  if (u.size() < 2 || !is_lyndon(u)) throw DomainError("shirshov_decompose needs a Lyndon word of length >= 2");
  for (std::size_t split = 1; split < u.size(); ++split) {
    Word tail = u.substr(split);
    if (is_lyndon(tail)) return {u.substr(0, split), std::move(tail)};
  }
  throw DomainError("no Lyndon suffix");  // unreachable: the last letter is Lyndon
}

std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, std::size_t max_len) {
  // Duval's successor enumeration yields Lyndon words in lex order.
  std::vector<Word> out;
  const std::size_t d = alphabet.size();
  if (max_len == 0 || d == 0) return out;
  std::vector<Letter> w{0};
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == d - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

bool lyndon_dominates(const Word& w, const Word& v) {
  if (w.empty()) return false;
  return lyndon_factorize(w).front() > v;
}

std::size_t word_index(const Word& w, std::size_t d) {
  std::size_t idx = 0;
  for (Letter l : w.letters()) idx = idx * d + l;
  return idx;
}

Word word_from_index(std::size_t index, std::size_t n, std::size_t d) {
  std::vector<Letter> ls(n);
  for (std::size_t i = n; i-- > 0;) {
    ls[i] = static_cast<Letter>(index % d);
    index /= d;
  }
  return Word(std::move(ls));
}

std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r *= d;
    if (r > cap)
      throw ResourceError("space of dimension " + std::to_string(d) + "^" + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap));
  }
  return r;
}

std::string word_to_string(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w.letters()) s += a.name(l);
  return s;
}

} // namespace braidpbw
