#include "braidpbw/qcomb.hpp"

#include "braidpbw/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace braidpbw {

namespace {

class LiteralParser {
public:
  LiteralParser(std::string_view text, FieldSpec field) : s_(text), field_(field) {}

  Scalar parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty scalar literal");
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero in literal");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!eat('^')) return base;
    skip_ws();
    bool paren = eat('(');
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t at = pos_;
    long e = integer_digits().get_si();
    if (paren && !eat(')')) fail("expected ')'");
    if (neg) {
      if (base.is_zero()) {
        pos_ = at;
        fail("zero raised to a negative power");
      }
      e = -e;
    }
    return base.pow(e);
  }

  mpz_class integer_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of literal");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      if (field_.kind != FieldKind::rational_functions) fail("symbol q is only valid in Q(q)");
      ++pos_;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::from_mpz(field_, integer_digits());
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    fs.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

} // namespace

Scalar parse_scalar(std::string_view text, FieldSpec field) { return LiteralParser(text, field).parse(); }

Scalar gauss_binomial(unsigned r, unsigned i, const Scalar& gamma) {
  if (i > r) throw DomainError("gauss_binomial: i > r");
  // row[k] holds [m choose k] for the current m.
  std::vector<Scalar> row(r + 1, Scalar::zero(gamma.field()));
  row[0] = Scalar::one(gamma.field());
  std::vector<Scalar> gpow(r + 1, Scalar::one(gamma.field()));
  for (unsigned k = 1; k <= r; ++k) gpow[k] = gpow[k - 1] * gamma;
  for (unsigned m = 1; m <= r; ++m)
    for (unsigned k = m; k >= 1; --k) row[k] = row[k - 1] + gpow[k] * row[k];
  return row[i];
}

Scalar q_integer(unsigned h, const Scalar& gamma) {
  Scalar acc = Scalar::zero(gamma.field());
  Scalar p = Scalar::one(gamma.field());
  for (unsigned k = 0; k < h; ++k) {
    acc += p;
    p *= gamma;
  }
  return acc;
}

std::optional<unsigned long> unity_order(const Scalar& s) {
  if (s.is_zero()) throw DomainError("unity_order of zero");
  const FieldSpec f = s.field();
  if (s.is_one()) return 1;
  if (f.kind == FieldKind::prime_field) {
    const std::uint64_t p = f.characteristic;
    std::uint64_t t = p - 1;
    for (std::uint64_t r : prime_factors(p - 1)) {
      while (t % r == 0 && s.pow(static_cast<long>(t / r)).is_one()) t /= r;
    }
    return t;
  }
  // Characteristic 0: only +-1 (constants) are roots of unity in Q and Q(q).
  if ((-s).is_one()) return 2;
  return std::nullopt;
}

} // namespace braidpbw
