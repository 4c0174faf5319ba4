#pragma once

#include "braidpbw/ratfunc.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace braidpbw {

enum class FieldKind : std::uint8_t { rationals, rational_functions, prime_field };

/// Coefficient field: Q, Q(q) or GF(p).
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  static FieldSpec rational_functions() { return {FieldKind::rational_functions, 0}; }
  // Throws DomainError unless p is a prime below 2^32.
  static FieldSpec prime_field(std::uint64_t p);
  // Accepts "Q", "Q(q)" and "GF(p)".
  static FieldSpec parse(std::string_view name);

  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact field element tagged with its field. Values are always canonical,
/// so operator== is representation equality.
class Scalar {
public:
  // Zero of Q.
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar from_int(FieldSpec f, long n);
  static Scalar from_mpz(FieldSpec f, const mpz_class& n);
  static Scalar from_rational(FieldSpec f, const mpq_class& x);
  static Scalar from_ratfunc(RatFunc r);
  // The indeterminate q; only in Q(q).
  static Scalar q();
  static Scalar q_power(long e);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Accessors for the concrete representation; throw FieldMismatch on the
  // wrong kind.
  const mpq_class& rational() const;
  const RatFunc& ratfunc() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // ArithmeticError on zero
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  // Throws FieldMismatch for different fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Evaluate q at x (Q(q) only); the result lives in Q.
  Scalar eval_q(const mpq_class& x) const;

  // Parseable literal in the scalar grammar.
  std::string to_string() const;

private:
  Scalar(FieldSpec f, std::variant<mpq_class, RatFunc, std::uint64_t> v)
      : field_(f), v_(std::move(v)) {}
  FieldSpec field_;
  std::variant<mpq_class, RatFunc, std::uint64_t> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Throws FieldMismatch when the fields differ.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

} // namespace braidpbw
