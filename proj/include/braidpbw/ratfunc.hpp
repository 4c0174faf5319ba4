#pragma once

#include "braidpbw/poly.hpp"

#include <gmpxx.h>

#include <string>

namespace braidpbw {

/// Element of Q(q) stored as num/den with num, den in Z[q].
///
/// Canonical form: gcd(num, den) = 1 in Z[q] (so the joint integer content
/// is 1), lc(den) > 0, and zero is 0/1. Every operation returns canonical
/// values, which makes equality plain representation equality.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  explicit RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(const mpz_class& c) : num_(c), den_(1) {}
  explicit RatFunc(const mpq_class& c);
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  // Normalizes; throws ArithmeticError when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc q() { return RatFunc(Poly::q()); }
  // q^e for any integer e.
  static RatFunc q_power(long e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  mpq_class constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Value at q = x; throws ArithmeticError if the denominator vanishes there.
  mpq_class eval(const mpq_class& x) const;

  std::string to_string() const;

private:
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

} // namespace braidpbw
