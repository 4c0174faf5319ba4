#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace braidpbw {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; the vector never has
/// a trailing zero, so the zero polynomial is the empty vector.
class Poly {
public:
  Poly() = default;
  explicit Poly(long c);
  explicit Poly(const mpz_class& c);
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, std::size_t power);
  static Poly q() { return monomial(1, 1); }

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  // Only one nonzero coefficient.
  bool is_monomial() const;
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpz_class& lc() const { return c_.back(); }
  // Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

  // Nonnegative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;
  mpz_class max_norm() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpz_class& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Every coefficient divided by s; s must divide each coefficient.
  Poly divexact(const mpz_class& s) const;
  Poly shift_down(std::size_t k) const;  // divide by q^k (exact)
  Poly shift_up(std::size_t k) const;    // multiply by q^k

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  std::string to_string() const;

private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact division a / b in Z[q]; returns false when b does not divide a.
bool try_divide(const Poly& a, const Poly& b, Poly& quotient);
// Exact division; b must divide a.
Poly divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor in Z[q], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Reference gcd via the primitive polynomial remainder sequence. Slower than
// gcd(); kept as the fallback and as a cross-check.
Poly gcd_prs(const Poly& a, const Poly& b);

} // namespace braidpbw
