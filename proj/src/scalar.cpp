#include "braidpbw/scalar.hpp"

#include "braidpbw/errors.hpp"

#include <ostream>

namespace braidpbw {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw ArithmeticError("inverse of zero in " + FieldSpec{FieldKind::prime_field, p}.name());
  return pow_mod(a, p - 2, p);
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw DomainError("GF(p) needs a prime p < 2^32, got " + std::to_string(p));
  return {FieldKind::prime_field, p};
}

FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "Q(q)") return rational_functions();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    std::string digits(name.substr(3, name.size() - 4));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return prime_field(std::stoull(digits));
  }
  throw DomainError("unknown field '" + std::string(name) + "' (expected Q, Q(q) or GF(p))");
}

std::string FieldSpec::name() const {
  switch (kind) {
  case FieldKind::rationals: return "Q";
  case FieldKind::rational_functions: return "Q(q)";
  case FieldKind::prime_field: return "GF(" + std::to_string(characteristic) + ")";
  }
  return "?";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

Scalar Scalar::zero(FieldSpec f) { return from_int(f, 0); }
Scalar Scalar::one(FieldSpec f) { return from_int(f, 1); }

Scalar Scalar::from_int(FieldSpec f, long n) { return from_mpz(f, mpz_class(n)); }

Scalar Scalar::from_mpz(FieldSpec f, const mpz_class& n) {
  switch (f.kind) {
  case FieldKind::rationals: return Scalar(f, mpq_class(n));
  case FieldKind::rational_functions: return Scalar(f, RatFunc(n));
  case FieldKind::prime_field: return Scalar(f, mod_reduce(n, f.characteristic));
  }
  return {};
}

Scalar Scalar::from_rational(FieldSpec f, const mpq_class& x) {
  switch (f.kind) {
  case FieldKind::rationals: return Scalar(f, x);
  case FieldKind::rational_functions: return Scalar(f, RatFunc(x));
  case FieldKind::prime_field: {
    std::uint64_t n = mod_reduce(x.get_num(), f.characteristic);
    std::uint64_t d = mod_reduce(x.get_den(), f.characteristic);
    return Scalar(f, mul_mod(n, inv_mod(d, f.characteristic), f.characteristic));
  }
  }
  return {};
}

Scalar Scalar::from_ratfunc(RatFunc r) { return Scalar(FieldSpec::rational_functions(), std::move(r)); }

Scalar Scalar::q() { return from_ratfunc(RatFunc::q()); }

Scalar Scalar::q_power(long e) { return from_ratfunc(RatFunc::q_power(e)); }

bool Scalar::is_zero() const {
  switch (v_.index()) {
  case 0: return std::get<0>(v_) == 0;
  case 1: return std::get<1>(v_).is_zero();
  default: return std::get<2>(v_) == 0;
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
  case 0: return std::get<0>(v_) == 1;
  case 1: return std::get<1>(v_).is_one();
  default: return std::get<2>(v_) == 1 % field_.characteristic;
  }
}

const mpq_class& Scalar::rational() const {
  if (v_.index() != 0) throw FieldMismatch("scalar is not in Q");
  return std::get<0>(v_);
}

const RatFunc& Scalar::ratfunc() const {
  if (v_.index() != 1) throw FieldMismatch("scalar is not in Q(q)");
  return std::get<1>(v_);
}

std::uint64_t Scalar::residue() const {
  if (v_.index() != 2) throw FieldMismatch("scalar is not in a prime field");
  return std::get<2>(v_);
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
  case 0: return Scalar(field_, mpq_class(-std::get<0>(v_)));
  case 1: return Scalar(field_, -std::get<1>(v_));
  default: {
    std::uint64_t a = std::get<2>(v_);
    return Scalar(field_, a == 0 ? 0 : field_.characteristic - a);
  }
  }
}

Scalar Scalar::inverse() const {
  switch (v_.index()) {
  case 0:
    if (std::get<0>(v_) == 0) throw ArithmeticError("inverse of zero in Q");
    return Scalar(field_, mpq_class(1 / std::get<0>(v_)));
  case 1: return Scalar(field_, std::get<1>(v_).inverse());
  default: return Scalar(field_, inv_mod(std::get<2>(v_), field_.characteristic));
  }
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar r = one(field_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  switch (a.v_.index()) {
  case 0: return Scalar(a.field_, mpq_class(std::get<0>(a.v_) + std::get<0>(b.v_)));
  case 1: return Scalar(a.field_, std::get<1>(a.v_) + std::get<1>(b.v_));
  default: {
    std::uint64_t p = a.field_.characteristic;
    return Scalar(a.field_, (std::get<2>(a.v_) + std::get<2>(b.v_)) % p);
  }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  switch (a.v_.index()) {
  case 0: return Scalar(a.field_, mpq_class(std::get<0>(a.v_) - std::get<0>(b.v_)));
  case 1: return Scalar(a.field_, std::get<1>(a.v_) - std::get<1>(b.v_));
  default: {
    std::uint64_t p = a.field_.characteristic;
    return Scalar(a.field_, (std::get<2>(a.v_) + p - std::get<2>(b.v_)) % p);
  }
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  switch (a.v_.index()) {
  case 0: return Scalar(a.field_, mpq_class(std::get<0>(a.v_) * std::get<0>(b.v_)));
  case 1: return Scalar(a.field_, std::get<1>(a.v_) * std::get<1>(b.v_));
  default: return Scalar(a.field_, mul_mod(std::get<2>(a.v_), std::get<2>(b.v_), a.field_.characteristic));
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (b.is_zero()) throw ArithmeticError("division by zero in " + a.field_.name());
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  return a.v_ == b.v_;
}

Scalar Scalar::eval_q(const mpq_class& x) const {
  return Scalar(FieldSpec::rationals(), ratfunc().eval(x));
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
  case 0: return std::get<0>(v_).get_str();
  case 1: return std::get<1>(v_).to_string();
  default: return std::to_string(std::get<2>(v_));
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace braidpbw
