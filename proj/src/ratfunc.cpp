#include "braidpbw/ratfunc.hpp"

#include "braidpbw/errors.hpp"

namespace braidpbw {

namespace {

void fix_sign(Poly& num, Poly& den) {
  if (den.lc() < 0) {
    num = -num;
    den = -den;
  }
}

} // namespace

RatFunc::RatFunc(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  fix_sign(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::q_power(long e) {
  if (e >= 0) return RatFunc(Poly::monomial(1, static_cast<std::size_t>(e)));
  return RatFunc(Poly(1), Poly::monomial(1, static_cast<std::size_t>(-e)), Raw{});
}

mpq_class RatFunc::constant_value() const {
  mpq_class r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in Q(q)");
  Poly n = den_, d = num_;
  fix_sign(n, d);
  return RatFunc(std::move(n), std::move(d), Raw{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) {
    Poly n = a.num_ + b.num_;
    if (n.is_zero()) return {};
    return RatFunc(std::move(n), a.den_);
  }
  // Henrici: with g = gcd(b1, b2), gcd(num, den) divides g.
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly n = a.num_ * b.den_ + b.num_ * a.den_;
    if (n.is_zero()) return {};
    return RatFunc(std::move(n), a.den_ * b.den_, RatFunc::Raw{});
  }
  Poly ad = divide_exact(a.den_, g);
  Poly bd = divide_exact(b.den_, g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return {};
  Poly den = a.den_ * bd;
  Poly h = gcd(n, g);
  if (!h.is_one()) {
    n = divide_exact(n, h);
    den = divide_exact(den, h);
  }
  fix_sign(n, den);
  return RatFunc(std::move(n), std::move(den), RatFunc::Raw{});
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
  Poly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
  Poly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
  Poly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
  Poly n = an * bn;
  Poly d = ad * bd;
  fix_sign(n, d);
  return RatFunc(std::move(n), std::move(d), RatFunc::Raw{});
}

mpq_class RatFunc::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
  mpq_class r = num_.eval(x) / d;
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    bool simple = p.is_monomial() && p.lc() > 0 && (p.lc() == 1 || p.degree() == 0);
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

} // namespace braidpbw
