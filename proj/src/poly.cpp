#include "braidpbw/poly.hpp"

#include "braidpbw/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace braidpbw {

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, std::size_t power) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(power + 1, mpz_class(0));
  p.c_[power] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  return valuation() + 1 == c_.size();
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class Poly::max_norm() const {
  mpz_class m = 0;
  for (const auto& x : c_)
    if (abs(x) > m) m = abs(x);
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(r));
}

Poly Poly::divexact(const mpz_class& s) const {
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::shift_down(std::size_t k) const {
  Poly r;
  if (k >= c_.size()) return r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

Poly Poly::shift_up(std::size_t k) const {
  if (is_zero()) return {};
  Poly r;
  r.c_.assign(k, mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

mpz_class Poly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& a = c_[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (a < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool try_divide(const Poly& a, const Poly& b, Poly& quotient) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) {
    quotient = Poly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(rem.size() - db, mpz_class(0));
  mpz_class r;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return false;
    mpz_divexact(r.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    q[k] = r;
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] == 0) continue;
      mpz_submul(rem[k + j].get_mpz_t(), r.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return false;
  quotient = Poly(std::move(q));
  return true;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divide(a, b, q)) throw ArithmeticError("inexact polynomial division");
  return q;
}

namespace {

Poly normalize_sign(Poly p) {
  if (!p.is_zero() && p.lc() < 0) return -p;
  return p;
}

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  Poly r = c == 1 ? p : p.divexact(c);
  return normalize_sign(std::move(r));
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_rem(const Poly& a, const Poly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc[db];
  while (r.size() >= bc.size()) {
    mpz_class lr = r.back();
    const std::size_t shift = r.size() - bc.size();
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

// Symmetric-residue interpolation of an integer image at xi.
Poly interpolate_image(mpz_class g, const mpz_class& xi) {
  std::vector<mpz_class> cs;
  mpz_class half = xi / 2;
  while (g != 0) {
    mpz_class d = g % xi;  // sign follows g
    if (d > half) d -= xi;
    if (d < -half) d += xi;
    cs.push_back(d);
    g = (g - d) / xi;
  }
  return Poly(std::move(cs));
}

// Heuristic gcd for primitive polynomials of positive degree. Returns the
// zero polynomial when the heuristic gives up.
Poly gcd_heuristic(const Poly& a, const Poly& b) {
  mpz_class xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class ga = a.eval(xi);
    mpz_class gb = b.eval(xi);
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    Poly cand = primitive(interpolate_image(gg, xi));
    Poly unused;
    if (!cand.is_zero() && try_divide(a, cand, unused) && try_divide(b, cand, unused)) return cand;
    xi = xi * 73794 / 27011;
  }
  return {};
}

} // namespace

Poly gcd_prs(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    Poly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  if (!y.is_zero()) return Poly(cg);  // constant remainder: coprime parts
  return normalize_sign(x * cg);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const std::size_t va = a.valuation(), vb = b.valuation();
  const std::size_t v = std::min(va, vb);
  if (a.is_monomial() || b.is_monomial()) return Poly::monomial(cg, v);
  Poly x = (va ? a.shift_down(va) : a);
  Poly y = (vb ? b.shift_down(vb) : b);
  x = ca == 1 ? x : x.divexact(ca);
  y = cb == 1 ? y : y.divexact(cb);
  if (x.is_constant() || y.is_constant()) return Poly::monomial(cg, v);
  x = normalize_sign(std::move(x));
  y = normalize_sign(std::move(y));
  if (x == y) return (x * cg).shift_up(v);
  Poly g = gcd_heuristic(x, y);
  if (g.is_zero()) g = gcd_prs(x, y);
  return (g * cg).shift_up(v);
}

} // namespace braidpbw
