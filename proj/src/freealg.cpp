#include "braidpbw/freealg.hpp"

#include "braidpbw/errors.hpp"

#include <sstream>

namespace braidpbw {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) m.erase(it);
  }
}

void check_compatible(const Alphabet& a, FieldSpec fa, const Alphabet& b, FieldSpec fb) {
  if (!(a == b)) throw AlphabetMismatch("elements over different alphabets");
  require_same_field(fa, fb);
}

std::string term_string(const Scalar& s, const std::string& body, bool first) {
  std::string c = s.to_string();
  std::string out;
  bool negative = false;
  if (c.size() > 1 && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos) {
    negative = true;
    c = c.substr(1);
  }
  if (!first) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (body.empty()) return out + c;
  if (c == "1") return out + body;
  bool compound = c.find_first_of("+-/", 0) != std::string::npos;
  return out + (compound ? "(" + c + ")" : c) + "*" + body;
}

} // namespace

FreeElement FreeElement::monomial(const Alphabet& a, FieldSpec f, const Word& w) {
  FreeElement e(a, f);
  e.add(w, Scalar::one(f));
  return e;
}

FreeElement FreeElement::constant(const Alphabet& a, const Scalar& s) {
  FreeElement e(a, s.field());
  e.add(Word{}, s);
  return e;
}

Scalar FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<std::size_t> FreeElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t n = terms_.begin()->first.size();
  for (const auto& [w, s] : terms_)
    if (w.size() != n) return std::nullopt;
  return n;
}

void FreeElement::add(const Word& w, const Scalar& s) {
  require_same_field(field_, s.field());
  for (Letter l : w.letters())
    if (l >= alphabet_.size()) throw AlphabetMismatch("word letter outside the alphabet");
  accumulate(terms_, w, s);
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  check_compatible(a.alphabet_, a.field_, b.alphabet_, b.field_);
  FreeElement r = a;
  for (const auto& [w, s] : b.terms_) accumulate(r.terms_, w, s);
  return r;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  return a + Scalar::from_int(b.field_, -1) * b;
}

FreeElement operator*(const Scalar& s, const FreeElement& a) {
  require_same_field(s.field(), a.field_);
  FreeElement r(a.alphabet_, a.field_);
  if (s.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, s * x);
  return r;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, s] : terms_) {
    out += term_string(s, w.empty() ? "" : word_to_string(alphabet_, w), first);
    first = false;
  }
  return out;
}

FreeElement concat_mult(const FreeElement& a, const FreeElement& b) {
  check_compatible(a.alphabet(), a.field(), b.alphabet(), b.field());
  FreeElement r(a.alphabet(), a.field());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) r.add(u + v, x * y);
  return r;
}

std::vector<Scalar> to_dense(const FreeElement& a, std::size_t n) {
  const std::size_t d = a.alphabet().size();
  std::vector<Scalar> v(checked_power(d, n, std::size_t{1} << 24), Scalar::zero(a.field()));
  for (const auto& [w, s] : a.terms()) {
    if (w.size() != n) throw DomainError("element is not homogeneous of degree " + std::to_string(n));
    v[word_index(w, d)] = s;
  }
  return v;
}

FreeElement from_dense(const Alphabet& a, FieldSpec f, std::span<const Scalar> v, std::size_t n) {
  FreeElement e(a, f);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.add(word_from_index(i, n, a.size()), v[i]);
  return e;
}

TensorSquareElement TensorSquareElement::pure(const Alphabet& a, FieldSpec f, const Word& left, const Word& right) {
  TensorSquareElement t(a, f);
  t.add(left, right, Scalar::one(f));
  return t;
}

Scalar TensorSquareElement::coeff(const Word& left, const Word& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TensorSquareElement::add(const Word& left, const Word& right, const Scalar& s) {
  require_same_field(field_, s.field());
  accumulate(terms_, Key{left, right}, s);
}

TensorSquareElement operator+(const TensorSquareElement& a, const TensorSquareElement& b) {
  check_compatible(a.alphabet_, a.field_, b.alphabet_, b.field_);
  TensorSquareElement r = a;
  for (const auto& [k, s] : b.terms_) accumulate(r.terms_, k, s);
  return r;
}

TensorSquareElement operator-(const TensorSquareElement& a, const TensorSquareElement& b) {
  return a + Scalar::from_int(b.field_, -1) * b;
}

TensorSquareElement operator*(const Scalar& s, const TensorSquareElement& a) {
  require_same_field(s.field(), a.field_);
  TensorSquareElement r(a.alphabet_, a.field_);
  if (s.is_zero()) return r;
  for (const auto& [k, x] : a.terms_) r.terms_.emplace(k, s * x);
  return r;
}

std::string TensorSquareElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, s] : terms_) {
    out += term_string(s, word_to_string(alphabet_, k.first) + "⊗" + word_to_string(alphabet_, k.second), first);
    first = false;
  }
  return out;
}

TensorSquareElement tensor(const FreeElement& a, const FreeElement& b) {
  check_compatible(a.alphabet(), a.field(), b.alphabet(), b.field());
  TensorSquareElement t(a.alphabet(), a.field());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) t.add(u, v, x * y);
  return t;
}

namespace {

void check_caps(const Braiding& c, std::size_t degree, const ExpansionCaps& caps) {
  if (c.dim() > caps.max_dim)
    throw ResourceError("dimension " + std::to_string(c.dim()) + " exceeds the expansion cap of " +
                        std::to_string(caps.max_dim));
  if (degree > caps.max_degree)
    throw ResourceError("total degree " + std::to_string(degree) + " exceeds the expansion cap of " +
                        std::to_string(caps.max_degree));
}

} // namespace

TensorSquareElement braided_square_mult(const Braiding& c, const TensorSquareElement& A,
                                        const TensorSquareElement& B, const ExpansionCaps& caps) {
  check_compatible(A.alphabet(), A.field(), B.alphabet(), B.field());
  if (!(A.alphabet() == c.alphabet())) throw AlphabetMismatch("braiding and element alphabets differ");
  require_same_field(A.field(), c.field());
  TensorSquareElement r(A.alphabet(), A.field());
  std::map<std::pair<Word, Word>, std::map<std::pair<Word, Word>, Scalar>> crossings;
  for (const auto& [ka, x] : A.terms())
    for (const auto& [kb, y] : B.terms()) {
      check_caps(c, ka.first.size() + ka.second.size() + kb.first.size() + kb.second.size(), caps);
      auto key = std::make_pair(ka.second, kb.first);
      auto it = crossings.find(key);
      if (it == crossings.end()) it = crossings.emplace(key, lift_apply(c, ka.second, kb.first)).first;
      const Scalar xy = x * y;
      for (const auto& [out, z] : it->second) r.add(ka.first + out.first, out.second + kb.second, xy * z);
    }
  return r;
}

TensorSquareElement coproduct(const Braiding& c, const FreeElement& a, const ExpansionCaps& caps) {
  if (!(a.alphabet() == c.alphabet())) throw AlphabetMismatch("braiding and element alphabets differ");
  require_same_field(a.field(), c.field());
  const FieldSpec f = a.field();
  TensorSquareElement total(a.alphabet(), f);
  std::map<Word, TensorSquareElement> memo;
  for (const auto& [w, s] : a.terms()) {
    check_caps(c, w.size(), caps);
    TensorSquareElement acc = TensorSquareElement::pure(a.alphabet(), f, {}, {});
    Word prefix;
    for (Letter l : w.letters()) {
      prefix.letters().push_back(l);
      auto it = memo.find(prefix);
      if (it != memo.end()) {
        acc = it->second;
        continue;
      }
      TensorSquareElement prim = TensorSquareElement::pure(a.alphabet(), f, Word{l}, {});
      prim.add({}, Word{l}, Scalar::one(f));
      acc = braided_square_mult(c, acc, prim, caps);
      memo.emplace(prefix, acc);
    }
    total = total + s * acc;
  }
  return total;
}

Scalar counit(const FreeElement& a) { return a.coeff(Word{}); }

Commutators::Commutators(Braiding r) : r_(std::move(r)) {
  if (!r_.satisfies_braid_equation()) throw DomainError("commutator: r does not satisfy the braid equation");
  if (!check_left_triangular(r_)) throw DomainError("commutator: r is not left triangular");
}

const FreeElement& Commutators::operator()(const Word& u) {
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  const Alphabet& a = r_.alphabet();
  const FieldSpec f = r_.field();
  FreeElement value(a, f);
  if (u.size() <= 1) {
    value = FreeElement::monomial(a, f, u);
  } else if (!is_lyndon(u)) {
    value = FreeElement::constant(a, Scalar::one(f));
    for (const Word& l : lyndon_factorize(u)) value = concat_mult(value, (*this)(l));
  } else {
    auto [v, w] = shirshov_decompose(u);
    const FreeElement cv = (*this)(v);
    const FreeElement cw = (*this)(w);
    value = concat_mult(cv, cw);
    for (const auto& [x, s] : cv.terms())
      for (const auto& [y, t] : cw.terms()) {
        const Scalar st = s * t;
        for (const auto& [out, z] : lift_apply(r_, x, y)) value.add(out.first + out.second, -(st * z));
      }
  }
  return memo_.emplace(u, std::move(value)).first->second;
}

FreeElement commutator(const Braiding& r, const Word& u) {
  Commutators cs(r);
  return cs(u);
}

Json free_element_to_json(const FreeElement& a) {
  Json out = Json::array();
  for (const auto& [w, s] : a.terms()) {
    Json letters = Json::array();
    for (Letter l : w.letters()) letters.push_back(a.alphabet().name(l));
    out.push_back({{"coeff", scalar_to_json_literal(s)}, {"word", std::move(letters)}});
  }
  return out;
}

Json relations_to_json(const std::vector<FreeElement>& rels) {
  Json out = Json::array();
  for (const auto& r : rels) out.push_back(free_element_to_json(r));
  return out;
}

std::vector<FreeElement> relations_from_json_text(std::string_view text, const Alphabet& a, FieldSpec f) {
  Json j = parse_json_text(text);
  if (!j.is_array()) throw ParseError("relations file must be a JSON list of elements", 1, 1);
  std::vector<FreeElement> out;
  std::size_t term_no = 0;
  for (const auto& elem : j) {
    if (!elem.is_array()) throw ParseError("each relation must be a list of terms", 1, 1);
    FreeElement e(a, f);
    for (const auto& term : elem) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("word")) {
        SourcePos p = locate_value(text, "coeff", term_no, 0);
        throw ParseError("each term needs \"coeff\" and \"word\"", p.line, p.column);
      }
      Scalar s = scalar_from_json(term["coeff"], f, locate_value(text, "coeff", term_no, 0));
      const Json& wj = term["word"];
      if (!wj.is_array()) {
        SourcePos p = locate_value(text, "word", term_no, 0);
        throw ParseError("\"word\" must be a list of letter names", p.line, p.column);
      }
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < wj.size(); ++i) {
        SourcePos p = locate_value(text, "word", term_no, i);
        if (!wj[i].is_string()) throw ParseError("letter names must be strings", p.line, p.column);
        try {
          letters.push_back(a.index_of(wj[i].get<std::string>()));
        } catch (const DomainError& ex) {
          throw ParseError(ex.what(), p.line, p.column);
        }
      }
      e.add(Word(std::move(letters)), s);
      ++term_no;
    }
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace braidpbw
