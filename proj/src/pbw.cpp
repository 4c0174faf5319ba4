#include "braidpbw/pbw.hpp"

#include "braidpbw/errors.hpp"
#include "braidpbw/qcomb.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace braidpbw {

struct GradedIdealPresentation::Cache {
  std::recursive_mutex mu;
  std::map<std::size_t, IdealComponent> components;
  std::map<std::size_t, Echelon> bases;
};

namespace {

void check_degree(const GradedIdealPresentation& p, std::size_t n) {
  if (n > p.degree_cap())
    throw ResourceError("degree " + std::to_string(n) + " exceeds the degree cap " + std::to_string(p.degree_cap()));
}

bool use_exact(const GradedIdealPresentation& p, std::size_t size) {
  const RankPolicy& r = p.options().rank;
  return p.mode() == IdealMode::generators || r.exact ||
         p.braiding().field().kind != FieldKind::rational_functions || size <= r.probabilistic_above;
}

std::vector<Word> pivot_words(std::span<const std::size_t> pivots, std::size_t n, std::size_t d) {
  std::vector<Word> out;
  for (std::size_t c : pivots) out.push_back(word_from_index(c, n, d));
  std::sort(out.begin(), out.end());
  return out;
}

FreeElement reverse_words(const FreeElement& a) {
  FreeElement r(a.alphabet(), a.field());
  for (const auto& [w, s] : a.terms()) r.add(w.reversed(), s);
  return r;
}

} // namespace

GradedIdealPresentation GradedIdealPresentation::from_generators(Braiding c, std::vector<FreeElement> generators,
                                                                 std::size_t degree_cap, NicholsOptions opts) {
  for (const auto& g : generators) {
    if (!(g.alphabet() == c.alphabet())) throw AlphabetMismatch("ideal generator over a different alphabet");
    require_same_field(g.field(), c.field());
    const auto deg = g.degree();
    if (!deg) throw DomainError("ideal generators must be nonzero and homogeneous");
    if (*deg < 2) throw DomainError("ideal generators must have degree at least 2");
  }
  GradedIdealPresentation p;
  p.mode_ = IdealMode::generators;
  p.braiding_ = std::move(c);
  p.generators_ = std::move(generators);
  p.degree_cap_ = degree_cap;
  p.opts_ = opts;
  p.cache_ = std::make_shared<Cache>();
  return p;
}

GradedIdealPresentation GradedIdealPresentation::nichols_kernel(Braiding c, std::size_t degree_cap,
                                                                NicholsOptions opts) {
  GradedIdealPresentation p;
  p.mode_ = IdealMode::nichols_kernel;
  p.braiding_ = std::move(c);
  p.degree_cap_ = degree_cap;
  p.opts_ = opts;
  p.cache_ = std::make_shared<Cache>();
  return p;
}

GradedIdealPresentation GradedIdealPresentation::reversed() const {
  GradedIdealPresentation p = *this;
  p.braiding_ = flip_conjugate(braiding_);
  for (auto& g : p.generators_) g = reverse_words(g);
  p.cache_ = std::make_shared<Cache>();
  return p;
}

const Echelon& GradedIdealPresentation::basis(std::size_t n) const {
  check_degree(*this, n);
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->bases.find(n); it != cache_->bases.end()) return it->second;

  const FieldSpec f = braiding_.field();
  const std::size_t d = braiding_.dim();
  const std::size_t size = checked_power(d, n, opts_.space_cap);
  Echelon e;
  if (n < 2) {
    e.rows = Matrix(f, 0, size);
  } else if (mode_ == IdealMode::nichols_kernel) {
    e = echelonize(ideal_component_nichols(braiding_, n, opts_), {}, opts_.exec);
  } else {
    // I_n = X·I_{n-1} + I_{n-1}·X + span of the degree-n generators.
    const Echelon& lower = basis(n - 1);
    const std::size_t below = lower.rows.cols();
    Matrix m(f, 0, size);
    std::vector<Scalar> row(size);
    for (std::size_t r = 0; r < lower.rank(); ++r)
      for (std::size_t x = 0; x < d; ++x) {
        std::fill(row.begin(), row.end(), Scalar::zero(f));
        for (std::size_t w = 0; w < below; ++w)
          if (!lower.rows(r, w).is_zero()) row[x * below + w] = lower.rows(r, w);
        m.append_row(row);
        std::fill(row.begin(), row.end(), Scalar::zero(f));
        for (std::size_t w = 0; w < below; ++w)
          if (!lower.rows(r, w).is_zero()) row[w * d + x] = lower.rows(r, w);
        m.append_row(row);
      }
    for (const auto& g : generators_)
      if (g.degree() == n) m.append_row(to_dense(g, n));
    e = echelonize(m, {}, opts_.exec);
  }
  return cache_->bases.emplace(n, std::move(e)).first->second;
}

const IdealComponent& GradedIdealPresentation::component(std::size_t n) const {
  check_degree(*this, n);
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->components.find(n); it != cache_->components.end()) return it->second;

  const std::size_t d = braiding_.dim();
  const std::size_t size = checked_power(d, n, opts_.space_cap);
  IdealComponent comp;
  comp.degree = n;
  if (use_exact(*this, size)) {
    const Echelon& e = basis(n);
    comp.dim = e.rank();
    comp.leading_words = pivot_words(e.pivots, n, d);
  } else {
    // Leading words of ker S_n are the columns that are not pivots when S_n
    // is eliminated from the lex-largest word down.
    const Matrix s = symmetrizer(braiding_, n, opts_.exec, opts_.space_cap);
    std::vector<std::size_t> order(size);
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    std::mt19937_64 rng(opts_.rank.seed + n);
    const auto pivots = pivots_probabilistic(s, order, rng, opts_.exec);
    std::vector<bool> is_pivot(size, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < size; ++c)
      if (!is_pivot[c]) comp.leading_words.push_back(word_from_index(c, n, d));
    comp.dim = comp.leading_words.size();
    comp.exact = false;
  }
  return cache_->components.emplace(n, std::move(comp)).first->second;
}

Matrix ideal_component(const GradedIdealPresentation& p, std::size_t n) { return p.basis(n).rows; }

std::vector<Word> leading_words(const Matrix& subspace, std::size_t n, std::size_t d) {
  if (subspace.cols() != checked_power(d, n, subspace.cols()))
    throw DomainError("leading_words: width is not d^n");
  const Echelon e = echelonize(subspace, {}, Exec::serial);
  return pivot_words(e.pivots, n, d);
}

std::vector<Word> pbw_generators(const GradedIdealPresentation& p) {
  std::vector<Word> out;
  for (const Word& u : enumerate_lyndon(p.braiding().alphabet(), p.degree_cap())) {
    const auto& lead = p.component(u.size()).leading_words;
    if (!std::binary_search(lead.begin(), lead.end(), u)) out.push_back(u);
  }
  return out;
}

namespace {

bool power_reducible(const GradedIdealPresentation& p, const Word& u, std::size_t m) {
  const auto& lead = p.component(u.size() * m).leading_words;
  return std::binary_search(lead.begin(), lead.end(), u.power(m));
}

bool testable(const GradedIdealPresentation& p, const Word& u, std::size_t m) {
  const std::size_t len = u.size() * m;
  if (len > p.degree_cap()) return false;
  try {
    checked_power(p.braiding().dim(), len, p.options().space_cap);
  } catch (const ResourceError&) {
    return false;
  }
  return true;
}

HeightRecord finite(std::size_t m, std::string why) { return {HeightRecord::Kind::finite, m, std::move(why)}; }
HeightRecord at_least(std::size_t m, std::string why) { return {HeightRecord::Kind::at_least, m, std::move(why)}; }

// Every exponent m >= 2 in turn; used when no structural restriction applies.
HeightRecord direct_search(const GradedIdealPresentation& p, const Word& u) {
  std::size_t m = 2;
  for (; testable(p, u, m); ++m)
    if (power_reducible(p, u, m)) return finite(m, "u^" + std::to_string(m) + " is a leading word");
  return at_least(m, "no power up to the degree cap is a leading word");
}

} // namespace

HeightRecord height(const GradedIdealPresentation& p, const Word& u) {
  const auto& diag = p.braiding().left_diagonal();
  if (!diag) throw DomainError("height: braiding is not left triangular");

  const Scalar gamma = diag->gamma_extend(u, u);
  if (gamma.is_zero()) return direct_search(p, u);
  const auto order = unity_order(gamma);
  const std::uint64_t ch = p.braiding().field().characteristic;

  if (ch == 0) {
    if (!order) return {HeightRecord::Kind::infinite, 0, "γ_{u,u} is not a root of unity"};
    if (*order == 1) return {HeightRecord::Kind::infinite, 0, "γ_{u,u} = 1 in characteristic 0"};
    const std::size_t t = *order;
    if (!testable(p, u, t)) return at_least(t, "u^" + std::to_string(t) + " is beyond the degree cap");
    if (power_reducible(p, u, t)) return finite(t, "u^" + std::to_string(t) + " is a leading word");
    return {HeightRecord::Kind::infinite, 0,
            "u^" + std::to_string(t) + " is not a leading word and γ_{u,u} has order " + std::to_string(t)};
  }

  // Characteristic p: candidates t·p^l.
  const std::size_t t = order.value_or(1);
  for (std::size_t m = t;; m *= ch) {
    if (m < 2) continue;
    if (!testable(p, u, m)) return at_least(m, "u^" + std::to_string(m) + " is beyond the degree cap");
    if (power_reducible(p, u, m)) return finite(m, "u^" + std::to_string(m) + " is a leading word");
  }
}

PBWData compute_pbw(const GradedIdealPresentation& p) {
  if (!p.braiding().is_left_triangular())
    throw DomainError("braiding is not left triangular in the given basis order");
  PBWData data;
  data.alphabet = p.braiding().alphabet();
  data.mode = p.mode();
  for (const Word& u : pbw_generators(p)) data.generators.push_back({u, height(p, u)});
  const std::size_t d = p.braiding().dim();
  for (std::size_t n = 0; n <= p.degree_cap(); ++n) {
    const IdealComponent& comp = p.component(n);
    DegreeDims dd;
    dd.degree = n;
    dd.quotient_dim = checked_power(d, n, p.options().space_cap) - comp.dim;
    dd.monomial_count = pbw_monomials(data, n).size();
    dd.exact = comp.exact;
    data.dims.push_back(dd);
  }
  return data;
}

std::vector<Word> pbw_monomials(const PBWData& data, std::size_t n) {
  std::vector<PBWGenerator> gens = data.generators;
  // Descending in the order on S.
  std::sort(gens.begin(), gens.end(), [&](const PBWGenerator& a, const PBWGenerator& b) {
    if (data.reversed_order) return a.word.reversed() < b.word.reversed();
    return b.word < a.word;
  });
  std::vector<Word> out;
  std::vector<Letter> prefix;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::size_t j = start; j < gens.size(); ++j) {
      const Word& g = gens[j].word;
      const HeightRecord& h = gens[j].height;
      const std::size_t mark = prefix.size();
      for (std::size_t e = 1; e * g.size() <= remaining; ++e) {
        if (h.kind == HeightRecord::Kind::finite && e >= h.value) break;
        prefix.insert(prefix.end(), g.letters().begin(), g.letters().end());
        walk(j + 1, remaining - e * g.size());
      }
      prefix.resize(mark);
    }
  };
  walk(0, n);
  return out;
}

namespace {

bool independent_modulo(const Echelon& ideal, const std::vector<std::vector<Scalar>>& vectors, FieldSpec f,
                        std::size_t size) {
  Matrix residuals(f, 0, size);
  for (const auto& v : vectors) residuals.append_row(reduce(ideal, v));
  return rank_exact(residuals, Exec::serial) == vectors.size();
}

} // namespace

DimensionVerdict dimension_check(const GradedIdealPresentation& p, const PBWData& data, std::size_t n) {
  const FieldSpec f = p.braiding().field();
  const std::size_t d = p.braiding().dim();
  const std::size_t size = checked_power(d, n, p.options().space_cap);
  const std::vector<Word> monomials = pbw_monomials(data, n);
  DimensionVerdict v;
  v.degree = n;
  v.quotient_dim = size - p.component(n).dim;
  v.monomial_count = monomials.size();
  if (n == 0 || n > independence_max_degree || d > independence_max_dim) return v;

  std::vector<std::vector<Scalar>> units;
  for (const Word& w : monomials) {
    std::vector<Scalar> e(size, Scalar::zero(f));
    e[word_index(w, d)] = Scalar::one(f);
    units.push_back(std::move(e));
  }
  v.monomials_independent = independent_modulo(p.basis(n), units, f, size);

  // Right-triangular data is checked on the reversed side, where c becomes τcτ.
  const GradedIdealPresentation q = data.reversed_order ? p.reversed() : p;
  if (!q.braiding().satisfies_braid_equation() || !q.braiding().is_left_triangular()) return v;
  Commutators com(q.braiding());
  std::vector<std::vector<Scalar>> brackets;
  for (const Word& w : monomials) brackets.push_back(to_dense(com(data.reversed_order ? w.reversed() : w), n));
  v.commutators_independent = independent_modulo(q.basis(n), brackets, f, size);
  return v;
}

PBWData transfer_right_triangular(const GradedIdealPresentation& p) {
  if (!p.braiding().is_right_triangular())
    throw DomainError("braiding is not right triangular in the given basis order");
  PBWData data = compute_pbw(p.reversed());
  for (auto& g : data.generators) g.word = g.word.reversed();
  data.reversed_order = true;
  return data;
}

Json height_to_json(const HeightRecord& h) {
  switch (h.kind) {
    case HeightRecord::Kind::finite: return Json{{"finite", h.value}};
    case HeightRecord::Kind::infinite: return "infinite";
    case HeightRecord::Kind::at_least: return Json{{"at_least", h.value}};
  }
  return nullptr;
}

Json pbw_to_json(const PBWData& data) {
  Json j;
  j["alphabet"] = data.alphabet.names();
  j["ideal"] = data.mode == IdealMode::nichols_kernel ? "nichols" : "generators";
  j["order"] = data.reversed_order ? "opposite of lex on reversed words" : "lex";
  Json gens = Json::array();
  for (const auto& g : data.generators) {
    Json word = Json::array();
    for (Letter l : g.word.letters()) word.push_back(data.alphabet.name(l));
    gens.push_back({{"word", word}, {"height", height_to_json(g.height)}, {"reason", g.height.reason}});
  }
  j["generators"] = gens;
  Json dims = Json::array();
  for (const auto& dd : data.dims)
    dims.push_back({{"degree", dd.degree},
                    {"quotient_dim", dd.quotient_dim},
                    {"pbw_monomials", dd.monomial_count},
                    {"exact", dd.exact}});
  j["dims"] = dims;
  return j;
}

} // namespace braidpbw
