#pragma once

#include "braidpbw/pbw.hpp"
#include "braidpbw/uqsl2.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace braidpbw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Left triangular braiding c(x⊗y) = (g_x·y)⊗x of a Yetter-Drinfeld module
/// over a free abelian group: letters carry random grades and g acts on the
/// grade-h block as χ(g,h)(I + N_h)^e(g,h), N_h strictly raising the letter.
Braiding random_triangular_braiding(std::mt19937_64& rng, std::size_t d, FieldSpec f);

/// Words up to max_len where [u]_r is not u plus lex-greater words of the
/// same length; the first offending word is returned. r must be admissible.
std::optional<std::string> check_smallest_term(const Braiding& r, std::size_t max_len);

/// With d the diagonal component of c and r in {d, d^{-1}}: c([u]_r⊗[v]_r)
/// minus γ_{u,v}[v]_r⊗[u]_r has left words of length l(v) lex-greater than v,
/// for l(u) + l(v) <= max_len.
std::optional<std::string> check_smallest_term_lift(const Braiding& c, std::size_t max_len);

/// For Lyndon u, Δ([u]) - [u]⊗1 - 1⊗[u] has left words lex-greater than u;
/// [-] is the commutator with d^{-1}.
std::optional<std::string> check_comult_lyndon(const Braiding& c, std::size_t max_len);

/// For Lyndon v and r <= max_r, Δ([v]^r) minus the Gaussian binomial sum has
/// only terms a⊗b with a, b nonempty and a ≫ v.
std::optional<std::string> check_comult_power(const Braiding& c, std::size_t max_lyndon_len, std::size_t max_r);

/// For u = z v^r (Lyndon decomposition ending in the run v^r, z nonempty),
/// Δ([u]) - [u]⊗1 - Σ_i binom(r,i) γ_{z,v}^i [v]^i⊗[z][v]^{r-i} has only
/// terms a⊗b with a, b nonempty and a ≫ v.
std::optional<std::string> check_comult(const Braiding& c, std::size_t max_len);

struct LemmaScale {
  std::size_t smallest_len = 5;
  std::size_t lift_len = 4;
  std::size_t lyndon_len = 5;
  std::size_t power_len = 2;
  std::size_t power_r = 3;
  std::size_t comult_len = 5;
};

std::vector<CheckResult> lemma_suite(const std::string& label, const Braiding& c, const LemmaScale& scale = {});

struct VerifyOptions {
  NicholsOptions nichols;
  std::size_t random_braidings = 6;
  std::uint64_t seed = 20240607;
};

/// Reproduces the U_q(sl2) examples against the given fixtures,
/// plus the lemma suites on the built and on random triangular braidings.
VerifyReport verify_paper(const std::vector<PaperFixture>& fixtures, const VerifyOptions& opts = {});

Json verify_to_json(const VerifyReport& r);

} // namespace braidpbw
