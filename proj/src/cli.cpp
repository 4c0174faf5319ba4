#include "braidpbw/cli.hpp"

#include "braidpbw/errors.hpp"
#include "braidpbw/pbw.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace braidpbw {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

NicholsOptions nichols_options(const RunConfig& cfg) {
  NicholsOptions o;
  o.rank.exact = cfg.exact;
  o.rank.seed = cfg.seed;
  return o;
}

Json word_json(const Alphabet& a, const Word& w) {
  Json j = Json::array();
  for (Letter l : w.letters()) j.push_back(a.name(l));
  return j;
}

std::string word_text(const Alphabet& a, const Word& w) { return w.empty() ? "1" : word_to_string(a, w); }

std::string order_text(const Alphabet& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " < " : "") + a.name(static_cast<Letter>(i));
  return s;
}

std::optional<std::vector<std::size_t>> safe_search(const Braiding& c) {
  try {
    return search_triangular_order(c);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

Json diagonal_json(const DiagonalBraiding& d) {
  Json rows = Json::array();
  for (const auto& row : d.table()) {
    Json r = Json::array();
    for (const Scalar& s : row) r.push_back(scalar_to_json_literal(s));
    rows.push_back(r);
  }
  return rows;
}

std::string height_text(const HeightRecord& h) {
  switch (h.kind) {
    case HeightRecord::Kind::finite: return std::to_string(h.value);
    case HeightRecord::Kind::infinite: return "infinite";
    case HeightRecord::Kind::at_least: return ">= " + std::to_string(h.value);
  }
  return "?";
}

Braiding load_braiding(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw DomainError("missing braiding file");
  return braiding_from_json_text(read_text_file(cfg.inputs[0]));
}

} // namespace

CommandResult cmd_check(const RunConfig& cfg) {
  const Braiding c = load_braiding(cfg);
  const Alphabet& a = c.alphabet();
  std::vector<std::string> warnings;
  const auto left = check_left_triangular(c, &warnings);
  const auto right = check_right_triangular(c, &warnings);
  const BraidCheck& bc = c.braid_check();

  CommandResult r;
  std::ostringstream t;
  Json& j = r.json;
  j["command"] = "check";
  j["ybe"] = {{"ok", bc.ok}, {"witness", bc.witness ? word_json(a, *bc.witness) : Json(nullptr)}};
  j["invertible"] = bc.invertible;
  t << "YBE: " << (bc.ok ? "ok" : "fail");
  if (bc.witness) t << " (witness " << word_text(a, *bc.witness) << ")";
  t << "\ninvertible: " << yes_no(bc.invertible) << "\n";

  auto order_from = [&](const std::optional<std::vector<std::size_t>>& perm) -> std::optional<Alphabet> {
    if (!perm) return std::nullopt;
    std::vector<std::string> names;
    for (std::size_t i : *perm) names.push_back(a.name(static_cast<Letter>(i)));
    return Alphabet(names);
  };
  // Right triangular in some order iff τcτ is left triangular in that order.
  const auto left_order = left ? std::nullopt : order_from(safe_search(c));
  const auto right_order = right ? std::nullopt : order_from(safe_search(flip_conjugate(c)));

  j["left_triangular"] = left.has_value();
  j["left_triangular_order"] = left_order ? Json(left_order->names()) : Json(nullptr);
  j["right_triangular"] = right.has_value();
  j["right_triangular_order"] = right_order ? Json(right_order->names()) : Json(nullptr);
  t << "left-triangular: " << yes_no(left.has_value());
  if (left_order) t << " (yes for the order " << order_text(*left_order) << ")";
  t << "\nright-triangular: " << yes_no(right.has_value());
  if (right_order) t << " (yes for the order " << order_text(*right_order) << ")";
  t << "\n";

  if (left || right) {
    const DiagonalBraiding& d = left ? *left : *right;
    j["diagonal"] = {{"side", left ? "left" : "right"}, {"gamma", diagonal_json(d)}};
    t << "diagonal component (" << (left ? "left" : "right") << "):\n";
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        t << "  gamma(" << a.name(static_cast<Letter>(x)) << "," << a.name(static_cast<Letter>(y))
          << ") = " << d.gamma(static_cast<Letter>(x), static_cast<Letter>(y)).to_string() << "\n";
  } else {
    j["diagonal"] = nullptr;
  }
  j["warnings"] = warnings;
  for (const auto& w : warnings) t << "warning: " << w << "\n";

  const bool braided = bc.ok && bc.invertible;
  j["verdict"] = braided ? "braiding" : "not a braiding";
  t << "verdict: " << (braided ? "braiding" : "not a braiding") << "\n";
  r.text = t.str();
  r.exit_code = braided ? exit_ok : exit_verification_failed;
  return r;
}

CommandResult cmd_pbw(const RunConfig& cfg) {
  if (cfg.degree_cap < 1) throw DomainError("--max-degree must be at least 1");
  if (cfg.nichols == (cfg.inputs.size() == 2))
    throw DomainError("pbw needs either a relations file or --nichols");
  Braiding c = load_braiding(cfg);
  const NicholsOptions opts = nichols_options(cfg);
  checked_power(c.dim(), cfg.degree_cap, opts.space_cap);

  CommandResult r;
  std::ostringstream t;
  Json& j = r.json;
  j["command"] = "pbw";

  // Reorder the basis when the braiding is not triangular in the given order.
  const bool ok_as_given = cfg.right ? c.is_right_triangular() : c.is_left_triangular();
  if (!ok_as_given) {
    const auto perm = safe_search(cfg.right ? flip_conjugate(c) : c);
    if (!perm)
      throw DomainError(std::string("braiding is not ") + (cfg.right ? "right" : "left") +
                        " triangular for any basis order searched");
    c = permute_basis(c, *perm);
    t << "note: using the basis order " << order_text(c.alphabet()) << "\n";
  }
  const Alphabet& a = c.alphabet();
  j["basis_order"] = a.names();

  std::vector<FreeElement> rels;
  if (!cfg.nichols) rels = relations_from_json_text(read_text_file(cfg.inputs[1]), a, c.field());
  const GradedIdealPresentation p =
      cfg.nichols ? GradedIdealPresentation::nichols_kernel(c, cfg.degree_cap, opts)
                  : GradedIdealPresentation::from_generators(c, rels, cfg.degree_cap, opts);
  const std::string ideal = cfg.nichols ? "Nichols ideal (ker S_n in each degree)"
                                        : "two-sided ideal of the relations (lower bound for the generated biideal)";
  j["ideal_description"] = ideal;
  t << "ideal: " << ideal << "\n";
  t << "route: " << (cfg.right ? "right triangular, via word reversal" : "left triangular") << "\n";

  const PBWData data = cfg.right ? transfer_right_triangular(p) : compute_pbw(p);
  j["pbw"] = pbw_to_json(data);
  t << "PBW generators (" << data.generators.size() << "):\n";
  for (const auto& g : data.generators)
    t << "  " << word_text(a, g.word) << "  height " << height_text(g.height) << "  [" << g.height.reason << "]\n";

  bool all_ok = true;
  Json checks = Json::array();
  t << "degree  quotient_dim  pbw_monomials  exact  independent(B)  independent([B]_c)  check\n";
  auto opt_text = [](const std::optional<bool>& b) { return b ? std::string(yes_no(*b)) : std::string("-"); };
  auto opt_json = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  for (std::size_t n = 0; n <= cfg.degree_cap; ++n) {
    const DimensionVerdict v = dimension_check(p, data, n);
    const bool exact = data.dims[n].exact;
    all_ok = all_ok && v.passed();
    checks.push_back({{"degree", n},
                      {"quotient_dim", v.quotient_dim},
                      {"pbw_monomials", v.monomial_count},
                      {"exact", exact},
                      {"monomials_independent", opt_json(v.monomials_independent)},
                      {"commutators_independent", opt_json(v.commutators_independent)},
                      {"passed", v.passed()}});
    t << "  " << n << "  " << v.quotient_dim << "  " << v.monomial_count << "  " << yes_no(exact) << "  "
      << opt_text(v.monomials_independent) << "  " << opt_text(v.commutators_independent) << "  "
      << (v.passed() ? "pass" : "FAIL") << "\n";
  }
  j["dimension_checks"] = checks;
  j["verdict"] = all_ok ? "pass" : "fail";
  t << "verdict: " << (all_ok ? "pass" : "fail") << "\n";
  r.text = t.str();
  r.exit_code = all_ok ? exit_ok : exit_verification_failed;
  return r;
}

CommandResult cmd_nichols(const RunConfig& cfg) {
  if (cfg.degree_cap < 1) throw DomainError("--max-degree must be at least 1");
  const Braiding c = load_braiding(cfg);
  const NicholsOptions opts = nichols_options(cfg);
  checked_power(c.dim(), cfg.degree_cap, opts.space_cap);
  CommandResult r;
  std::ostringstream t;
  Json reports = Json::array();
  for (std::size_t n = 1; n <= cfg.degree_cap; ++n) {
    const NicholsReport rep = nichols_report(c, n, opts);
    reports.push_back(report_to_json(rep));
    t << "degree " << n << ": dim " << rep.dim << ", ideal dim " << rep.ideal_dim << " ("
      << (rep.exact ? "exact" : "probabilistic rank") << "), new relations " << rep.new_relations.size() << "\n";
    for (const auto& rel : rep.new_relations) t << "  " << rel.to_string() << " = 0\n";
  }
  r.json = {{"command", "nichols"}, {"reports", reports}};
  r.text = t.str();
  return r;
}

CommandResult cmd_verify_paper(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.nichols = nichols_options(cfg);
  opts.seed = cfg.seed;
  const VerifyReport rep = verify_paper(paper_fixtures(), opts);
  CommandResult r;
  r.json = verify_to_json(rep);
  r.json["command"] = "verify-paper";
  std::ostringstream t;
  for (const auto& c : rep.checks) {
    t << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) t << " (" << c.detail << ")";
    t << "\n";
  }
  t << "verdict: " << (rep.passed() ? "pass" : "fail") << "\n";
  r.text = t.str();
  r.exit_code = rep.passed() ? exit_ok : exit_verification_failed;
  return r;
}

CommandResult cmd_export_uqsl2(const RunConfig& cfg) {
  const UqBraiding ub = build_braiding(cfg.module_n);
  CommandResult r;
  r.json = braiding_to_json(ub.braiding);
  r.text = r.json.dump(2) + "\n";
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Triangular braidings, Nichols algebras and PBW bases"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_flag("--exact", cfg.exact, "Exact ranks over Q(q) (slow)");
    sub->add_option("--seed", cfg.seed, "Seed for random evaluation points");
  };

  auto* check = app.add_subcommand("check", "Braid equation and triangularity of a braiding file");
  check->add_option("braiding", cfg.inputs, "Braiding JSON file")->required()->expected(1);
  add_common(check);

  auto* pbw = app.add_subcommand("pbw", "PBW generators, heights and dimensions");
  pbw->add_option("files", cfg.inputs, "Braiding JSON file, then an optional relations JSON file")
      ->required()
      ->expected(1, 2);
  pbw->add_flag("--nichols", cfg.nichols, "Use the Nichols ideal instead of a relations file");
  pbw->add_flag("--right", cfg.right, "Right triangular braiding; go through word reversal");
  pbw->add_option("--max-degree", cfg.degree_cap, "Degree cap")->check(CLI::PositiveNumber);
  add_common(pbw);

  auto* nichols = app.add_subcommand("nichols", "Nichols algebra dimensions and new relations per degree");
  nichols->add_option("braiding", cfg.inputs, "Braiding JSON file")->required()->expected(1);
  nichols->add_option("--max-degree", cfg.degree_cap, "Degree cap")->check(CLI::PositiveNumber);
  add_common(nichols);

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the U_q(sl2) examples and the lemma checks");
  add_common(verify);

  auto* exporter = app.add_subcommand("export-uqsl2", "Write the braiding of L(n) as JSON");
  exporter->add_option("--n", cfg.module_n, "Highest weight")->required()->check(CLI::Range(1, 3));
  exporter->add_option("-o,--output", cfg.output, "Output file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }
  set_worker_count(cfg.threads);

  try {
    CommandResult r;
    if (check->parsed()) r = cmd_check(cfg);
    else if (pbw->parsed()) r = cmd_pbw(cfg);
    else if (nichols->parsed()) r = cmd_nichols(cfg);
    else if (verify->parsed()) r = cmd_verify_paper(cfg);
    else r = cmd_export_uqsl2(cfg);

    const std::string body = cfg.json || exporter->parsed() ? r.json.dump(2) + "\n" : r.text;
    if (!cfg.output.empty()) {
      std::ofstream f(cfg.output);
      if (!f) throw DomainError("cannot write " + cfg.output);
      f << body;
    } else {
      out << body;
    }
    return r.exit_code;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return exit_resource_cap;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const FieldMismatch& e) {
    err << "field mismatch: " << e.what() << "\n";
    return exit_input_error;
  } catch (const AlphabetMismatch& e) {
    err << "alphabet mismatch: " << e.what() << "\n";
    return exit_input_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << "\n";
    return exit_input_error;
  }
}

} // namespace braidpbw
