#include <doctest.h>

#include "braidpbw/cli.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace braidpbw;
namespace fs = std::filesystem;

namespace {

const std::string golden_dir = std::string(BRAIDPBW_TEST_DIR) + "/golden";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidpbw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("braidpbw_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path / name) << body;
    return (path / name).string();
  }
};

bool line_present(const std::string& text, const std::string& line) {
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);)
    if (l == line) return true;
  return false;
}

} // namespace

TEST_CASE("golden outputs") {
  const std::string l1 = golden_dir + "/L1.json";
  auto check = run({"check", l1});
  CHECK(check.code == exit_ok);
  CHECK(check.out == slurp(golden_dir + "/check_L1.txt"));
  auto check_json = run({"check", l1, "--json"});
  CHECK(parse_json_text(check_json.out) == parse_json_text(slurp(golden_dir + "/check_L1.json")));

  auto pbw = run({"pbw", l1, "--nichols", "--max-degree", "4"});
  CHECK(pbw.code == exit_ok);
  CHECK(pbw.out == slurp(golden_dir + "/pbw_L1.txt"));
  auto pbw_json = run({"pbw", l1, "--nichols", "--max-degree", "4", "--json"});
  CHECK(parse_json_text(pbw_json.out) == parse_json_text(slurp(golden_dir + "/pbw_L1.json")));
}

TEST_CASE("text and JSON verdicts agree") {
  const std::string l1 = golden_dir + "/L1.json";
  Json j = parse_json_text(run({"check", l1, "--json"}).out);
  std::string t = run({"check", l1}).out;
  CHECK(line_present(t, std::string("YBE: ") + (j["ybe"]["ok"].get<bool>() ? "ok" : "fail")));
  CHECK(line_present(t, std::string("invertible: ") + (j["invertible"].get<bool>() ? "yes" : "no")));
  CHECK(line_present(t, std::string("left-triangular: ") + (j["left_triangular"].get<bool>() ? "yes" : "no")));
  CHECK(t.find(std::string("right-triangular: ") + (j["right_triangular"].get<bool>() ? "yes" : "no")) !=
        std::string::npos);
  CHECK(line_present(t, "verdict: " + j["verdict"].get<std::string>()));

  Json pj = parse_json_text(run({"pbw", l1, "--nichols", "--max-degree", "3", "--json"}).out);
  std::string pt = run({"pbw", l1, "--nichols", "--max-degree", "3"}).out;
  for (const auto& row : pj["dimension_checks"]) {
    std::string prefix = "  " + std::to_string(row["degree"].get<int>()) + "  " +
                         std::to_string(row["quotient_dim"].get<int>()) + "  " +
                         std::to_string(row["pbw_monomials"].get<int>()) + "  ";
    std::string suffix = row["passed"].get<bool>() ? "  pass" : "  FAIL";
    bool found = false;
    std::istringstream s(pt);
    for (std::string l; std::getline(s, l);)
      found = found || (l.rfind(prefix, 0) == 0 && l.size() >= suffix.size() &&
                        l.compare(l.size() - suffix.size(), suffix.size(), suffix) == 0);
    CHECK(found);
  }
  CHECK(line_present(pt, "verdict: " + pj["verdict"].get<std::string>()));

  RunConfig cfg;
  cfg.command = "verify-paper";
  CommandResult vr = cmd_verify_paper(cfg);
  CHECK(vr.exit_code == exit_ok);
  std::size_t lines = 0;
  for (const auto& c : vr.json["checks"]) {
    std::string head = (c["passed"].get<bool>() ? "PASS " : "FAIL ") + c["name"].get<std::string>();
    CHECK(vr.text.find(head) != std::string::npos);
    ++lines;
  }
  CHECK(lines >= 90);
  CHECK(line_present(vr.text, std::string("verdict: ") + (vr.json["passed"].get<bool>() ? "pass" : "fail")));
}

TEST_CASE("tampered fixture fails on the L(1) kernel") {
  auto fixtures = paper_fixtures();
  FreeElement& r = fixtures[0].quadratic.front();
  FreeElement tampered(r.alphabet(), r.field());
  for (const auto& [w, s] : r.terms())
    tampered.add(w, s == Scalar::one(r.field()) ? s : -(Scalar::q() * Scalar::q()));
  r = tampered;
  VerifyOptions opts;
  opts.random_braidings = 0;
  VerifyReport rep = verify_paper(fixtures, opts);
  CHECK_FALSE(rep.passed());
  bool kernel_failed = false;
  for (const auto& c : rep.checks) {
    if (c.name == "L(1) degree-2 kernel equals the printed relations") kernel_failed = !c.passed;
    if (c.name.rfind("L(2)", 0) == 0 || c.name.rfind("L(3)", 0) == 0) CHECK(c.passed);
  }
  CHECK(kernel_failed);
}

TEST_CASE("commands and exit codes") {
  TempDir tmp;
  const std::string l1 = golden_dir + "/L1.json";

  auto exported = run({"export-uqsl2", "--n", "2", "-o", (tmp.path / "L2.json").string()});
  CHECK(exported.code == exit_ok);
  CHECK(parse_json_text(slurp(tmp.path / "L2.json")) == braiding_to_json(build_braiding(2).braiding));
  CHECK(run({"export-uqsl2", "--n", "1"}).out == slurp(l1));
  CHECK(run({"export-uqsl2", "--n", "4"}).code == exit_input_error);

  Json l1j = parse_json_text(slurp(l1));
  l1j["matrix"][0][3] = "1";
  auto corrupted = run({"check", tmp.write("bad.json", l1j.dump())});
  CHECK(corrupted.code == exit_verification_failed);
  CHECK(corrupted.out.find("YBE: fail (witness") != std::string::npos);

  auto flip = run({"check", tmp.write("flip.json", R"({"field": "Q", "basis": ["a", "b"],
    "matrix": [["1","0","0","0"],["0","0","1","0"],["0","1","0","0"],["0","0","0","1"]]})")});
  CHECK(flip.code == exit_ok);
  CHECK(flip.out.find("left-triangular: yes\nright-triangular: yes") != std::string::npos);
  CHECK(flip.out.find("gamma(a,b) = 1\n") != std::string::npos);

  l1j = parse_json_text(slurp(l1));
  l1j["matrix"][1][2] = "q^";
  auto bad_literal = run({"check", tmp.write("lit.json", l1j.dump(2))});
  CHECK(bad_literal.code == exit_input_error);
  CHECK(bad_literal.err.find("line") != std::string::npos);
  CHECK(run({"check", (tmp.path / "missing.json").string()}).code == exit_input_error);
  CHECK(run({"frobnicate"}).code == exit_input_error);
  CHECK(run({"pbw", l1}).code == exit_input_error);
  CHECK(run({"nichols", l1, "--max-degree", "13"}).code == exit_resource_cap);

  auto zero = run({"pbw", l1, tmp.write("none.json", "[]"), "--max-degree", "3", "--json"});
  CHECK(zero.code == exit_ok);
  Json zj = parse_json_text(zero.out);
  CHECK(zj["pbw"]["generators"].size() == enumerate_lyndon(Alphabet::indexed(2), 3).size());
  CHECK(zj["pbw"]["ideal"] == "generators");

  auto right = run({"pbw", l1, "--nichols", "--right", "--max-degree", "5"});
  CHECK(right.code == exit_ok);
  CHECK(right.out.find("note: using the basis order x1 < x0") != std::string::npos);
  CHECK(line_present(right.out, "verdict: pass"));

  auto nichols = run({"nichols", l1, "--max-degree", "3", "--json"});
  CHECK(nichols.code == exit_ok);
  Json nj = parse_json_text(nichols.out);
  CHECK(nj["reports"][1]["dim"] == 3);
  CHECK(nj["reports"][1]["relations"].size() == 1);
  CHECK(nj["reports"][2]["relations"].empty());
}
