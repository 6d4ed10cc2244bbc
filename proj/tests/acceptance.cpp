// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "diagrams.hpp"
#include "eqsig/bounds.hpp"
#include "eqsig/corpus.hpp"
#include "eqsig/document.hpp"
#include "eqsig/moves.hpp"
#include "eqsig/selftest.hpp"
#include "eqsig/signature.hpp"

using namespace eqsig;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const EquivariantGoeritz& form(const std::string& name) {
  return std::get<EquivariantGoeritz>(find_corpus_entry(name)->document.payload);
}

const CrossingColor Bi = CrossingColor::Bicolored;
const CrossingColor Uni = CrossingColor::Unicolored;

void signature_is(Checker& check, const std::string& what, const EquivariantGoeritz& g, long plus,
                  long minus, long e, long value) {
  const auto s = equivariant_signature(g);
  std::ostringstream os;
  os << what << ": got (" << s.sigma_plus << ", " << s.sigma_minus << ", " << s.e << ", " << s.value
     << ")";
  check(s.sigma_plus == plus && s.sigma_minus == minus && s.e == e && s.value == value, os.str());
}

void criterion_1(Checker& check) {
  signature_is(check, "5_1", form("5_1"), -2, -2, 4, -4);

  const auto b = apply_move_matrix(form("5_1"), TypeB{1, 1});
  check(same_form(b, form("5_1-after-B")), "5_1 after B: blocks differ from M_B");
  signature_is(check, "5_1 after B", b, 0, -2, 4, -2);
  const long db = delta_sigma(form("5_1"), TypeB{1, 1});
  check(db == 2 && db <= move_bound(MoveKind::B), "5_1 after B: delta");

  const auto c = apply_move_matrix(form("5_1"), TypeC{1, Bi});
  const SymIntMatrix m_c{{-2, 1, 0, 1, 0, 0}, {1, -2, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                         {1, 0, 0, -2, 1, 0}, {0, 0, 0, 1, -2, 1}, {0, 0, 0, 0, 1, 0}};
  check(full_matrix(c) == m_c, "5_1 after C: M_C differs from the 6x6 matrix");
  check(c.type_c && c.type_c->v == std::vector<Integer>{0, 1} && c.A(2, 2) == 0, "5_1 after C: v or new diagonal");
  signature_is(check, "5_1 after C", c, -1, -1, 2, -2);
  check(delta_sigma(form("5_1"), TypeC{1, Bi}) == 2, "5_1 after C: delta");

  signature_is(check, "9_40", form("9_40"), -2, -4, -4, 6);

  const MoveSpec a2 = TypeA2{1, 4, 1, Bi, 1, false};
  const auto m1 = apply_move_matrix(form("9_40"), a2);
  const SymIntMatrix m1_full{{-1, 1, 0, -1, 1, 0, 0, 0}, {1, -2, 1, 0, 0, 0, 0, 0},
                             {0, 1, -1, 0, 0, 0, -1, 0}, {-1, 0, 0, -1, 0, 0, 0, 1},
                             {1, 0, 0, 0, -1, 1, 0, -1}, {0, 0, 0, 0, 1, -2, 1, 0},
                             {0, 0, -1, 0, 0, 1, -1, 0}, {0, 0, 0, 1, -1, 0, 0, -1}};
  check(full_matrix(m1) == m1_full, "9_40 after A2: matrix differs from M_1");
  signature_is(check, "9_40 after A2", m1, -2, -2, 0, 0);
  const long da = delta_sigma(form("9_40"), a2);
  check(da == -6 && -da <= move_bound(MoveKind::A2), "9_40 after A2: delta");

  const auto m2 = apply_move_matrix(m1, TypeA1{4, 1, Uni, std::nullopt});
  check(m2.A(3, 3) == 1 && same_form(m2, form("9_40-after-A1+A2")), "9_40 after A1+A2: matrix differs from M_2");
  check(equivariant_signature(m2).value == 0, "9_40 after A1+A2: sigma~");

  const auto c9 = apply_move_matrix(form("9_40"), TypeC{1, Bi});
  check(same_form(c9, form("9_40-after-C")), "9_40 after C: M_C differs from the 10x10 matrix");
  check(c9.type_c && c9.type_c->v == std::vector<Integer>{0, 0, 1, 1} && c9.A(4, 4) == -1,
        "9_40 after C: v or new diagonal");
  signature_is(check, "9_40 after C", c9, -3, -3, -6, 6);
  check(delta_sigma(form("9_40"), TypeC{1, Bi}) == 0, "9_40 after C: delta");

  const auto& six = find_corpus_entry("6_1")->document;
  check(form("6_1").A == SymIntMatrix{{-3, 1}, {1, -2}} && form("6_1").B == SymIntMatrix{{2, 0}, {0, 0}},
        "6_1: blocks");
  signature_is(check, "6_1", form("6_1"), -2, -2, 0, 0);
  check(six.expected && six.expected->stated_sigma_tilde == -2 && six.notes &&
            six.notes->find("DISCREPANCY") != std::string::npos,
        "6_1: stated value and discrepancy flag");
}

bool suite_ok(Checker& check, const SuiteResult& r) {
  std::ostringstream os;
  os << r.name << ": " << r.failures << " failures in " << r.trials << " trials";
  if (!r.messages.empty()) os << " (" << r.messages.front() << ")";
  check(r.ok(), os.str());
  return r.ok();
}

SuiteOptions options(std::size_t trials) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = 42;
  o.max_n = 6;
  return o;
}

void criterion_2(Checker& check) {
  for (const auto& e : corpus()) {
    if (e.document.kind() != DocumentKind::EquivariantGoeritz) continue;
    const auto d = check_det_identity(form(e.name));
    check(d.identity_holds, e.name + ": det identity");
    check(d.knot_like, e.name + ": |det M| not odd");
  }
  suite_ok(check, suite_det_identity(options(1000)));
}

void criterion_3(Checker& check) { suite_ok(check, suite_method_agreement(options(1000))); }

void criterion_4(Checker& check) {
  for (const auto& e : corpus()) {
    if (e.document.kind() != DocumentKind::EquivariantGoeritz) continue;
    const auto& g = form(e.name);
    for (int s : {1, -1}) {
      const auto c = apply_move_matrix(g, TypeC{s, Bi});
      const auto r = resolution_matrix(c);
      const std::size_t n1 = c.n();
      // minus part of the resolution: 2(A0 + B0)
      bool kernel = true;
      for (std::size_t i = 0; i < n1; ++i) {
        Integer row = 0;
        for (std::size_t j = 0; j < n1; ++j) row += 2 * (r(i, j) + r(i, n1 + j));
        kernel = kernel && row == 0;
      }
      check(kernel, e.name + ": 1 not in the kernel of the resolution minus part");
      check(det(minus_part(c)) == 2 * s * det(minus_part(g)), e.name + ": det(M_C^-) != 2s det(M^-)");
    }
  }
  suite_ok(check, suite_type_c_resolution(options(500), 1));
  suite_ok(check, suite_type_c_resolution(options(500), -1));
}

void criterion_5(Checker& check) {
  for (MoveKind k : {MoveKind::B, MoveKind::A1, MoveKind::A2, MoveKind::C})
    suite_ok(check, suite_move_bounds(options(1000), k));
}

void criterion_6(Checker& check) { suite_ok(check, suite_rank_one(options(500))); }

void criterion_7(Checker& check) {
  const auto diagrams = eqsig::testkit::hand_built_diagrams();
  check(diagrams.size() >= 20, "fewer than 20 diagrams");
  bool has61 = false, has51 = false;
  for (const auto& d : diagrams) {
    has61 = has61 || (d.label == "6_1" && same_form(goeritz(d), form("6_1")));
    has51 = has51 || (d.label == "5_1" && same_form(goeritz(d), form("5_1")));
    const auto g = goeritz(d);
    for (const auto& m : eqsig::testkit::applicable_moves(d)) {
      const auto lhs = goeritz(apply_move_diagram(d, m));
      const auto rhs = apply_move_matrix(g, move_projection(d, m));
      check(same_form(lhs, rhs), d.label + ": " + eqsig::testkit::describe(m));
    }
  }
  check(has61 && has51, "missing 6_1 or 5_1 reconstruction");
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::istringstream in;
  std::ostringstream o, e;
  const int code = cli::run_cli(args, in, o, e);
  if (out) *out = o.str();
  return code;
}

void criterion_8(Checker& check) {
  for (const auto& e : corpus()) {
    const std::string text = serialize_document(e.document);
    check(parse_document(text) == e.document && serialize_document(parse_document(text)) == text,
          e.name + ": round trip");
  }
  const auto dir = std::filesystem::temp_directory_path() / "eqsig_acceptance";
  std::filesystem::remove_all(dir);
  check(cli({"corpus", "export", dir.string()}) == 0, "corpus export");
  const std::string f940 = (dir / "9_40.json").string();
  const std::string f51 = (dir / "5_1.json").string();
  std::string out;
  check(cli({"verify", f940, "--moves",
             "A2 i=1 j=4 sign=+1 color=bicolored eps=+1; A1 k=4 sign=+1 color=unicolored"},
            &out) == 0 &&
            out.find("trajectory: 6 -> 0 -> 0") != std::string::npos,
        "verify 9_40 type A sequence: exit 0 with trajectory 6 -> 0 -> 0");
  check(cli({"verify", f51, "--moves", "C sign=+1 color=bicolored; C sign=+1 color=bicolored", "--max-delta", "0"}) == 3,
        "verify with a forced violation: exit 3");
  check(cli({"verify", f51, "--moves", "A2 i=2 j=2 sign=-1 color=unicolored"}) == 2, "verify bad script: exit 2");
  check(cli({"verify", f51, "--moves", "B k=7 sign=+1"}) == 1, "verify out-of-range move: exit 1");
  std::string first, second;
  const int c1 = cli({"selftest", "--seed", "42"}, &first);
  const int c2 = cli({"selftest", "--seed", "42"}, &second);
  check(c1 == 0 && c2 == 0, "selftest --seed 42 failed");
  check(first == second, "selftest --seed 42 not reproducible");
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"1 corpus regression (exact)", criterion_1},
      {"2 determinant identities", criterion_2},
      {"3 jones/inertia agreement", criterion_3},
      {"4 type C resolution identities", criterion_4},
      {"5 per-move bounds", criterion_5},
      {"6 rank-one diagnostics", criterion_6},
      {"7 diagram/matrix consistency", criterion_7},
      {"8 cli round trip, exit codes, reproducible selftest", criterion_8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Checker check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.failures.empty() ? "[PASS] " : "[FAIL] ") << "criterion " << name << "\n";
    for (const auto& f : check.failures) std::cout << "         " << f << "\n";
    if (!check.failures.empty()) ++failed;
  }
  std::cout << (failed ? "acceptance: FAILED (" + std::to_string(failed) + " criteria)" : "acceptance: all criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
