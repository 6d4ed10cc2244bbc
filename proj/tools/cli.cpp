#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eqsig/bounds.hpp"
#include "eqsig/corpus.hpp"
#include "eqsig/document.hpp"
#include "eqsig/error.hpp"
#include "eqsig/move_script.hpp"
#include "eqsig/selftest.hpp"
#include "eqsig/signature.hpp"

namespace eqsig::cli {

namespace {

using Json = nlohmann::ordered_json;

// Usage problems that CLI11 cannot see (missing files, unknown corpus names).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

// The form a document describes; diagrams are converted through their Goeritz form.
EquivariantGoeritz form_of(const Document& doc) {
  if (const auto* g = std::get_if<EquivariantGoeritz>(&doc.payload)) return *g;
  if (const auto* d = std::get_if<SymmetricDiagram>(&doc.payload)) return goeritz(*d);
  throw DomainError("expected an equivariant-goeritz or symmetric-diagram document, got " +
                    to_string(doc.kind()));
}

struct Comparison {
  std::vector<std::string> mismatches;
  std::optional<long> stated;
};

Comparison compare(const std::optional<Expectation>& expected, const EquivariantSignature& s,
                   const DetIdentityCheck& d) {
  Comparison c;
  if (!expected) return c;
  auto check = [&](const char* name, const auto& want, const auto& got) {
    if (want && !(*want == got)) {
      std::ostringstream os;
      os << name << ": expected " << *want << ", computed " << got;
      c.mismatches.push_back(os.str());
    }
  };
  check("sigma_plus", expected->sigma_plus, s.sigma_plus);
  check("sigma_minus", expected->sigma_minus, s.sigma_minus);
  check("e", expected->e, s.e);
  check("sigma_tilde", expected->sigma_tilde, s.value);
  check("det", expected->det_full, d.det_full);
  if (expected->stated_sigma_tilde && *expected->stated_sigma_tilde != s.value)
    c.stated = expected->stated_sigma_tilde;
  return c;
}

Json lower_bounds_json(const LowerBounds& lb) {
  return Json{{"uA_min", lb.uA_min},
              {"uB_min", lb.uB_min},
              {"uC_min", lb.uC_min},
              {"homotopy_selfintersections_min", lb.homotopy_selfintersections_min}};
}

int cmd_compute(Io io, const std::string& path, bool json) {
  const Document doc = parse_document(read_input(path, io.in));
  const EquivariantGoeritz g = form_of(doc);
  const EquivariantSignature s = equivariant_signature(g);
  const DetIdentityCheck d = check_det_identity(g);
  const LowerBounds lb = lower_bounds_from_sigma(s.value);
  const Comparison cmp = compare(doc.expected, s, d);

  if (json) {
    Json j{{"command", "compute"},
           {"label", g.label},
           {"n", g.n()},
           {"sigma_plus", s.sigma_plus},
           {"sigma_minus", s.sigma_minus},
           {"e", json_integer(s.e)},
           {"sigma_tilde", s.value},
           {"det_plus", json_integer(d.det_plus)},
           {"det_minus", json_integer(d.det_minus)},
           {"det", json_integer(d.det_full)},
           {"det_identity", d.identity_holds},
           {"det_odd", d.knot_like},
           {"lower_bounds", lower_bounds_json(lb)}};
    if (doc.expected) {
      j["expected_match"] = cmp.mismatches.empty();
      j["mismatches"] = cmp.mismatches;
    }
    if (doc.expected && doc.expected->stated_sigma_tilde) {
      j["stated_sigma_tilde"] = *doc.expected->stated_sigma_tilde;
      j["discrepancy"] = cmp.stated.has_value();
    }
    if (doc.notes) j["notes"] = *doc.notes;
    io.out << j.dump() << "\n";
  } else {
    io.out << "label:      " << g.label << "\n"
           << "n:          " << g.n() << "\n"
           << "sigma(M+):  " << s.sigma_plus << "\n"
           << "sigma(M-):  " << s.sigma_minus << "\n"
           << "e:          " << s.e << "\n"
           << "sigma~:     " << s.value << "\n"
           << "det(M+):    " << d.det_plus << "\n"
           << "det(M-):    " << d.det_minus << "\n"
           << "det(M):     " << d.det_full << "\n"
           << "det(M+) det(M-) = 4^n det(M): " << (d.identity_holds ? "holds" : "FAILS") << "\n"
           << "|det(M)| odd: " << (d.knot_like ? "yes" : "no") << "\n"
           << "lower bounds: uA >= " << lb.uA_min << ", uB >= " << lb.uB_min << ", uC >= "
           << lb.uC_min << ", homotopy self-intersections >= " << lb.homotopy_selfintersections_min
           << "\n";
    if (doc.expected) {
      if (cmp.mismatches.empty()) io.out << "expected values: match\n";
      for (const auto& m : cmp.mismatches) io.out << "expected values: MISMATCH " << m << "\n";
    }
    if (cmp.stated)
      io.out << "discrepancy: published sigma~ is " << *cmp.stated << ", definition gives "
             << s.value << "\n";
    if (doc.notes) io.out << "notes: " << *doc.notes << "\n";
  }
  return cmp.mismatches.empty() ? kOk : kDomainError;
}

int cmd_apply(Io io, const std::string& path, const std::string& script, const std::string& out_path) {
  const auto moves = parse_move_script(script);
  const Document doc = parse_document(read_input(path, io.in));
  EquivariantGoeritz g = form_of(doc);
  for (const auto& m : moves) g = apply_move_matrix(g, m);
  Document result{g, "moves applied: " + format_move_script(moves), std::nullopt};
  write_output(out_path, serialize_document(result) + "\n", io.out);
  return kOk;
}

int cmd_verify(Io io, const std::string& path, const std::string& script, bool json,
               std::optional<long> max_delta) {
  const auto moves = parse_move_script(script);
  const Document doc = parse_document(read_input(path, io.in));
  const EquivariantGoeritz g = form_of(doc);
  const BoundReport report = verify_sequence(g, moves, max_delta);
  if (json) {
    io.out << serialize_document(Document{report, std::nullopt, std::nullopt}, -1) << "\n";
  } else {
    io.out << "label: " << report.label << "\n"
           << "initial sigma~: " << report.initial_sigma << "\n";
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
      const BoundStep& st = report.steps[i];
      io.out << "step " << i + 1 << ": " << format_move(st.move) << "  sigma~ " << st.sigma_before
             << " -> " << st.sigma_after << "  delta " << st.delta << "  bound " << st.bound
             << (st.compliant ? "  ok" : "  VIOLATION") << "\n";
    }
    const LowerBounds& lb = report.lower_bounds;
    io.out << "final sigma~: " << report.final_sigma << "\n"
           << "trajectory:";
    io.out << " " << report.initial_sigma;
    for (const auto& st : report.steps) io.out << " -> " << st.sigma_after;
    io.out << "\n"
           << "uA >= " << lb.uA_min << "  (" << LowerBoundCaveats::uA << ")\n"
           << "uB >= " << lb.uB_min << "  (" << LowerBoundCaveats::uB << ")\n"
           << "uC >= " << lb.uC_min << "  (" << LowerBoundCaveats::uC << ")\n"
           << "homotopy self-intersections >= " << lb.homotopy_selfintersections_min << "  ("
           << LowerBoundCaveats::homotopy << ")\n"
           << (report.compliant ? "all steps within bounds\n" : "bound violated\n");
  }
  return report.compliant ? kOk : kBoundViolation;
}

int cmd_corpus_list(Io io) {
  for (const auto& e : corpus()) {
    io.out << std::left << std::setw(20) << e.name << " " << std::setw(20) << to_string(e.document.kind());
    if (!e.matches.empty()) io.out << " matches " << e.matches;
    io.out << "\n";
  }
  return kOk;
}

int cmd_corpus_show(Io io, const std::string& name) {
  const CorpusEntry* e = find_corpus_entry(name);
  if (!e) throw UsageError("no corpus entry named " + name);
  io.out << serialize_document(e->document) << "\n";
  return kOk;
}

int cmd_corpus_export(Io io, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : corpus()) {
    const auto file = std::filesystem::path(dir) / (e.name + ".json");
    write_output(file.string(), serialize_document(e.document) + "\n", io.out);
    io.out << file.string() << "\n";
  }
  return kOk;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

int cmd_selftest(Io io, const SuiteOptions& options, bool json) {
  const auto results = run_selftest(options);
  bool ok = true;
  std::uint64_t combined = 0xCBF29CE484222325ull;
  for (const auto& r : results) {
    ok = ok && r.ok();
    for (int shift = 0; shift < 64; shift += 8) {
      combined ^= (r.digest >> shift) & 0xFF;
      combined *= 0x100000001B3ull;
    }
    if (json) {
      io.out << Json{{"suite", r.name},
                     {"trials", r.trials},
                     {"rejected", r.rejected},
                     {"failures", r.failures},
                     {"digest", hex(r.digest)},
                     {"messages", r.messages}}
                    .dump()
             << "\n";
    } else {
      io.out << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(18) << r.name
             << " trials=" << r.trials << " rejected=" << r.rejected << " failures=" << r.failures
             << " digest=" << hex(r.digest) << "\n";
      for (const auto& m : r.messages) io.out << "    " << m << "\n";
    }
  }
  if (json)
    io.out << Json{{"seed", options.seed}, {"digest", hex(combined)}, {"ok", ok}}.dump() << "\n";
  else
    io.out << "seed=" << options.seed << " digest=" << hex(combined) << (ok ? " ok" : " FAILED") << "\n";
  return ok ? kOk : kSelftestFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Equivariant signature and unknotting-move bounds for strongly invertible knots", "eqsig"};
  app.require_subcommand(1);

  std::string file, out_path, name, dir;
  std::vector<std::string> scripts;
  bool json = false;
  std::optional<long> max_delta;
  SuiteOptions suite;

  auto* compute = app.add_subcommand("compute", "Equivariant signature of a goeritz or diagram document");
  compute->add_option("FILE", file, "Input document, - for stdin")->required();
  compute->add_flag("--json", json, "Single-line JSON output");

  auto* apply = app.add_subcommand("apply", "Apply a move script and write the resulting goeritz document");
  apply->add_option("FILE", file, "Input document, - for stdin")->required();
  apply->add_option("--moves", scripts, "Move script; may be repeated")->required();
  apply->add_option("--out", out_path, "Output file (stdout by default)");

  auto* verify = app.add_subcommand("verify", "Check per-move signature bounds along a move script");
  verify->add_option("FILE", file, "Input document, - for stdin")->required();
  verify->add_option("--moves", scripts, "Move script; may be repeated")->required();
  verify->add_flag("--json", json, "Print the bound-report document on one line");
  verify->add_option("--max-delta", max_delta, "Replace every per-move bound")->check(CLI::NonNegativeNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "Embedded reference documents");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List entries");
  auto* show = corpus_cmd->add_subcommand("show", "Print one entry");
  show->add_option("NAME", name)->required();
  auto* export_cmd = corpus_cmd->add_subcommand("export", "Write every entry to DIR/<name>.json");
  export_cmd->add_option("DIR", dir)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
  selftest->add_option("--trials", suite.trials, "Valid trials per suite")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", suite.seed, "Base seed");
  selftest->add_option("--max-n", suite.max_n, "Largest pair count")->check(CLI::Range(1, 12));
  selftest->add_flag("--json", json, "One JSON record per suite");

  std::vector<std::string> argv_store{"eqsig"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::string script;
  for (const auto& s : scripts) script += (script.empty() ? "" : ";") + s;

  const Io io{in, out, err};
  try {
    if (*compute) return cmd_compute(io, file, json);
    if (*apply) return cmd_apply(io, file, script, out_path);
    if (*verify) return cmd_verify(io, file, script, json, max_delta);
    if (*list) return cmd_corpus_list(io);
    if (*show) return cmd_corpus_show(io, name);
    if (*export_cmd) return cmd_corpus_export(io, dir);
    if (*selftest) return cmd_selftest(io, suite, json);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ScriptError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, std::cin, out, err);
}

}  // namespace eqsig::cli
