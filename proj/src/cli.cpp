#include "pancake/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancake/cayley_graph.hpp"
#include "pancake/equitable_partition.hpp"
#include "pancake/errors.hpp"
#include "pancake/format.hpp"
#include "pancake/quotient_spectra.hpp"
#include "pancake/spectral_verification.hpp"

namespace pancake {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 0;
  int n = 0;
  int n_max = 0;
  std::string out_path;
  std::string format;
  std::string source = "graph";
  std::string check;
  std::string scan;
  bool empirical = false;
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t dense_cap = kDefaultDenseCap;
  std::uint64_t exact_cap = kDefaultExactCap;
  double tolerance = kClusterTolerance;

  VerificationLimits limits() const { return {vertex_cap, dense_cap, exact_cap}; }
};

std::optional<std::uint64_t> env_cap(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string(name) + " must be a positive integer (got '" + raw + "')");
  }
  return value;
}

// Output goes to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (cfg.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.out_path);
  write(file);
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed,
                    std::string_view command) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    throw UsageError(std::string(command) + " does not support --format " + cfg.format);
  }
}

int run_build(const RunConfig& cfg, std::ostream& out) {
  const CayleyGraph g = build_graph(GroupParams(cfg.m, cfg.n), cfg.vertex_cap);
  emit(cfg, out, [&](std::ostream& os) { write_edge_list(g, os); });
  return kExitOk;
}

int run_spectrum(const RunConfig& cfg, bool m_given, std::ostream& out) {
  require_format(cfg, {"csv", "json"}, "spectrum");
  RealSpectrum s;
  if (cfg.source == "gsw") {
    if (m_given) throw UsageError("--source gsw takes only --n (it does not depend on m)");
    s = gsw_spectrum(cfg.n);
  } else {
    if (!m_given) throw UsageError("--source " + cfg.source + " requires --m");
    const GroupParams p(cfg.m, cfg.n);
    if (cfg.source == "graph") {
      s = full_spectrum(build_graph(p, cfg.vertex_cap), cfg.dense_cap);
    } else if (cfg.source == "quotient") {
      s = symmetric_spectrum(quotient_formula(p).entries.cast<double>());
    } else {
      s = block_circulant_spectrum(p);
    }
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      write_spectrum_json(s, os);
    } else {
      write_spectrum_csv(s, os);
    }
  });
  return kExitOk;
}

int run_quotient(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"csv"}, "quotient");
  const GroupParams p(cfg.m, cfg.n);
  QuotientMatrix q;
  if (cfg.empirical) {
    const CayleyGraph g = build_graph(p, cfg.vertex_cap);
    q = quotient_empirical(g, build_partition(g));
  } else {
    q = quotient_formula(p);
  }
  emit(cfg, out, [&](std::ostream& os) { write_quotient_csv(q, p, os); });
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"}, "verify");
  const GroupParams p(cfg.m, cfg.n);
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;
  bool passed = false;
  if (cfg.check == "gap") {
    const GapReport r = verify_gap(p, cfg.limits());
    rows = r.rows();
    passed = r.passed && r.lambda1_is_degree;
    notes.push_back("lambda2 = " + format_number(r.lambda2));
    notes.push_back("method: " + r.method);
  } else if (cfg.check == "containment") {
    const ContainmentReport r = verify_quotient_containment(p, cfg.limits());
    rows = r.rows();
    passed = r.passed;
    for (double x : r.unmatched) notes.push_back("unmatched quotient eigenvalue " + format_number(x));
  } else if (cfg.check == "multiplicity") {
    const MultiplicityReport r = verify_multiplicity(p, cfg.limits());
    rows = r.rows();
    passed = r.passed();
  } else {
    const QuotientFormulaReport r = verify_quotient_formula(p, cfg.limits());
    rows = r.rows();
    passed = r.passed;
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "csv") {
      write_check_rows_csv(rows, os);
    } else if (cfg.format == "json") {
      write_check_rows_json(rows, os);
    } else {
      os << "verify " << cfg.check << " m=" << cfg.m << " n=" << cfg.n << '\n';
      write_check_rows_text(rows, os);
      for (const auto& note : notes) os << "  " << note << '\n';
      os << (passed ? "PASS" : "FAIL") << '\n';
    }
  });
  return passed ? kExitOk : kExitCheckFailed;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"csv"}, "scan");
  if (cfg.scan == "conjecture2") {
    const ConjectureScan scan = conjecture2_scan(cfg.m, cfg.n_max, cfg.limits(), cfg.tolerance);
    emit(cfg, out, [&](std::ostream& os) { write_conjecture_csv(scan, os); });
  } else {
    const auto rows = gap_trend(cfg.m, cfg.n_max);
    emit(cfg, out, [&](std::ostream& os) { write_trend_csv(cfg.m, rows, os); });
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (auto v = env_cap("PANCAKE_VERTEX_CAP")) cfg.vertex_cap = *v;
    if (auto v = env_cap("PANCAKE_DENSE_CAP")) cfg.dense_cap = *v;
    if (auto v = env_cap("PANCAKE_EXACT_CAP")) cfg.exact_cap = *v;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Generalised pancake graphs: construction, quotients, spectra and checks", "pancake"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--vertex-cap", cfg.vertex_cap, "Largest graph to construct")
      ->check(CLI::PositiveNumber);
  app.add_option("--dense-cap", cfg.dense_cap, "Largest graph for dense eigensolves")
      ->check(CLI::PositiveNumber);
  app.add_option("--exact-cap", cfg.exact_cap, "Largest graph for exact nullity")
      ->check(CLI::PositiveNumber);

  auto add_mn = [&cfg](CLI::App* sub, bool m_required) {
    auto* m_opt = sub->add_option("--m", cfg.m, "Number of colours")->check(CLI::PositiveNumber);
    if (m_required) m_opt->required();
    sub->add_option("--n", cfg.n, "Number of letters")->required()->check(CLI::PositiveNumber);
    return m_opt;
  };
  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write to this file instead of stdout");
    sub->add_option("--format", cfg.format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
  };

  auto* build = app.add_subcommand("build", "Write the edge list of P_m(n)");
  add_mn(build, true);
  build->add_option("--out", cfg.out_path, "Write to this file instead of stdout");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the graph or its quotient");
  auto* spectrum_m = add_mn(spectrum, false);
  add_output(spectrum);
  spectrum->add_option("--source", cfg.source, "graph, quotient, decomposed or gsw")
      ->check(CLI::IsMember({"graph", "quotient", "decomposed", "gsw"}));

  auto* quotient = app.add_subcommand("quotient", "Quotient matrix of the colour/position partition");
  add_mn(quotient, true);
  add_output(quotient);
  quotient->add_flag("--empirical", cfg.empirical, "Count neighbours on the built graph");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("check", cfg.check, "gap, containment, multiplicity or lemma-circ")
      ->required()
      ->check(CLI::IsMember({"gap", "containment", "multiplicity", "lemma-circ"}));
  add_mn(verify, true);
  add_output(verify);

  auto* scan = app.add_subcommand("scan", "Report-only trend scans");
  scan->add_option("scan", cfg.scan, "conjecture2 or gap-trend")
      ->required()
      ->check(CLI::IsMember({"conjecture2", "gap-trend"}));
  scan->add_option("--m", cfg.m, "Number of colours")->required()->check(CLI::PositiveNumber);
  scan->add_option("--n-max", cfg.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  scan->add_option("--tol", cfg.tolerance, "Equality tolerance for gap comparisons")
      ->check(CLI::Range(0.0, 1e-2));
  add_output(scan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.tolerance <= 0.0 || cfg.tolerance >= 1e-2) {
    err << "error: --tol must lie in (0, 1e-2)\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(cfg, out);
    if (spectrum->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      return run_spectrum(cfg, spectrum_m->count() > 0, out);
    }
    if (quotient->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      return run_quotient(cfg, out);
    }
    if (verify->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      return run_verify(cfg, out);
    }
    if (cfg.format.empty()) cfg.format = "csv";
    return run_scan(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace pancake
