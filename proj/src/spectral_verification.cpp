#include "pancake/spectral_verification.hpp"

#include <gmpxx.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lanczos.hpp"
#include "pancake/errors.hpp"
#include "pancake/format.hpp"

namespace pancake {

Eigen::MatrixXd dense_adjacency(const CayleyGraph& g) {
  const auto count = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(count, count);
  for (Eigen::Index v = 0; v < count; ++v) {
    for (std::uint32_t w : g.row(static_cast<std::uint32_t>(v))) a(v, w) = 1.0;
  }
  return a;
}

RealSpectrum full_spectrum(const CayleyGraph& g, std::uint64_t dense_cap) {
  if (g.vertex_count() > dense_cap) {
    throw CapacityError("dense spectrum of " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the dense cap of " + std::to_string(dense_cap) +
                            "; use top_two_eigenvalues for the extremal pair",
                        g.vertex_count(), dense_cap);
  }
  RealSpectrum s = symmetric_spectrum(dense_adjacency(g));
  s.tolerance = 1e-9 * std::max(1, g.degree());
  return s;
}

TopTwo top_two_eigenvalues(const CayleyGraph& g, const LanczosOptions& options) {
  const auto count = static_cast<Eigen::Index>(g.vertex_count());
  if (count < 2) throw ArgumentError("top_two_eigenvalues needs at least two vertices");
  const int degree = g.degree();
  const detail::MatVec apply = [&g, degree](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.resize(x.size());
    for (Eigen::Index v = 0; v < x.size(); ++v) {
      double acc = 0.0;
      const std::uint32_t* row = g.row(static_cast<std::uint32_t>(v)).data();
      for (int t = 0; t < degree; ++t) acc += x[row[t]];
      y[v] = acc;
    }
  };
  const double tol = options.tolerance * std::max(1, degree);
  std::mt19937_64 rng(options.seed);

  std::vector<Eigen::VectorXd> locked;
  const detail::Eigenpair first = detail::largest_eigenpair(
      apply, count, locked, options.max_basis, options.max_restarts, tol, rng);
  if (!first.converged) {
    throw NumericError("Lanczos did not converge for lambda_1 (residual " +
                           format_number(first.residual) + ")",
                       first.residual);
  }
  locked.push_back(first.vector);
  const detail::Eigenpair second = detail::largest_eigenpair(
      apply, count, locked, options.max_basis, options.max_restarts, tol, rng);
  if (!second.converged) {
    throw NumericError("Lanczos did not converge for lambda_2 (residual " +
                           format_number(second.residual) + ")",
                       second.residual);
  }
  return {first.value, second.value, first.residual, second.residual,
          first.matvecs + second.matvecs};
}

std::size_t integer_matrix_rank(const IntMatrix& matrix) {
  const auto rows = static_cast<std::size_t>(matrix.rows());
  const auto cols = static_cast<std::size_t>(matrix.cols());
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = static_cast<long>(matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  // Fraction-free echelon form: after each pivot every entry below the pivot
  // rows is a minor of the original matrix, so the division is exact.
  mpz_class previous = 1;
  mpz_class scratch;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(at(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t t = c; t < cols; ++t) swap(at(pivot, t), at(rank, t));
    }
    const mpz_class& p = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class& lead = at(r, c);
      const bool lead_zero = sgn(lead) == 0;
      for (std::size_t t = c + 1; t < cols; ++t) {
        mpz_class& target = at(r, t);
        const mpz_class& above = at(rank, t);
        if (lead_zero || sgn(above) == 0) {
          if (sgn(target) == 0) continue;
          mpz_mul(target.get_mpz_t(), target.get_mpz_t(), p.get_mpz_t());
        } else {
          mpz_mul(scratch.get_mpz_t(), p.get_mpz_t(), target.get_mpz_t());
          mpz_submul(scratch.get_mpz_t(), lead.get_mpz_t(), above.get_mpz_t());
          mpz_swap(target.get_mpz_t(), scratch.get_mpz_t());
        }
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
      lead = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::uint64_t exact_integer_multiplicity(const CayleyGraph& g, std::int64_t lambda,
                                         std::uint64_t exact_cap) {
  if (g.vertex_count() > exact_cap) {
    throw CapacityError("exact nullity on " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the exact cap of " + std::to_string(exact_cap) +
                            "; count eigenvalue clusters of full_spectrum instead",
                        g.vertex_count(), exact_cap);
  }
  const auto count = static_cast<Eigen::Index>(g.vertex_count());
  IntMatrix shifted = IntMatrix::Zero(count, count);
  for (Eigen::Index v = 0; v < count; ++v) {
    for (std::uint32_t w : g.row(static_cast<std::uint32_t>(v))) shifted(v, w) = 1;
    shifted(v, v) -= lambda;
  }
  return g.vertex_count() - integer_matrix_rank(shifted);
}

std::size_t cluster_multiplicity(const RealSpectrum& spectrum, double value, double tol) {
  const auto& v = spectrum.values;
  std::size_t nearest = v.size();
  double best = tol;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = std::abs(v[i] - value);
    if (d <= best) {
      best = d;
      nearest = i;
    }
  }
  if (nearest == v.size()) return 0;
  std::size_t lo = nearest;
  std::size_t hi = nearest;
  while (lo > 0 && std::abs(v[lo - 1] - v[lo]) < tol) --lo;
  while (hi + 1 < v.size() && std::abs(v[hi + 1] - v[hi]) < tol) ++hi;
  return hi - lo + 1;
}

void write_check_rows_csv(std::span<const CheckRow> rows, std::ostream& out) {
  out << "m,n,check,value,bound,passed\n";
  for (const CheckRow& r : rows) {
    out << r.m << ',' << r.n << ',' << r.check << ',' << format_number(r.value) << ','
        << format_number(r.bound) << ',' << (r.passed ? "true" : "false") << '\n';
  }
}

void write_check_rows_json(std::span<const CheckRow> rows, std::ostream& out) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const CheckRow& r : rows) {
    array.push_back({{"m", r.m},
                     {"n", r.n},
                     {"check", r.check},
                     {"value", rounded_number(r.value)},
                     {"bound", rounded_number(r.bound)},
                     {"passed", r.passed}});
  }
  out << array.dump(2) << '\n';
}

void write_check_rows_text(std::span<const CheckRow> rows, std::ostream& out) {
  for (const CheckRow& r : rows) {
    out << (r.passed ? "PASS" : "FAIL") << "  m=" << r.m << " n=" << r.n << "  " << r.check
        << ": value " << format_number(r.value) << ", bound " << format_number(r.bound) << '\n';
  }
}

double gap_bound(int m) { return m == 2 ? 1.0 : 2.0; }

GapReport make_gap_report(const GroupParams& p, int degree, double lambda1, double lambda2,
                          std::string method) {
  GapReport r;
  r.m = p.m();
  r.n = p.n();
  r.degree = degree;
  r.lambda1 = lambda1;
  r.lambda2 = lambda2;
  r.gap = lambda1 - lambda2;
  r.bound = gap_bound(p.m());
  r.margin = r.bound - r.gap;
  r.passed = r.gap < r.bound;
  r.strict_margin = r.gap < r.bound - kStrictMargin;
  r.lambda1_is_degree = std::abs(lambda1 - degree) <= 1e-9 * std::max(1, degree);
  r.method = std::move(method);
  return r;
}

std::vector<CheckRow> GapReport::rows() const {
  return {
      {m, n, "lambda1_equals_degree", lambda1, static_cast<double>(degree), lambda1_is_degree},
      {m, n, "spectral_gap", gap, bound, passed},
      {m, n, "gap_margin", margin, kStrictMargin, strict_margin},
  };
}

GapReport verify_gap(const GroupParams& p, const VerificationLimits& limits) {
  if (p.m() < 2) throw ArgumentError("the spectral gap bound is stated for m >= 2");
  if (p.n() < 2) throw ArgumentError("the spectral gap bound is stated for n >= 2");
  const CayleyGraph g = build_graph(p, limits.vertex_cap);
  if (g.vertex_count() <= limits.dense_cap) {
    const RealSpectrum s = full_spectrum(g, limits.dense_cap);
    return make_gap_report(p, g.degree(), s[0], s[1], "dense");
  }
  const TopTwo top = top_two_eigenvalues(g);
  return make_gap_report(p, g.degree(), top.lambda1, top.lambda2, "lanczos");
}

std::vector<CheckRow> ContainmentReport::rows() const {
  return {{m, n, "quotient_spectrum_contained", static_cast<double>(quotient_order - unmatched.size()),
           static_cast<double>(quotient_order), passed}};
}

ContainmentReport check_containment(const GroupParams& p, const RealSpectrum& quotient,
                                    const RealSpectrum& graph, double tol) {
  SubMultisetResult match = match_sub_multiset(quotient.values, graph.values, tol);
  return {p.m(), p.n(), quotient.size(), std::move(match.unmatched), match.contained};
}

ContainmentReport verify_quotient_containment(const GroupParams& p,
                                              const VerificationLimits& limits) {
  const CayleyGraph g = build_graph(p, limits.vertex_cap);
  const RealSpectrum graph = full_spectrum(g, limits.dense_cap);
  const QuotientMatrix q = quotient_empirical(g, build_partition(g));
  const RealSpectrum quotient = symmetric_spectrum(q.entries.cast<double>());
  return check_containment(p, quotient, graph);
}

std::vector<CheckRow> QuotientFormulaReport::rows() const {
  return {{m, n, "quotient_equals_formula", static_cast<double>(mismatched_entries), 0.0, passed}};
}

QuotientFormulaReport check_quotient_formula(const CayleyGraph& g) {
  const GroupParams& p = g.params();
  const QuotientMatrix counted = quotient_empirical(g, build_partition(g));
  const QuotientMatrix formula = quotient_formula(p);
  const auto mismatched = static_cast<std::size_t>((counted.entries.array() != formula.entries.array()).count());
  return {p.m(), p.n(), mismatched, mismatched == 0};
}

QuotientFormulaReport verify_quotient_formula(const GroupParams& p,
                                              const VerificationLimits& limits) {
  const CayleyGraph g = build_graph(p, limits.vertex_cap);
  try {
    return check_quotient_formula(g);
  } catch (const NonEquitableError&) {
    const auto order = static_cast<std::size_t>(p.m()) * p.n();
    return {p.m(), p.n(), order * order, false};
  }
}

std::uint64_t required_multiplicity(int n, int k) { return k == n / 2 ? 2 : 3; }

bool MultiplicityReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

std::vector<CheckRow> MultiplicityReport::rows() const {
  std::vector<CheckRow> out;
  for (const MultiplicityEntry& e : entries) {
    out.push_back({m, n,
                   std::string(e.method == MultiplicityMethod::exact_nullity ? "exact_mult"
                                                                              : "cluster_mult") +
                       "(" + std::to_string(e.eigenvalue) + ")",
                   static_cast<double>(e.computed), static_cast<double>(e.required), e.passed});
  }
  return out;
}

MultiplicityReport verify_multiplicity(const GroupParams& p, const VerificationLimits& limits) {
  if (p.m() % 4 != 0) {
    throw ArgumentError("the multiplicity bounds require m ≡ 0 (mod 4) (got m=" +
                        std::to_string(p.m()) + ")");
  }
  if (p.n() < 2) throw ArgumentError("the multiplicity bounds require n >= 2");
  const CayleyGraph g = build_graph(p, limits.vertex_cap);
  const bool exact = g.vertex_count() <= limits.exact_cap;
  std::optional<RealSpectrum> spectrum;
  if (!exact) spectrum = full_spectrum(g, limits.dense_cap);

  MultiplicityReport report{p.m(), p.n(), {}};
  for (int k = 1; k <= p.n() - 1; ++k) {
    MultiplicityEntry e;
    e.k = k;
    e.eigenvalue = 2 * k;
    e.required = required_multiplicity(p.n(), k);
    if (exact) {
      e.computed = exact_integer_multiplicity(g, e.eigenvalue, limits.exact_cap);
      e.method = MultiplicityMethod::exact_nullity;
    } else {
      e.computed = cluster_multiplicity(*spectrum, static_cast<double>(e.eigenvalue));
      e.method = MultiplicityMethod::numeric_cluster;
    }
    e.passed = e.computed >= e.required;
    report.entries.push_back(e);
  }
  return report;
}

ConjectureScan conjecture2_scan(int m, int n_max, const VerificationLimits& limits, double tol) {
  if (m < 1) throw ArgumentError("conjecture scan requires m >= 1");
  ConjectureScan scan;
  for (int n = 2; n <= n_max; ++n) {
    const GroupParams p(m, n);
    const auto order = p.order();
    if (!order || *order > limits.vertex_cap) {
      scan.truncation_note = "stopped at n=" + std::to_string(n) + ": S(" + std::to_string(m) +
                             "," + std::to_string(n) + ") exceeds the vertex cap of " +
                             std::to_string(limits.vertex_cap);
      break;
    }
    const CayleyGraph g = build_graph(p, limits.vertex_cap);
    ConjectureRecord record;
    record.m = m;
    record.n = n;
    if (g.vertex_count() <= limits.dense_cap) {
      const RealSpectrum s = full_spectrum(g, limits.dense_cap);
      record.graph_gap = s[0] - s[1];
      record.method = "dense";
    } else {
      const TopTwo top = top_two_eigenvalues(g);
      record.graph_gap = top.lambda1 - top.lambda2;
      record.method = "lanczos";
    }
    if (m >= 2) {
      const RealSpectrum q = symmetric_spectrum(quotient_formula(p).entries.cast<double>());
      record.quotient_gap = q[0] - q[1];
      record.difference = std::abs(record.graph_gap - *record.quotient_gap);
      record.equal = *record.difference <= tol;
    }
    scan.records.push_back(std::move(record));
  }
  return scan;
}

void write_conjecture_csv(const ConjectureScan& scan, std::ostream& out) {
  out << "m,n,graph_gap,quotient_gap,abs_difference,equal,method\n";
  for (const ConjectureRecord& r : scan.records) {
    out << r.m << ',' << r.n << ',' << format_number(r.graph_gap) << ','
        << (r.quotient_gap ? format_number(*r.quotient_gap) : "") << ','
        << (r.difference ? format_number(*r.difference) : "") << ','
        << (r.equal ? (*r.equal ? "true" : "false") : "") << ',' << r.method << '\n';
  }
  if (scan.truncation_note) out << "# " << *scan.truncation_note << '\n';
}

std::vector<TrendRow> gap_trend(int m, int n_max) {
  if (m < 2) throw ArgumentError("gap trend requires m >= 2");
  std::vector<TrendRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    const RealSpectrum q = symmetric_spectrum(quotient_formula(GroupParams(m, n)).entries.cast<double>());
    TrendRow row;
    row.n = n;
    row.quotient_gap = q[0] - q[1];
    row.bound = gap_bound(m);
    row.distance_to_bound = row.bound - row.quotient_gap;
    row.monotone = rows.empty() || row.distance_to_bound <= rows.back().distance_to_bound;
    rows.push_back(row);
  }
  return rows;
}

void write_trend_csv(int m, std::span<const TrendRow> rows, std::ostream& out) {
  out << "m,n,quotient_gap,bound,distance_to_bound,monotone\n";
  for (const TrendRow& r : rows) {
    out << m << ',' << r.n << ',' << format_number(r.quotient_gap) << ','
        << format_number(r.bound) << ',' << format_number(r.distance_to_bound) << ','
        << (r.monotone ? "true" : "false") << '\n';
  }
}

InterlacingResult check_interlacing(const Eigen::MatrixXd& a, std::span<const int> indices,
                                    double slack) {
  const auto size = static_cast<int>(indices.size());
  const auto order = static_cast<int>(a.rows());
  if (size == 0 || size > order) throw ArgumentError("principal submatrix size out of range");
  Eigen::MatrixXd b(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) b(r, c) = a(indices[r], indices[c]);
  }
  const RealSpectrum outer = symmetric_spectrum(a);
  const RealSpectrum inner = symmetric_spectrum(b);
  double worst = 0.0;
  for (int i = 0; i < size; ++i) {
    // 0-based: lambda_i(A) >= lambda_i(B) >= lambda_{N-k+i}(A).
    worst = std::max(worst, inner[i] - outer[i]);
    worst = std::max(worst, outer[order - size + i] - inner[i]);
  }
  return {worst <= slack, worst};
}

}  // namespace pancake
