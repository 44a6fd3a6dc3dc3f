#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pancake/cayley_graph.hpp"
#include "pancake/equitable_partition.hpp"
#include "pancake/quotient_spectra.hpp"

namespace pancake {

inline constexpr std::uint64_t kDefaultDenseCap = 10'000;
inline constexpr std::uint64_t kDefaultExactCap = 1'000;

/// Tolerances fixed by the verification suites.
inline constexpr double kContainmentTolerance = 1e-7;
inline constexpr double kClusterTolerance = 1e-6;
inline constexpr double kStrictMargin = 1e-6;

struct VerificationLimits {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t dense_cap = kDefaultDenseCap;
  std::uint64_t exact_cap = kDefaultExactCap;
};

Eigen::MatrixXd dense_adjacency(const CayleyGraph& g);

/// Every adjacency eigenvalue by a dense symmetric eigensolve. Throws
/// CapacityError above `dense_cap` vertices (use top_two_eigenvalues there).
RealSpectrum full_spectrum(const CayleyGraph& g, std::uint64_t dense_cap = kDefaultDenseCap);

struct LanczosOptions {
  /// Krylov basis size per restart.
  int max_basis = 60;
  int max_restarts = 400;
  /// Residual target, scaled by max(1, degree).
  double tolerance = 1e-10;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct TopTwo {
  double lambda1;
  double lambda2;
  double residual1;
  double residual2;
  int matvecs;
};

/// lambda_1 and lambda_2 of the adjacency matrix by restarted Lanczos with
/// full reorthogonalisation; lambda_2 is found in the orthogonal complement of
/// the converged top eigenvector. Throws NumericError when the residual target
/// is not met within the restart budget, ArgumentError for graphs with fewer
/// than two vertices.
TopTwo top_two_eigenvalues(const CayleyGraph& g, const LanczosOptions& options = {});

/// Rank over the rationals by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers.
std::size_t integer_matrix_rank(const IntMatrix& matrix);

/// Nullity of A - lambda I over the rationals, i.e. the exact multiplicity of
/// the integer lambda as an adjacency eigenvalue. Throws CapacityError above
/// `exact_cap` vertices.
std::uint64_t exact_integer_multiplicity(const CayleyGraph& g, std::int64_t lambda,
                                         std::uint64_t exact_cap = kDefaultExactCap);

/// Size of the run of eigenvalues chained to `value` by consecutive gaps
/// below `tol` (0 if no eigenvalue lies within `tol` of `value`).
std::size_t cluster_multiplicity(const RealSpectrum& spectrum, double value,
                                 double tol = kClusterTolerance);

/// One asserted check, as exported by the verify workflows.
struct CheckRow {
  int m;
  int n;
  std::string check;
  double value;
  double bound;
  bool passed;
};

void write_check_rows_csv(std::span<const CheckRow> rows, std::ostream& out);
void write_check_rows_json(std::span<const CheckRow> rows, std::ostream& out);
void write_check_rows_text(std::span<const CheckRow> rows, std::ostream& out);

struct GapReport {
  int m;
  int n;
  int degree;
  double lambda1;
  double lambda2;
  double gap;
  double bound;
  double margin;
  bool passed;
  /// gap < bound - 1e-6.
  bool strict_margin;
  /// |lambda1 - degree| <= 1e-9 * degree.
  bool lambda1_is_degree;
  std::string method;

  std::vector<CheckRow> rows() const;
};

/// 1 for m = 2, 2 otherwise.
double gap_bound(int m);

GapReport make_gap_report(const GroupParams& p, int degree, double lambda1, double lambda2,
                          std::string method);

/// Spectral gap of the full graph against the bound (1 for m = 2, else 2).
/// Dense when the graph fits the dense cap, Lanczos otherwise.
GapReport verify_gap(const GroupParams& p, const VerificationLimits& limits = {});

struct ContainmentReport {
  int m;
  int n;
  std::size_t quotient_order;
  std::vector<double> unmatched;
  bool passed;

  std::vector<CheckRow> rows() const;
};

/// Injective matching of quotient eigenvalues into graph eigenvalues.
ContainmentReport check_containment(const GroupParams& p, const RealSpectrum& quotient,
                                    const RealSpectrum& graph,
                                    double tol = kContainmentTolerance);

/// Builds the graph, counts the colour/position quotient, and checks that its
/// spectrum is contained in the graph spectrum.
ContainmentReport verify_quotient_containment(const GroupParams& p,
                                              const VerificationLimits& limits = {});

/// The counted quotient equals the block-circulant formula.
struct QuotientFormulaReport {
  int m;
  int n;
  std::size_t mismatched_entries;
  bool passed;

  std::vector<CheckRow> rows() const;
};

QuotientFormulaReport check_quotient_formula(const CayleyGraph& g);
QuotientFormulaReport verify_quotient_formula(const GroupParams& p,
                                              const VerificationLimits& limits = {});

enum class MultiplicityMethod { exact_nullity, numeric_cluster };

struct MultiplicityEntry {
  int k;
  std::int64_t eigenvalue;
  std::uint64_t required;
  std::uint64_t computed;
  MultiplicityMethod method;
  bool passed;
};

struct MultiplicityReport {
  int m;
  int n;
  std::vector<MultiplicityEntry> entries;

  bool passed() const;
  std::vector<CheckRow> rows() const;
};

/// Lower bound on the multiplicity of 2k for m ≡ 0 (mod 4): 2 when
/// k = floor(n/2), otherwise 3.
std::uint64_t required_multiplicity(int n, int k);

/// Multiplicity of 2k for k in 1..n-1 against required_multiplicity(). Exact
/// nullity within the exact cap, eigenvalue clustering within the dense cap.
/// Throws ArgumentError unless m ≡ 0 (mod 4) and n >= 2.
MultiplicityReport verify_multiplicity(const GroupParams& p, const VerificationLimits& limits = {});

/// Graph gap versus quotient gap for one (m, n); report-only.
struct ConjectureRecord {
  int m;
  int n;
  double graph_gap;
  std::optional<double> quotient_gap;
  std::optional<double> difference;
  std::optional<bool> equal;
  std::string method;
};

struct ConjectureScan {
  std::vector<ConjectureRecord> records;
  /// Set when the scan stopped before n_max because of a capacity limit.
  std::optional<std::string> truncation_note;
};

/// Records for n = 2..n_max until the vertex cap is reached. For m = 1 only
/// the graph gap is recorded.
ConjectureScan conjecture2_scan(int m, int n_max, const VerificationLimits& limits = {},
                                double tol = kClusterTolerance);

void write_conjecture_csv(const ConjectureScan& scan, std::ostream& out);

struct TrendRow {
  int n;
  double quotient_gap;
  double bound;
  double distance_to_bound;
  /// distance_to_bound did not increase from the previous n.
  bool monotone;
};

/// Quotient gap for n = 2..n_max as a proxy for the graph gap. Requires m >= 2.
std::vector<TrendRow> gap_trend(int m, int n_max);

void write_trend_csv(int m, std::span<const TrendRow> rows, std::ostream& out);

struct InterlacingResult {
  bool holds;
  /// Largest amount by which an inequality failed (0 when all hold).
  double worst_violation;
};

/// Checks lambda_i(A) >= lambda_i(B) >= lambda_{N-k+i}(A) for the principal
/// submatrix B of A on `indices` (k = indices.size()), with `slack` allowed
/// for rounding.
InterlacingResult check_interlacing(const Eigen::MatrixXd& a, std::span<const int> indices,
                                    double slack = 1e-12);

}  // namespace pancake
