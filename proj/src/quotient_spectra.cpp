#include "pancake/quotient_spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include "json.hpp"
#include <numbers>
#include <ostream>
#include <sstream>

#include "pancake/errors.hpp"
#include "pancake/format.hpp"

namespace pancake {

std::string_view to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::direct:
      return "direct";
    case SpectrumSource::decomposed:
      return "decomposed";
    case SpectrumSource::closed_form:
      return "closed-form";
  }
  return "unknown";
}

namespace {

void sort_nonincreasing(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

}  // namespace

RealSpectrum symmetric_spectrum(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) throw ArgumentError("matrix is not square");
  const double asymmetry =
      matrix.size() == 0 ? 0.0 : (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSymmetryTolerance) {
    std::ostringstream msg;
    msg << "matrix is not symmetric (max |M_ij - M_ji| = " << asymmetry << ")";
    throw ArgumentError(msg.str());
  }
  RealSpectrum out;
  out.source = SpectrumSource::direct;
  if (matrix.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge", 0.0);
  }
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  sort_nonincreasing(out.values);
  const double norm = matrix.cwiseAbs().rowwise().sum().maxCoeff();
  out.tolerance = 1e-9 * std::max(1.0, norm);
  return out;
}

double cosine_coefficient(int k, int m) {
  if (m < 1) throw ArgumentError("cosine coefficient requires m >= 1");
  const int r = ((k % m) + m) % m;
  // 2cos(2 pi r/m) is rational exactly when r/m is a multiple of 1/4 or 1/6.
  if (r == 0) return 2.0;
  if (2 * r == m) return -2.0;
  if (4 * r == m || 4 * r == 3 * m) return 0.0;
  if (6 * r == m || 6 * r == 5 * m) return 1.0;
  if (3 * r == m || 3 * r == 2 * m) return -1.0;
  return 2.0 * std::cos(2.0 * std::numbers::pi * r / m);
}

Eigen::MatrixXd weighted_position_block(int n, double diagonal_scale, double t) {
  if (n < 1) throw ArgumentError("block size must be positive");
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    block(i, i) = diagonal_scale * i;
    for (int j = 0; i + j <= n - 1; ++j) block(i, j) += t;
  }
  return block;
}

RealSpectrum block_circulant_spectrum(const GroupParams& p) {
  const int m = p.m();
  const int n = p.n();
  if (m < 2) throw UnsupportedError("the circulant decomposition requires m >= 2");
  RealSpectrum out;
  out.source = SpectrumSource::decomposed;
  out.values.reserve(static_cast<std::size_t>(m) * n);
  const double diagonal_scale = m == 2 ? 1.0 : 2.0;
  for (int k = 0; k < m; ++k) {
    // For m = 2 the off-diagonal block appears once, so the weight is the
    // root of unity itself (+1, -1) rather than twice its real part.
    const double t = m == 2 ? (k == 0 ? 1.0 : -1.0) : cosine_coefficient(k, m);
    const RealSpectrum part = symmetric_spectrum(weighted_position_block(n, diagonal_scale, t));
    out.values.insert(out.values.end(), part.values.begin(), part.values.end());
    out.tolerance = std::max(out.tolerance, part.tolerance);
  }
  sort_nonincreasing(out.values);
  return out;
}

RealSpectrum gsw_spectrum(int n) {
  if (n < 1) throw ArgumentError("closed-form spectrum requires n >= 1");
  RealSpectrum out;
  out.source = SpectrumSource::closed_form;
  const int skipped = 2 * (n / 2);
  for (int value = 2 * n; value >= 0; value -= 2) {
    if (value != skipped) out.values.push_back(value);
  }
  return out;
}

RealSpectrum mod4_guaranteed_sublist(const GroupParams& p) {
  if (p.m() % 4 != 0) {
    throw ArgumentError("the guaranteed sublist requires m ≡ 0 (mod 4) (got m=" +
                        std::to_string(p.m()) + ")");
  }
  RealSpectrum out = gsw_spectrum(p.n());
  for (int copy = 0; copy < 2; ++copy) {
    for (int value = 0; value < p.n(); ++value) out.values.push_back(2.0 * value);
  }
  sort_nonincreasing(out.values);
  return out;
}

double submatrix_gap_bound(int n, double t) {
  if (n < 2) throw ArgumentError("submatrix bound requires n >= 2");
  if (t == 0.0) throw ArgumentError("submatrix bound requires a nonzero weight t");
  const double corner = 2.0 * n - 2.0;
  return (t + corner + std::sqrt((corner - t) * (corner - t) + 4.0 * t * t)) / 2.0;
}

bool spectra_match(const RealSpectrum& a, const RealSpectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

SubMultisetResult match_sub_multiset(const std::vector<double>& sub,
                                     const std::vector<double>& super, double tol) {
  SubMultisetResult result;
  std::size_t j = 0;
  for (double x : sub) {
    // Skip candidates too large to pair with x (or anything after it).
    while (j < super.size() && super[j] > x + tol) ++j;
    if (j < super.size() && std::abs(super[j] - x) <= tol) {
      ++j;
    } else {
      result.unmatched.push_back(x);
    }
  }
  result.contained = result.unmatched.empty();
  return result;
}

void write_spectrum_csv(const RealSpectrum& s, std::ostream& out) {
  out << "index,eigenvalue,source\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << i << ',' << format_number(s[i]) << ',' << to_string(s.source) << '\n';
  }
}

void write_spectrum_json(const RealSpectrum& s, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    rows.push_back({{"index", i},
                    {"eigenvalue", rounded_number(s[i])},
                    {"source", std::string(to_string(s.source))}});
  }
  out << rows.dump(2) << '\n';
}

}  // namespace pancake
