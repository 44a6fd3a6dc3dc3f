#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pancake/coloured_permutation.hpp"

namespace pancake {

/// Where a spectrum came from.
enum class SpectrumSource { direct, decomposed, closed_form };

std::string_view to_string(SpectrumSource source);

/// Eigenvalue multiset, sorted nonincreasing.
struct RealSpectrum {
  std::vector<double> values;
  SpectrumSource source = SpectrumSource::direct;
  double tolerance = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kSpectrumMatchTolerance = 1e-8;

/// All eigenvalues of a real symmetric matrix, nonincreasing. Throws
/// ArgumentError when some |M_ij - M_ji| exceeds 1e-12.
RealSpectrum symmetric_spectrum(const Eigen::MatrixXd& matrix);

/// 2 cos(2 pi k / m), exact at the rational angles where the cosine is rational
/// (in particular exactly 0 when 4k = m or 4k = 3m).
double cosine_coefficient(int k, int m);

/// Spectrum of the colour/position quotient via its circulant decomposition:
/// Spec(D_n + E_n) ⊎ Spec(D_n - E_n) for m = 2, and
/// ⊎_k Spec(2D_n + 2cos(2 pi k/m) E_n) for m >= 3.
/// Throws UnsupportedError for m = 1.
RealSpectrum block_circulant_spectrum(const GroupParams& p);

/// The closed-form spectrum of 2D_n + 2E_n: {0, 2, ..., 2n} minus {2 floor(n/2)}.
RealSpectrum gsw_spectrum(int n);

/// Spec(2D_n) ⊎ Spec(2D_n) ⊎ Spec(2D_n + 2E_n), which the quotient spectrum
/// contains whenever m ≡ 0 (mod 4). Throws ArgumentError otherwise.
RealSpectrum mod4_guaranteed_sublist(const GroupParams& p);

/// Lower bound on lambda_1(2D_n + tE_n) from the 2x2 principal submatrix on
/// the first and last rows, [[t, t], [t, 2n-2]]:
///   (t + 2n - 2 + sqrt((2n - 2 - t)^2 + 4t^2)) / 2.
/// Requires n >= 2 and t != 0.
double submatrix_gap_bound(int n, double t);

/// 2D_n + tE_n as a dense matrix.
Eigen::MatrixXd weighted_position_block(int n, double diagonal_scale, double t);

/// Elementwise comparison of two nonincreasing lists of equal length.
bool spectra_match(const RealSpectrum& a, const RealSpectrum& b, double tol);

struct SubMultisetResult {
  bool contained = false;
  /// Values of the candidate sub-multiset that found no partner.
  std::vector<double> unmatched;
};

/// Injective matching of `sub` into `super` with |x - y| <= tol. Both inputs
/// are nonincreasing; greedy matching is exact for equal-width windows.
SubMultisetResult match_sub_multiset(const std::vector<double>& sub,
                                     const std::vector<double>& super, double tol);

/// CSV with columns index,eigenvalue,source.
void write_spectrum_csv(const RealSpectrum& s, std::ostream& out);
/// JSON array of {index, eigenvalue, source} objects.
void write_spectrum_json(const RealSpectrum& s, std::ostream& out);

}  // namespace pancake
