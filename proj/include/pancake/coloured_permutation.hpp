#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pancake {

/// Sign of a reversal: the amount added (mod m) to every flipped colour.
enum class Sign : int { plus = 1, minus = -1 };

inline Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Parameters of the wreath product Z_m wr S_n.
class GroupParams {
 public:
  /// Throws ArgumentError unless m >= 1 and n >= 1.
  GroupParams(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  /// m^n * n!, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  /// m^n * n!, throwing CapacityError when it exceeds `cap` (or 64 bits).
  std::uint64_t order_within(std::uint64_t cap) const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int m_;
  int n_;
};

/// Position in the enumeration of S(m,n); see rank().
struct VertexIndex {
  std::uint64_t value = 0;

  friend auto operator<=>(const VertexIndex&, const VertexIndex&) = default;
};

/// A coloured permutation sigma = (chi, psi) in S(m,n), in one-line notation
/// (psi(1)^chi(1), ..., psi(n)^chi(n)).
///
/// Positions and letters are 1-based in this interface; storage is 0-based.
/// Colours are always the canonical representatives 0..m-1.
class ColouredPermutation {
 public:
  /// Throws ArgumentError when `letters` is not a permutation of 1..n, when
  /// the lengths differ, or when a colour is outside 0..m-1.
  ColouredPermutation(int m, std::vector<int> colours, std::vector<int> letters);

  int m() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(letters_.size()); }
  GroupParams params() const { return GroupParams(m_, n()); }

  /// chi(position), position in 1..n.
  int colour(int position) const;
  /// psi(position), position in 1..n.
  int letter(int position) const;
  /// psi^{-1}(letter).
  int position_of(int letter) const;

  std::span<const int> colours() const noexcept { return colours_; }
  std::span<const int> letters() const noexcept { return letters_; }

  /// Coloured one-line notation, e.g. "(2^1,1^0,3^2)".
  std::string to_string() const;

  friend bool operator==(const ColouredPermutation&, const ColouredPermutation&) = default;

 private:
  // Skips validation; only for values that are valid by construction.
  static ColouredPermutation trusted(int m, std::vector<int> colours, std::vector<int> letters);

  friend ColouredPermutation identity_element(const GroupParams&);
  friend ColouredPermutation substring_reversal(const ColouredPermutation&, int, int, Sign);
  friend ColouredPermutation compose(const ColouredPermutation&, const ColouredPermutation&);
  friend ColouredPermutation unrank(VertexIndex, const GroupParams&);

  ColouredPermutation() = default;

  int m_ = 1;
  std::vector<int> colours_;
  std::vector<int> letters_;
};

ColouredPermutation identity_element(const GroupParams& p);

/// The generalised substring reversal s_{i,j}^eps: reverses positions i..j
/// of the one-line notation and adds eps (mod m) to each colour in that block.
/// Throws ArgumentError unless 1 <= i <= j <= n.
ColouredPermutation substring_reversal(const ColouredPermutation& sigma, int i, int j, Sign eps);

/// r_k^eps = s_{1,k}^eps.
ColouredPermutation prefix_reversal(const ColouredPermutation& sigma, int k, Sign eps);

/// Wreath-product multiplication with a acting first: the result is a with its
/// positions rearranged by b and b's colours added, i.e.
///   psi(t) = psi_a(psi_b(t)),  chi(t) = chi_a(psi_b(t)) + chi_b(t).
/// With this convention prefix_reversal(s, k, e) == compose(s, prefix_reversal(id, k, e)).
ColouredPermutation compose(const ColouredPermutation& a, const ColouredPermutation& b);

/// Lexicographic Lehmer rank of the underlying permutation, in [0, n!).
std::uint64_t lehmer_rank(std::span<const int> letters);

/// rank = lehmer_rank(psi) * m^n + sum_t chi(t) * m^(t-1).
/// Throws CapacityError when the group order does not fit in 64 bits.
VertexIndex rank(const ColouredPermutation& sigma);

/// Inverse of rank(). Throws ArgumentError when v >= m^n * n!.
ColouredPermutation unrank(VertexIndex v, const GroupParams& p);

}  // namespace pancake
