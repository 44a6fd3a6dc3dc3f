#include "pancake/coloured_permutation.hpp"

#include <limits>
#include <sstream>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

// a * b, or nullopt on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t acc = 1;
  for (int i = 0; i < exp; ++i) {
    auto next = checked_mul(acc, base);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

std::optional<std::uint64_t> checked_factorial(int n) {
  std::uint64_t acc = 1;
  for (int i = 2; i <= n; ++i) {
    auto next = checked_mul(acc, static_cast<std::uint64_t>(i));
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

int reduce(int value, int m) {
  int r = value % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupParams::GroupParams(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw ArgumentError("group parameters require m >= 1 and n >= 1 (got m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")");
  }
}

std::optional<std::uint64_t> GroupParams::order() const {
  auto colourings = checked_pow(static_cast<std::uint64_t>(m_), n_);
  auto perms = checked_factorial(n_);
  if (!colourings || !perms) return std::nullopt;
  return checked_mul(*colourings, *perms);
}

std::uint64_t GroupParams::order_within(std::uint64_t cap) const {
  auto ord = order();
  if (!ord || *ord > cap) {
    std::ostringstream msg;
    msg << "S(" << m_ << "," << n_ << ") has ";
    if (ord) {
      msg << *ord;
    } else {
      msg << "more than 2^64";
    }
    msg << " elements, above the cap of " << cap;
    throw CapacityError(msg.str(), ord.value_or(kMax), cap);
  }
  return *ord;
}

ColouredPermutation::ColouredPermutation(int m, std::vector<int> colours, std::vector<int> letters)
    : m_(m), colours_(std::move(colours)), letters_(std::move(letters)) {
  if (m_ < 1) throw ArgumentError("number of colours must be positive");
  if (colours_.size() != letters_.size() || letters_.empty()) {
    throw ArgumentError("colour and letter arrays must be non-empty and of equal length");
  }
  const int n = static_cast<int>(letters_.size());
  std::vector<bool> seen(n + 1, false);
  for (int t = 0; t < n; ++t) {
    const int letter = letters_[t];
    if (letter < 1 || letter > n || seen[letter]) {
      throw ArgumentError("letters do not form a permutation of 1.." + std::to_string(n));
    }
    seen[letter] = true;
    if (colours_[t] < 0 || colours_[t] >= m_) {
      throw ArgumentError("colour " + std::to_string(colours_[t]) + " at position " +
                          std::to_string(t + 1) + " is outside 0.." + std::to_string(m_ - 1));
    }
  }
}

ColouredPermutation ColouredPermutation::trusted(int m, std::vector<int> colours,
                                                 std::vector<int> letters) {
  ColouredPermutation out;
  out.m_ = m;
  out.colours_ = std::move(colours);
  out.letters_ = std::move(letters);
  return out;
}

int ColouredPermutation::colour(int position) const {
  if (position < 1 || position > n()) throw ArgumentError("position out of range");
  return colours_[position - 1];
}

int ColouredPermutation::letter(int position) const {
  if (position < 1 || position > n()) throw ArgumentError("position out of range");
  return letters_[position - 1];
}

int ColouredPermutation::position_of(int letter) const {
  for (int t = 0; t < n(); ++t) {
    if (letters_[t] == letter) return t + 1;
  }
  throw ArgumentError("letter " + std::to_string(letter) + " not present");
}

std::string ColouredPermutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int t = 0; t < n(); ++t) {
    if (t) out << ',';
    out << letters_[t] << '^' << colours_[t];
  }
  out << ')';
  return out.str();
}

ColouredPermutation identity_element(const GroupParams& p) {
  std::vector<int> letters(p.n());
  for (int t = 0; t < p.n(); ++t) letters[t] = t + 1;
  return ColouredPermutation::trusted(p.m(), std::vector<int>(p.n(), 0), std::move(letters));
}

ColouredPermutation substring_reversal(const ColouredPermutation& sigma, int i, int j, Sign eps) {
  const int n = sigma.n();
  if (i < 1 || j > n || i > j) {
    throw ArgumentError("reversal block [" + std::to_string(i) + "," + std::to_string(j) +
                        "] is not within 1.." + std::to_string(n));
  }
  const int m = sigma.m();
  const int shift = static_cast<int>(eps);
  std::vector<int> colours = sigma.colours_;
  std::vector<int> letters = sigma.letters_;
  // t and i+j-t, 0-based: t-1 and i+j-t-1.
  for (int t = i; t <= j; ++t) {
    const int src = i + j - t - 1;
    letters[t - 1] = sigma.letters_[src];
    colours[t - 1] = reduce(sigma.colours_[src] + shift, m);
  }
  return ColouredPermutation::trusted(m, std::move(colours), std::move(letters));
}

ColouredPermutation prefix_reversal(const ColouredPermutation& sigma, int k, Sign eps) {
  return substring_reversal(sigma, 1, k, eps);
}

ColouredPermutation compose(const ColouredPermutation& a, const ColouredPermutation& b) {
  if (a.m() != b.m() || a.n() != b.n()) {
    throw ArgumentError("cannot compose elements of S(" + std::to_string(a.m()) + "," +
                        std::to_string(a.n()) + ") and S(" + std::to_string(b.m()) + "," +
                        std::to_string(b.n()) + ")");
  }
  const int n = a.n();
  std::vector<int> colours(n);
  std::vector<int> letters(n);
  for (int t = 0; t < n; ++t) {
    const int src = b.letters_[t] - 1;
    letters[t] = a.letters_[src];
    colours[t] = reduce(a.colours_[src] + b.colours_[t], a.m());
  }
  return ColouredPermutation::trusted(a.m(), std::move(colours), std::move(letters));
}

std::uint64_t lehmer_rank(std::span<const int> letters) {
  const int n = static_cast<int>(letters.size());
  std::uint64_t r = 0;
  for (int t = 0; t < n; ++t) {
    std::uint64_t smaller_after = 0;
    for (int u = t + 1; u < n; ++u) {
      if (letters[u] < letters[t]) ++smaller_after;
    }
    // Horner form of sum_t c_t * (n-1-t)!.
    r = r * static_cast<std::uint64_t>(n - t) + smaller_after;
  }
  return r;
}

VertexIndex rank(const ColouredPermutation& sigma) {
  const GroupParams p = sigma.params();
  p.order_within(kMax);
  const auto m = static_cast<std::uint64_t>(p.m());
  std::uint64_t colour_digits = 0;
  for (int t = p.n() - 1; t >= 0; --t) {
    colour_digits = colour_digits * m + static_cast<std::uint64_t>(sigma.colours()[t]);
  }
  const std::uint64_t colourings = *checked_pow(m, p.n());
  return VertexIndex{lehmer_rank(sigma.letters()) * colourings + colour_digits};
}

ColouredPermutation unrank(VertexIndex v, const GroupParams& p) {
  const std::uint64_t order = p.order_within(kMax);
  if (v.value >= order) {
    throw ArgumentError("vertex index " + std::to_string(v.value) + " out of range for order " +
                        std::to_string(order));
  }
  const int n = p.n();
  const auto m = static_cast<std::uint64_t>(p.m());
  const std::uint64_t colourings = *checked_pow(m, n);
  std::uint64_t perm_rank = v.value / colourings;
  std::uint64_t colour_digits = v.value % colourings;

  std::vector<int> colours(n);
  for (int t = 0; t < n; ++t) {
    colours[t] = static_cast<int>(colour_digits % m);
    colour_digits /= m;
  }

  // Lehmer digits, least significant last: digit t has radix n-t.
  std::vector<int> code(n);
  for (int t = n - 1; t >= 0; --t) {
    const auto radix = static_cast<std::uint64_t>(n - t);
    code[t] = static_cast<int>(perm_rank % radix);
    perm_rank /= radix;
  }
  std::vector<int> remaining(n);
  for (int t = 0; t < n; ++t) remaining[t] = t + 1;
  std::vector<int> letters(n);
  for (int t = 0; t < n; ++t) {
    letters[t] = remaining[code[t]];
    remaining.erase(remaining.begin() + code[t]);
  }
  return ColouredPermutation::trusted(p.m(), std::move(colours), std::move(letters));
}

}  // namespace pancake
