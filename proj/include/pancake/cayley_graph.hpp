#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pancake/coloured_permutation.hpp"

namespace pancake {

/// A prefix reversal r_k^sign used as a Cayley generator.
struct Generator {
  int k;
  Sign sign;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// The generator set R_m in deterministic order (k ascending, + before -):
///   m = 1:  r_k for 2 <= k <= n   (r_1 is the identity)
///   m = 2:  r_k^+ for 1 <= k <= n (r_k^+ = r_k^-)
///   m >= 3: r_k^+, r_k^- for 1 <= k <= n
std::vector<Generator> generators(const GroupParams& p);

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

/// Immutable adjacency of the generalised pancake graph P_m(n).
///
/// The graph is regular, so rows are stored in CSR layout with a fixed
/// stride: row v occupies targets[v*degree, (v+1)*degree), sorted ascending.
class CayleyGraph {
 public:
  const GroupParams& params() const noexcept { return params_; }
  std::uint64_t vertex_count() const noexcept { return vertex_count_; }
  int degree() const noexcept { return degree_; }
  std::uint64_t edge_count() const noexcept { return vertex_count_ * degree_ / 2; }
  std::span<const Generator> generator_set() const noexcept { return generators_; }

  /// Sorted neighbour row of v. Throws ArgumentError when v is out of range.
  std::span<const std::uint32_t> neighbors(VertexIndex v) const;

  /// Unchecked row access for hot loops.
  std::span<const std::uint32_t> row(std::uint32_t v) const noexcept {
    return {targets_.data() + static_cast<std::size_t>(v) * degree_,
            static_cast<std::size_t>(degree_)};
  }

 private:
  friend CayleyGraph build_graph(const GroupParams&, std::uint64_t);

  explicit CayleyGraph(GroupParams p) : params_(p) {}

  GroupParams params_;
  std::uint64_t vertex_count_ = 0;
  int degree_ = 0;
  std::vector<Generator> generators_;
  std::vector<std::uint32_t> targets_;
};

/// Builds P_m(n) = Cay(S(m,n), R_m): row v lists rank(r(unrank(v))) for each
/// generator r. Throws CapacityError when m^n * n! exceeds `vertex_cap`, and
/// std::logic_error if some vertex has a repeated neighbour or a loop (m >= 2).
CayleyGraph build_graph(const GroupParams& p, std::uint64_t vertex_cap = kDefaultVertexCap);

/// True when breadth-first search from vertex 0 reaches every vertex.
bool is_connected(const CayleyGraph& g);

/// True when u in N(v) <=> v in N(u) for all pairs.
bool is_symmetric(const CayleyGraph& g);

/// Edge list: header line "m n vcount degree", then one "u v" line per
/// undirected edge with u < v in ascending lexicographic order.
void write_edge_list(const CayleyGraph& g, std::ostream& out);

}  // namespace pancake
