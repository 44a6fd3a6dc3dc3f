#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pancake/cayley_graph.hpp"
#include "pancake/coloured_permutation.hpp"

namespace pancake {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Label (i, j) of the cell V_{i,j}: letter 1 sits at position j with colour i.
struct CellLabel {
  int colour;
  int position;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// (i, j) with j = psi^{-1}(1) and i = chi(j).
CellLabel cell_index(const ColouredPermutation& sigma);

/// D_n = diag(0, 1, ..., n-1) and E_n with e_ij = 1 iff i + j <= n + 1.
struct StructuralBlocks {
  IntMatrix d;
  IntMatrix e;
};

StructuralBlocks structural_blocks(int n);

/// A vertex partition with cells in a fixed order.
class Partition {
 public:
  Partition(std::vector<std::vector<std::uint32_t>> cells, std::vector<CellLabel> labels,
            int block_size, std::uint64_t vertex_count);

  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<std::uint32_t>& cell(std::size_t c) const { return cells_.at(c); }
  /// Empty for partitions without (colour, position) labels.
  const std::vector<CellLabel>& labels() const noexcept { return labels_; }
  std::uint32_t cell_of(std::uint32_t v) const { return cell_of_.at(v); }
  /// Side length of the square blocks in the quotient's block view.
  int block_size() const noexcept { return block_size_; }

 private:
  std::vector<std::vector<std::uint32_t>> cells_;
  std::vector<CellLabel> labels_;
  std::vector<std::uint32_t> cell_of_;
  int block_size_;
};

/// The partition into the cells V_{i,j}, ordered lexicographically by (i, j):
/// cell index i*n + (j-1). Throws UnsupportedError for m = 1.
Partition build_partition(const CayleyGraph& g);

/// The one-cell partition {V}.
Partition trivial_partition(const CayleyGraph& g);

/// Quotient matrix of an equitable partition, with an m x m grid view of
/// n x n blocks for the colour/position partition.
struct QuotientMatrix {
  IntMatrix entries;
  int block_size = 1;

  Eigen::Index order() const { return entries.rows(); }
  Eigen::Index block_count() const { return entries.rows() / block_size; }
  IntMatrix block(Eigen::Index r, Eigen::Index c) const {
    return entries.block(r * block_size, c * block_size, block_size, block_size);
  }
  bool is_symmetric() const { return entries == entries.transpose(); }
};

/// Raised when some cell pair has non-constant neighbour counts.
class NonEquitableError : public std::runtime_error {
 public:
  NonEquitableError(std::size_t source_cell, std::size_t target_cell, std::uint32_t witness_a,
                    std::int64_t count_a, std::uint32_t witness_b, std::int64_t count_b);

  std::size_t source_cell;
  std::size_t target_cell;
  std::uint32_t witness_a;
  std::int64_t count_a;
  std::uint32_t witness_b;
  std::int64_t count_b;
};

/// Counts |N(u) ∩ cell| for every vertex u and every cell and returns the
/// matrix of those counts, checking that they are constant on each source cell.
QuotientMatrix quotient_empirical(const CayleyGraph& g, const Partition& partition);

/// Block-circulant assembly circ(D_n, E_n) for m = 2 and
/// circ(2D_n, E_n, O, ..., O, E_n) for m >= 3. Throws UnsupportedError for m = 1.
QuotientMatrix quotient_formula(const GroupParams& p);

/// CSV export: "# Q m=<m> n=<n> order=<mn>" then one comma-separated row per line.
void write_quotient_csv(const QuotientMatrix& q, const GroupParams& p, std::ostream& out);

}  // namespace pancake
