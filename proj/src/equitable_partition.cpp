#include "pancake/equitable_partition.hpp"

#include <ostream>
#include <string>

#include "pancake/errors.hpp"

namespace pancake {

CellLabel cell_index(const ColouredPermutation& sigma) {
  const int position = sigma.position_of(1);
  return {sigma.colour(position), position};
}

StructuralBlocks structural_blocks(int n) {
  if (n < 1) throw ArgumentError("block size must be positive");
  StructuralBlocks blocks{IntMatrix::Zero(n, n), IntMatrix::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    blocks.d(i, i) = i;
    // 1-based: e_ij = 1 iff i + j <= n + 1, i.e. 0-based i + j <= n - 1.
    for (int j = 0; i + j <= n - 1; ++j) blocks.e(i, j) = 1;
  }
  return blocks;
}

Partition::Partition(std::vector<std::vector<std::uint32_t>> cells, std::vector<CellLabel> labels,
                     int block_size, std::uint64_t vertex_count)
    : cells_(std::move(cells)), labels_(std::move(labels)), block_size_(block_size) {
  if (!labels_.empty() && labels_.size() != cells_.size()) {
    throw ArgumentError("partition labels do not match cell count");
  }
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  cell_of_.assign(vertex_count, kUnassigned);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (std::uint32_t v : cells_[c]) {
      if (v >= vertex_count) throw ArgumentError("partition cell contains an unknown vertex");
      if (cell_of_[v] != kUnassigned) throw ArgumentError("partition cells overlap");
      cell_of_[v] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::uint32_t c : cell_of_) {
    if (c == kUnassigned) throw ArgumentError("partition cells do not cover the vertex set");
  }
}

Partition build_partition(const CayleyGraph& g) {
  const GroupParams& p = g.params();
  if (p.m() < 2) throw UnsupportedError("the colour/position partition requires m >= 2");
  const int n = p.n();
  std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(p.m()) * n);
  std::vector<CellLabel> labels;
  labels.reserve(cells.size());
  for (int i = 0; i < p.m(); ++i) {
    for (int j = 1; j <= n; ++j) labels.push_back({i, j});
  }
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    const CellLabel label = cell_index(unrank(VertexIndex{v}, p));
    cells[static_cast<std::size_t>(label.colour) * n + (label.position - 1)].push_back(
        static_cast<std::uint32_t>(v));
  }
  return Partition(std::move(cells), std::move(labels), n, g.vertex_count());
}

Partition trivial_partition(const CayleyGraph& g) {
  std::vector<std::uint32_t> all(g.vertex_count());
  for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
  return Partition({std::move(all)}, {}, 1, g.vertex_count());
}

NonEquitableError::NonEquitableError(std::size_t source, std::size_t target, std::uint32_t a,
                                     std::int64_t ca, std::uint32_t b, std::int64_t cb)
    : std::runtime_error("partition is not equitable: cell " + std::to_string(source) +
                         " -> cell " + std::to_string(target) + ": vertex " + std::to_string(a) +
                         " has " + std::to_string(ca) + " neighbours, vertex " +
                         std::to_string(b) + " has " + std::to_string(cb)),
      source_cell(source),
      target_cell(target),
      witness_a(a),
      count_a(ca),
      witness_b(b),
      count_b(cb) {}

QuotientMatrix quotient_empirical(const CayleyGraph& g, const Partition& partition) {
  const auto cells = static_cast<Eigen::Index>(partition.cell_count());
  QuotientMatrix q{IntMatrix::Zero(cells, cells), partition.block_size()};
  std::vector<std::int64_t> counts(cells);
  for (Eigen::Index c = 0; c < cells; ++c) {
    const auto& members = partition.cell(c);
    std::uint32_t first_vertex = 0;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const std::uint32_t u = members[idx];
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t w : g.row(u)) ++counts[partition.cell_of(w)];
      if (idx == 0) {
        first_vertex = u;
        for (Eigen::Index t = 0; t < cells; ++t) q.entries(c, t) = counts[t];
        continue;
      }
      for (Eigen::Index t = 0; t < cells; ++t) {
        if (counts[t] != q.entries(c, t)) {
          throw NonEquitableError(c, t, first_vertex, q.entries(c, t), u, counts[t]);
        }
      }
    }
  }
  return q;
}

QuotientMatrix quotient_formula(const GroupParams& p) {
  const int m = p.m();
  const int n = p.n();
  if (m < 2) throw UnsupportedError("the quotient formula requires m >= 2");
  const StructuralBlocks blocks = structural_blocks(n);
  const IntMatrix diagonal = m == 2 ? blocks.d : IntMatrix(2 * blocks.d);

  QuotientMatrix q{IntMatrix::Zero(static_cast<Eigen::Index>(m) * n, static_cast<Eigen::Index>(m) * n), n};
  for (int r = 0; r < m; ++r) {
    q.entries.block(r * n, r * n, n, n) = diagonal;
    // Offsets +1 and -1 coincide when m = 2; the block is placed once.
    q.entries.block(r * n, ((r + 1) % m) * n, n, n) = blocks.e;
    q.entries.block(r * n, ((r + m - 1) % m) * n, n, n) = blocks.e;
  }
  return q;
}

void write_quotient_csv(const QuotientMatrix& q, const GroupParams& p, std::ostream& out) {
  out << "# Q m=" << p.m() << " n=" << p.n() << " order=" << q.order() << '\n';
  for (Eigen::Index r = 0; r < q.order(); ++r) {
    for (Eigen::Index c = 0; c < q.order(); ++c) {
      if (c) out << ',';
      out << q.entries(r, c);
    }
    out << '\n';
  }
}

}  // namespace pancake
