#include "pancake/cayley_graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pancake/errors.hpp"

namespace pancake {

std::vector<Generator> generators(const GroupParams& p) {
  std::vector<Generator> out;
  if (p.m() == 1) {
    for (int k = 2; k <= p.n(); ++k) out.push_back({k, Sign::plus});
  } else if (p.m() == 2) {
    for (int k = 1; k <= p.n(); ++k) out.push_back({k, Sign::plus});
  } else {
    for (int k = 1; k <= p.n(); ++k) {
      out.push_back({k, Sign::plus});
      out.push_back({k, Sign::minus});
    }
  }
  return out;
}

std::span<const std::uint32_t> CayleyGraph::neighbors(VertexIndex v) const {
  if (v.value >= vertex_count_) {
    throw ArgumentError("vertex " + std::to_string(v.value) + " out of range (graph has " +
                        std::to_string(vertex_count_) + " vertices)");
  }
  return row(static_cast<std::uint32_t>(v.value));
}

CayleyGraph build_graph(const GroupParams& p, std::uint64_t vertex_cap) {
  const std::uint64_t cap = std::min<std::uint64_t>(vertex_cap, std::numeric_limits<std::uint32_t>::max());
  const std::uint64_t count = p.order_within(cap);

  CayleyGraph g(p);
  g.vertex_count_ = count;
  g.generators_ = generators(p);
  g.degree_ = static_cast<int>(g.generators_.size());
  g.targets_.resize(static_cast<std::size_t>(count) * g.degree_);

  for (std::uint64_t v = 0; v < count; ++v) {
    const ColouredPermutation sigma = unrank(VertexIndex{v}, p);
    auto* first = g.targets_.data() + v * g.degree_;
    auto* last = first + g.degree_;
    auto* out = first;
    for (const Generator& gen : g.generators_) {
      *out++ = static_cast<std::uint32_t>(rank(prefix_reversal(sigma, gen.k, gen.sign)).value);
    }
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::logic_error("vertex " + std::to_string(v) + " has coinciding generator images");
    }
    if (std::binary_search(first, last, static_cast<std::uint32_t>(v))) {
      throw std::logic_error("vertex " + std::to_string(v) + " has a loop");
    }
  }
  return g;
}

bool is_connected(const CayleyGraph& g) {
  const auto count = static_cast<std::uint32_t>(g.vertex_count());
  if (count == 0) return true;
  std::vector<bool> seen(count, false);
  std::vector<std::uint32_t> frontier{0};
  seen[0] = true;
  std::uint64_t reached = 1;
  while (!frontier.empty()) {
    const std::uint32_t v = frontier.back();
    frontier.pop_back();
    for (std::uint32_t w : g.row(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  return reached == count;
}

bool is_symmetric(const CayleyGraph& g) {
  const auto count = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t v = 0; v < count; ++v) {
    for (std::uint32_t w : g.row(v)) {
      const auto back = g.row(w);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return true;
}

void write_edge_list(const CayleyGraph& g, std::ostream& out) {
  out << g.params().m() << ' ' << g.params().n() << ' ' << g.vertex_count() << ' ' << g.degree()
      << '\n';
  const auto count = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t u = 0; u < count; ++u) {
    for (std::uint32_t v : g.row(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace pancake
