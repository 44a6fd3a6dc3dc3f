#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pancake/cayley_graph.hpp"
#include "pancake/errors.hpp"

using namespace pancake;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_of(const CayleyGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (std::uint32_t v : g.row(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("generator sets") {
  CHECK(generators(GroupParams(2, 3)) ==
        std::vector<Generator>{{1, Sign::plus}, {2, Sign::plus}, {3, Sign::plus}});
  CHECK(generators(GroupParams(3, 2)) == std::vector<Generator>{{1, Sign::plus},
                                                                {1, Sign::minus},
                                                                {2, Sign::plus},
                                                                {2, Sign::minus}});
  CHECK(generators(GroupParams(1, 3)) == std::vector<Generator>{{2, Sign::plus}, {3, Sign::plus}});

  // r_1 fixes every element when m = 1, which is why it is excluded.
  std::mt19937 rng(21);
  const GroupParams p(1, 5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> letters{1, 2, 3, 4, 5};
    std::shuffle(letters.begin(), letters.end(), rng);
    const ColouredPermutation sigma(1, std::vector<int>(5, 0), letters);
    CHECK(prefix_reversal(sigma, 1, Sign::plus) == sigma);
  }

  // Closed under inversion.
  for (int m = 1; m <= 6; ++m) {
    const auto gens = generators(GroupParams(m, 4));
    for (const auto& g : gens) {
      const Generator inverse{g.k, -g.sign};
      const bool present = std::find(gens.begin(), gens.end(), inverse) != gens.end();
      CHECK((present || m <= 2));
    }
  }
}

TEST_CASE("small graphs") {
  SUBCASE("burnt pancake graph on two letters is the 8-cycle") {
    const auto g = build_graph(GroupParams(2, 2));
    CHECK(g.vertex_count() == 8);
    CHECK(g.degree() == 2);
    CHECK(g.edge_count() == 8);
    CHECK(oracle::component_count(8, edges_of(g)) == 1);
  }
  SUBCASE("P_3(2)") {
    const auto g = build_graph(GroupParams(3, 2));
    CHECK(g.vertex_count() == 18);
    CHECK(g.degree() == 4);
    CHECK(oracle::component_count(18, edges_of(g)) == 1);
  }
  SUBCASE("classical pancake graph on three letters is the 6-cycle") {
    const auto g = build_graph(GroupParams(1, 3));
    CHECK(g.vertex_count() == 6);
    CHECK(g.degree() == 2);
    CHECK(oracle::component_count(6, edges_of(g)) == 1);
  }
}

TEST_CASE("neighbour rows") {
  const auto g = build_graph(GroupParams(2, 2));
  // r_1(id) = (1^1,2^0) -> 0*4 + 1 = 1; r_2(id) = (2^1,1^1) -> 1*4 + 1 + 2 = 7.
  const auto row = g.neighbors(VertexIndex{0});
  CHECK(std::vector<std::uint32_t>(row.begin(), row.end()) == std::vector<std::uint32_t>{1, 7});
  CHECK_THROWS_AS(g.neighbors(VertexIndex{8}), ArgumentError);

  const auto g3 = build_graph(GroupParams(3, 2));
  const auto row3 = g3.neighbors(VertexIndex{0});
  CHECK(row3.size() == 4);
  CHECK(std::set<std::uint32_t>(row3.begin(), row3.end()).size() == 4);
  CHECK(std::find(row3.begin(), row3.end(), 0u) == row3.end());
  const auto again = g3.neighbors(VertexIndex{0});
  CHECK(std::equal(row3.begin(), row3.end(), again.begin(), again.end()));
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(build_graph(GroupParams(5, 8)), CapacityError);
  CHECK_THROWS_AS(build_graph(GroupParams(2, 4), 100), CapacityError);
  CHECK_NOTHROW(build_graph(GroupParams(2, 4), 384));
}

TEST_CASE("graph invariants across the grid") {
  const std::vector<std::pair<int, int>> grid = {{1, 1}, {1, 4}, {1, 6}, {2, 1}, {2, 3}, {2, 5},
                                                 {3, 1}, {3, 3}, {3, 4}, {4, 3}, {5, 3}, {8, 2}};
  for (auto [m, n] : grid) {
    CAPTURE(m);
    CAPTURE(n);
    const GroupParams p(m, n);
    const auto g = build_graph(p);
    const int expected_degree = m >= 3 ? 2 * n : (m == 2 ? n : n - 1);
    CHECK(g.vertex_count() == *p.order());
    CHECK(g.degree() == expected_degree);
    CHECK(g.edge_count() * 2 == g.vertex_count() * g.degree());
    CHECK(is_symmetric(g));
    CHECK(is_connected(g));
    CHECK(oracle::component_count(g.vertex_count(), edges_of(g)) == 1);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto row = g.row(v);
      CHECK(std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end());
      CHECK(std::find(row.begin(), row.end(), v) == row.end());
    }
    // Each neighbour is the image of a generator.
    const auto sigma = unrank(VertexIndex{g.vertex_count() / 2}, p);
    std::set<std::uint32_t> images;
    for (const auto& gen : generators(p)) {
      images.insert(static_cast<std::uint32_t>(rank(prefix_reversal(sigma, gen.k, gen.sign)).value));
    }
    const auto row = g.row(static_cast<std::uint32_t>(g.vertex_count() / 2));
    CHECK(images == std::set<std::uint32_t>(row.begin(), row.end()));
  }
}

TEST_CASE("edge list format") {
  const auto g = build_graph(GroupParams(2, 2));
  std::ostringstream out;
  write_edge_list(g, out);
  const std::string text = out.str();
  std::istringstream in(text);
  int m, n, count, degree;
  in >> m >> n >> count >> degree;
  CHECK(m == 2);
  CHECK(n == 2);
  CHECK(count == 8);
  CHECK(degree == 2);
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  CHECK(edges.size() == 8);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (auto [a, b] : edges) CHECK(a < b);
  CHECK(edges.front() == std::pair{0, 1});
  CHECK(text.back() == '\n');
  CHECK(text.rfind("2 2 8 2\n0 1\n0 7\n", 0) == 0);

  std::ostringstream again;
  write_edge_list(build_graph(GroupParams(2, 2)), again);
  CHECK(again.str() == text);
}
