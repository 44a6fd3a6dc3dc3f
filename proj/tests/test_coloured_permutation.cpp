#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pancake/coloured_permutation.hpp"
#include "pancake/errors.hpp"

using namespace pancake;

namespace {

ColouredPermutation random_element(const GroupParams& p, std::mt19937& rng) {
  std::vector<int> letters(p.n());
  std::iota(letters.begin(), letters.end(), 1);
  std::shuffle(letters.begin(), letters.end(), rng);
  std::uniform_int_distribution<int> colour(0, p.m() - 1);
  std::vector<int> colours(p.n());
  for (int& c : colours) c = colour(rng);
  return ColouredPermutation(p.m(), colours, letters);
}

const std::vector<std::pair<int, int>> kGrid = {{1, 3}, {1, 5}, {2, 2}, {2, 4}, {3, 3},
                                                {3, 5}, {4, 2}, {4, 4}, {5, 3}, {8, 3}};

}  // namespace

TEST_CASE("group parameters") {
  CHECK_THROWS_AS(GroupParams(0, 3), ArgumentError);
  CHECK_THROWS_AS(GroupParams(2, 0), ArgumentError);
  CHECK(GroupParams(2, 3).order() == 48u);
  CHECK(GroupParams(4, 4).order() == 6144u);
  CHECK_FALSE(GroupParams(12, 30).order().has_value());
  CHECK_THROWS_AS(GroupParams(5, 8).order_within(1'000'000), CapacityError);
  try {
    GroupParams(5, 8).order_within(1'000'000);
  } catch (const CapacityError& e) {
    CHECK(e.required() == 390625ull * 40320ull);
    CHECK(e.cap() == 1'000'000u);
  }
}

TEST_CASE("element validation") {
  CHECK_THROWS_AS(ColouredPermutation(2, {0, 0}, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(ColouredPermutation(2, {0, 2}, {1, 2}), ArgumentError);
  CHECK_THROWS_AS(ColouredPermutation(2, {0}, {1, 2}), ArgumentError);
  CHECK_THROWS_AS(ColouredPermutation(3, {0, 0, -1}, {3, 1, 2}), ArgumentError);
  const ColouredPermutation sigma(4, {0, 3, 1}, {2, 1, 3});
  CHECK(sigma.to_string() == "(2^0,1^3,3^1)");
  CHECK(sigma.position_of(1) == 2);
}

TEST_CASE("identity element") {
  CHECK(identity_element(GroupParams(2, 3)) == ColouredPermutation(2, {0, 0, 0}, {1, 2, 3}));
  CHECK(identity_element(GroupParams(1, 1)) == ColouredPermutation(1, {0}, {1}));
  CHECK(identity_element(GroupParams(4, 2)) == ColouredPermutation(4, {0, 0}, {1, 2}));
}

TEST_CASE("substring reversal examples") {
  const auto id4 = identity_element(GroupParams(3, 4));
  CHECK(substring_reversal(id4, 2, 4, Sign::minus) ==
        ColouredPermutation(3, {0, 2, 2, 2}, {1, 4, 3, 2}));

  const auto id2 = identity_element(GroupParams(2, 2));
  CHECK(substring_reversal(id2, 1, 1, Sign::plus) == ColouredPermutation(2, {1, 0}, {1, 2}));

  // (2^1,1^0,3^2) with s_{1,2}^+: psi' = (1,2,3), chi' = (0+1, 1+1, 2).
  const ColouredPermutation sigma(3, {1, 0, 2}, {2, 1, 3});
  CHECK(substring_reversal(sigma, 1, 2, Sign::plus) == ColouredPermutation(3, {1, 2, 2}, {1, 2, 3}));

  CHECK_THROWS_AS(substring_reversal(id4, 0, 2, Sign::plus), ArgumentError);
  CHECK_THROWS_AS(substring_reversal(id4, 3, 2, Sign::plus), ArgumentError);
  CHECK_THROWS_AS(substring_reversal(id4, 2, 5, Sign::plus), ArgumentError);
}

TEST_CASE("prefix reversal examples") {
  const auto id3 = identity_element(GroupParams(2, 3));
  CHECK(prefix_reversal(id3, 2, Sign::plus) == ColouredPermutation(2, {1, 1, 0}, {2, 1, 3}));

  // (3^2,1^1,2^0), m=4, r_3^+: psi' = (2,1,3), chi' = (0+1, 1+1, 2+1).
  const ColouredPermutation sigma(4, {2, 1, 0}, {3, 1, 2});
  CHECK(prefix_reversal(sigma, 3, Sign::plus) == ColouredPermutation(4, {1, 2, 3}, {2, 1, 3}));

  CHECK_THROWS_AS(prefix_reversal(id3, 4, Sign::plus), ArgumentError);
  CHECK_THROWS_AS(prefix_reversal(id3, 0, Sign::plus), ArgumentError);
}

TEST_CASE("prefix reversals: inverse pairs and the m = 2 involution") {
  std::mt19937 rng(11);
  for (auto [m, n] : kGrid) {
    const GroupParams p(m, n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto sigma = random_element(p, rng);
      for (int k = 1; k <= n; ++k) {
        CHECK(prefix_reversal(prefix_reversal(sigma, k, Sign::plus), k, Sign::minus) == sigma);
        CHECK(prefix_reversal(prefix_reversal(sigma, k, Sign::minus), k, Sign::plus) == sigma);
        if (m == 2) {
          CHECK(prefix_reversal(prefix_reversal(sigma, k, Sign::plus), k, Sign::plus) == sigma);
          CHECK(prefix_reversal(sigma, k, Sign::plus) == prefix_reversal(sigma, k, Sign::minus));
        }
      }
    }
  }
}

TEST_CASE("substring reversal properties") {
  std::mt19937 rng(12);
  for (auto [m, n] : kGrid) {
    const GroupParams p(m, n);
    std::uniform_int_distribution<int> pos(1, n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto sigma = random_element(p, rng);
      int i = pos(rng), j = pos(rng);
      if (i > j) std::swap(i, j);
      const Sign eps = trial % 2 ? Sign::plus : Sign::minus;
      const auto once = substring_reversal(sigma, i, j, eps);
      std::multiset<int> before(sigma.letters().begin(), sigma.letters().end());
      std::multiset<int> after(once.letters().begin(), once.letters().end());
      CHECK(before == after);
      for (int t = 1; t <= n; ++t) {
        if (t < i || t > j) {
          CHECK(once.letter(t) == sigma.letter(t));
          CHECK(once.colour(t) == sigma.colour(t));
        }
      }
      const auto twice = substring_reversal(once, i, j, eps);
      const int shift = 2 * static_cast<int>(eps);
      for (int t = 1; t <= n; ++t) {
        CHECK(twice.letter(t) == sigma.letter(t));
        const int expected = (t >= i && t <= j) ? (((sigma.colour(t) + shift) % m) + m) % m
                                                : sigma.colour(t);
        CHECK(twice.colour(t) == expected);
      }
    }
  }
}

TEST_CASE("composition") {
  const GroupParams p(3, 4);
  const auto id = identity_element(p);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sigma = random_element(p, rng);
    CHECK(compose(id, sigma) == sigma);
    CHECK(compose(sigma, id) == sigma);
    for (int k = 1; k <= p.n(); ++k) {
      for (Sign eps : {Sign::plus, Sign::minus}) {
        CHECK(compose(sigma, prefix_reversal(id, k, eps)) == prefix_reversal(sigma, k, eps));
      }
    }
    const auto a = random_element(p, rng), b = random_element(p, rng);
    CHECK(compose(compose(sigma, a), b) == compose(sigma, compose(a, b)));
  }
  for (int k = 1; k <= p.n(); ++k) {
    CHECK(compose(prefix_reversal(id, k, Sign::minus), prefix_reversal(id, k, Sign::plus)) == id);
  }
  CHECK_THROWS_AS(compose(id, identity_element(GroupParams(2, 4))), ArgumentError);
  CHECK_THROWS_AS(compose(id, identity_element(GroupParams(3, 3))), ArgumentError);
}

TEST_CASE("rank examples") {
  for (auto [m, n] : kGrid) CHECK(rank(identity_element(GroupParams(m, n))).value == 0);
  CHECK(rank(ColouredPermutation(2, {0, 1}, {1, 2})).value == 2);

  // All 8 elements of S(2,2) by the formula: lex index * 4 + chi(1) + 2 chi(2).
  std::set<std::uint64_t> seen;
  for (std::vector<int> letters : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int c2 = 0; c2 < 2; ++c2) {
        const ColouredPermutation sigma(2, {c1, c2}, letters);
        const std::uint64_t expected = oracle::lexicographic_index(letters) * 4 + c1 + 2 * c2;
        CHECK(rank(sigma).value == expected);
        CHECK(unrank(VertexIndex{expected}, GroupParams(2, 2)) == sigma);
        seen.insert(expected);
      }
    }
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(unrank(VertexIndex{8}, GroupParams(2, 2)), ArgumentError);
}

TEST_CASE("lehmer rank matches lexicographic enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::uint64_t idx = 0;
    do {
      CHECK(lehmer_rank(p) == idx++);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("rank/unrank bijection") {
  // Exhaustive below 10^4 elements.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}, {4, 4}, {5, 3}, {8, 3}}) {
    const GroupParams p(m, n);
    const std::uint64_t order = *p.order();
    REQUIRE(order <= 10'000);
    std::set<std::vector<int>> distinct;
    for (std::uint64_t v = 0; v < order; ++v) {
      const auto sigma = unrank(VertexIndex{v}, p);
      CHECK(rank(sigma).value == v);
      std::vector<int> key(sigma.colours().begin(), sigma.colours().end());
      key.insert(key.end(), sigma.letters().begin(), sigma.letters().end());
      distinct.insert(key);
    }
    CHECK(distinct.size() == order);
  }
  // Sampled above.
  std::mt19937 rng(14);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 8}, {5, 6}, {12, 7}}) {
    const GroupParams p(m, n);
    std::uniform_int_distribution<std::uint64_t> pick(0, *p.order() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto sigma = random_element(p, rng);
      CHECK(unrank(rank(sigma), p) == sigma);
      const VertexIndex v{pick(rng)};
      CHECK(rank(unrank(v, p)) == v);
    }
  }
}
