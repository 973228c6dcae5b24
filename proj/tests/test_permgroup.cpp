#include <gtest/gtest.h>

#include <ftd/permgroup.hpp>

#include <random>
#include <set>

using namespace ftd;

namespace {

Permutation cycle(std::size_t n, std::vector<Point> c) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < c.size(); ++i) im[c[i]] = c[(i + 1) % c.size()];
  return Permutation(im);
}

PermGroup symmetric(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {cycle(n, {0, 1}), cycle(n, all)});
}

// Closure by brute force for small groups.
std::set<std::vector<Point>> enumerate(const PermGroup& g) {
  std::set<std::vector<Point>> seen{Permutation::identity(g.degree()).images()};
  std::vector<Permutation> queue{Permutation::identity(g.degree())};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& s : g.generators()) {
      auto x = queue[h] * s;
      if (seen.insert(x.images()).second) queue.push_back(x);
    }
  return seen;
}

}  // namespace

TEST(Permutation, CompositionAppliesLeftFirst) {
  auto a = cycle(3, {0, 1});
  auto b = cycle(3, {1, 2});
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(PermGroup, SymmetricOrders) {
  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 10; ++n) {
    fact *= n;
    EXPECT_EQ(symmetric(n).order(), fact) << n;
  }
  std::vector<Point> all(20);
  std::iota(all.begin(), all.end(), Point{0});
  EXPECT_EQ(PermGroup(20, {cycle(20, {0, 1}), cycle(20, all)}).order(), 2432902008176640000ull);
}

TEST(PermGroup, OrderMatchesEnumeration) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) {
      std::vector<Point> im(n);
      std::iota(im.begin(), im.end(), Point{0});
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    PermGroup g(n, gens);
    auto elems = enumerate(g);
    ASSERT_EQ(g.order(), elems.size());
    for (const auto& e : elems) ASSERT_TRUE(g.chain().contains(Permutation(e)));
    // orbit-stabilizer
    for (Point x = 0; x < n; ++x) ASSERT_EQ(orbit(g, x).size() * point_stabilizer(g, x).order(), g.order());
  }
}

TEST(PermGroup, TransitivityAndPrimitivity) {
  // D8 on the square's vertices: transitive, imprimitive, not 2-transitive
  PermGroup d8(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_TRUE(is_transitive(d8));
  EXPECT_FALSE(is_two_transitive(d8));
  EXPECT_FALSE(is_primitive(d8));
  EXPECT_EQ(minimal_block(d8, 0, 2), (std::vector<Point>{0, 2}));
  // C5 is primitive (prime degree) but not 2-transitive
  PermGroup c5(5, {cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_TRUE(is_primitive(c5));
  EXPECT_FALSE(is_two_transitive(c5));
  EXPECT_TRUE(is_two_transitive(symmetric(6)));
  PermGroup intrans(4, {cycle(4, {0, 1})});
  EXPECT_THROW(is_primitive(intrans), std::invalid_argument);
  EXPECT_EQ(orbits(intrans).size(), 3u);
}

TEST(PermGroup, InducedActionOnPairs) {
  auto s5 = symmetric(5);
  std::vector<std::vector<Point>> pairs;
  for (Point a = 0; a < 5; ++a)
    for (Point b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  auto act = induced_action(s5, pairs);
  EXPECT_EQ(act.order(), 120u);
  EXPECT_TRUE(is_primitive(act));
  EXPECT_FALSE(is_two_transitive(act));
  EXPECT_EQ(orbit_of_set(s5, {3, 1}).size(), 10u);
  EXPECT_EQ(orbit_of_tuple(s5, {3, 1}).size(), 20u);
  std::vector<std::vector<Point>> partial(pairs.begin(), pairs.begin() + 4);
  EXPECT_THROW(induced_action(s5, partial), std::invalid_argument);
}
