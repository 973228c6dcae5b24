#include <gtest/gtest.h>

#include <ftd/geometry.hpp>

#include <map>
#include <set>

using namespace ftd;

namespace {

std::uint64_t pair_key(Point a, Point b) { return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b); }

// Number of blocks through each unordered pair, counted naively.
std::map<std::uint64_t, int> pair_counts(const std::vector<std::vector<Point>>& blocks) {
  std::map<std::uint64_t, int> c;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) ++c[pair_key(b[i], b[j])];
  return c;
}

std::uint64_t pgl_order(unsigned n, std::uint64_t q) {
  std::uint64_t o = 1;
  for (unsigned i = 0; i < n; ++i) o *= ipow(q, n) - ipow(q, i);
  return o / (q - 1);
}

}  // namespace

TEST(ProjectiveSpace, PointCountsAndOrder) {
  EXPECT_EQ(proj_points(3, make_field(2, 1)).size(), 7u);
  EXPECT_EQ(proj_points(2, make_field(5, 1)).size(), 6u);
  EXPECT_EQ(proj_points(4, make_field(2, 1)).size(), 15u);
  ProjectiveSpace pg(3, make_field(3, 1));
  EXPECT_EQ(pg.point(0), (Vec{0, 0, 1}));
  EXPECT_EQ(pg.points().back(), (Vec{1, 2, 2}));
  for (std::size_t i = 1; i < pg.size(); ++i)
    EXPECT_LT(projective_code(pg.field(), pg.point(static_cast<Point>(i - 1))),
              projective_code(pg.field(), pg.point(static_cast<Point>(i))));
}

TEST(ProjectiveSpace, NormalizationCanonical) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = make_field_of_order(q);
    VectorSpace vs(3, f);
    for (Point i = 1; i < vs.size(); ++i) {
      const Vec x = vs.vector(i);
      const Vec nx = normalize(f, x);
      ASSERT_EQ(normalize(f, nx), nx);
      for (std::uint32_t a = 1; a < q; ++a) {
        Vec y = x;
        for (auto& c : y) c = f.mul_code(c, a);
        ASSERT_EQ(normalize(f, y), nx);
      }
    }
  }
  auto f = make_field(2, 1);
  EXPECT_THROW(normalize(f, {0, 0, 0}), std::invalid_argument);
}

TEST(ProjectiveSpace, HyperplanesAreDesigns) {
  struct Case {
    unsigned n;
    std::uint64_t q;
    std::size_t size, lambda;
  };
  for (auto c : {Case{3, 2, 3, 1}, Case{4, 2, 7, 3}, Case{3, 3, 4, 1}, Case{3, 4, 5, 1}, Case{4, 3, 13, 4}}) {
    auto f = make_field_of_order(c.q);
    auto hs = hyperplanes(c.n, f);
    const std::size_t v = (ipow(c.q, c.n) - 1) / (c.q - 1);
    EXPECT_EQ(hs.size(), v);
    for (const auto& h : hs) EXPECT_EQ(h.size(), c.size);
    auto pc = pair_counts(hs);
    EXPECT_EQ(pc.size(), v * (v - 1) / 2);
    for (auto [k, cnt] : pc) ASSERT_EQ(static_cast<std::size_t>(cnt), c.lambda);
  }
  EXPECT_THROW(hyperplanes(2, make_field(2, 1)), std::invalid_argument);
}

TEST(ProjectiveSpace, Lines) {
  ProjectiveSpace fano(3, make_field(2, 1));
  EXPECT_EQ(fano.line_through(0, 1).size(), 3u);
  EXPECT_EQ(ProjectiveSpace(3, make_field(2, 2)).line_through(2, 7).size(), 5u);
  EXPECT_EQ(ProjectiveSpace(4, make_field(3, 1)).line_through(0, 39).size(), 4u);
  EXPECT_THROW(fano.line_through(2, 2), std::invalid_argument);
}

TEST(ClassicalGroups, OrdersOnProjectiveSpace) {
  struct Case {
    unsigned n;
    std::uint64_t q;
  };
  for (auto c : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{2, 5}, Case{2, 7}, Case{2, 8}, Case{2, 9}, Case{3, 2},
                 Case{3, 3}, Case{3, 4}, Case{4, 2}, Case{4, 3}, Case{5, 2}}) {
    auto f = make_field_of_order(c.q);
    ProjectiveSpace pg(c.n, f);
    for (const auto& m : sl_generators(c.n, f)) EXPECT_EQ(determinant(f, m), 1u);
    const std::uint64_t pgl = pgl_order(c.n, c.q);
    const std::uint64_t psl = pgl / std::gcd<std::uint64_t>(c.n, c.q - 1);
    EXPECT_EQ(pg.group(as_linear_maps(sl_generators(c.n, f))).order(), psl) << c.n << " " << c.q;
    EXPECT_EQ(pg.group(as_linear_maps(gl_generators(c.n, f))).order(), pgl);
    EXPECT_EQ(pg.group(gammal_generators(c.n, f)).order(), pgl * f.degree());
  }
}

TEST(Hermitian, IsotropicPointsMatchBruteForce) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    HermitianSpace h(q);
    const auto& f = h.field();
    // oracle: count nonzero vectors with x0 x2^q + x1^(q+1) + x2 x0^q = 0 via pow
    std::uint64_t zeros = 0;
    VectorSpace vs(3, f);
    for (Point i = 1; i < vs.size(); ++i) {
      auto x = vs.vector(i);
      auto e = [&](std::uint32_t c) { return f.element(c); };
      auto s = f.add(f.add(f.mul(e(x[0]), f.pow(e(x[2]), q)), f.pow(e(x[1]), q + 1)), f.mul(e(x[2]), f.pow(e(x[0]), q)));
      zeros += s.is_zero();
    }
    EXPECT_EQ(zeros / (std::uint64_t{q} * q - 1), std::uint64_t{q} * q * q + 1);
    EXPECT_EQ(h.isotropic_points().size(), std::size_t{q} * q * q + 1);
  }
}

TEST(Hermitian, UnitalIsLinearSpace) {
  for (unsigned q : {2u, 3u, 4u}) {
    HermitianSpace h(q);
    auto blocks = h.hermitian_blocks();
    const std::size_t v = h.isotropic_points().size();
    EXPECT_EQ(blocks.size(), v * (v - 1) / (q * (q + 1)));
    auto pc = pair_counts(blocks);
    EXPECT_EQ(pc.size(), v * (v - 1) / 2);
    for (auto [k, cnt] : pc) ASSERT_EQ(cnt, 1);
  }
  EXPECT_EQ(HermitianSpace(2).hermitian_blocks().size(), 12u);
  EXPECT_EQ(HermitianSpace(3).hermitian_blocks().size(), 63u);
}

TEST(Hermitian, UnitaryGroupOrder) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    HermitianSpace h(q);
    auto g = h.isotropic_action(h.unitary_generators());
    const std::uint64_t Q = q;
    EXPECT_EQ(g.order(), Q * Q * Q * (Q * Q * Q + 1) * (Q * Q - 1)) << q;
    EXPECT_TRUE(is_two_transitive(g));
  }
}

TEST(Suzuki, OvoidQ8) {
  SuzukiOvoid o(8);
  EXPECT_EQ(o.points().size(), 65u);
  EXPECT_TRUE(o.no_three_collinear());
  auto g = o.group();
  EXPECT_EQ(g.order(), 29120u);
  EXPECT_TRUE(is_two_transitive(g));
  auto k = o.action(o.frobenius_subgroup_generators());
  EXPECT_EQ(k.order(), 56u);
  int size_q = 0;
  for (const auto& orb : orbits(k)) size_q += orb.size() == 8;
  EXPECT_EQ(size_q, 1);
}

TEST(Suzuki, OvoidQ32) {
  SuzukiOvoid o(32);
  EXPECT_EQ(o.points().size(), 1025u);
  EXPECT_EQ(o.group().order(), 32ull * 32 * 1025 * 31);
}

TEST(Suzuki, RejectsBadQ) {
  EXPECT_THROW(SuzukiOvoid(4), std::invalid_argument);
  EXPECT_THROW(SuzukiOvoid(2), std::invalid_argument);
  EXPECT_THROW(SuzukiOvoid(128), std::invalid_argument);
}

TEST(Spread, RegularSpreads) {
  struct Case {
    unsigned d, t, p;
    std::size_t count;
  };
  for (auto c : {Case{4, 2, 3, 10}, Case{6, 3, 2, 9}, Case{2, 1, 5, 6}, Case{6, 2, 2, 21}, Case{4, 4, 2, 1}}) {
    auto s = regular_spread(c.d, c.t, c.p);
    EXPECT_EQ(s.components().size(), c.count);
    EXPECT_EQ(s.component_dim(), c.t);
  }
  EXPECT_THROW(regular_spread(5, 2, 2), std::invalid_argument);
  auto f = make_field(2, 1);
  auto a = Subspace::span(f, 2, {{1, 0}});
  EXPECT_THROW(Spread({a, a, Subspace::span(f, 2, {{0, 1}})}), std::invalid_argument);
  EXPECT_THROW(Spread({a}), std::invalid_argument);
}

TEST(Spread, AffineCosetsPartition) {
  struct Case {
    unsigned p, d, u;
  };
  for (auto c : {Case{2, 6, 3}, Case{3, 4, 2}, Case{2, 3, 0}}) {
    auto f = make_field(c.p, 1);
    std::vector<Vec> gens;
    for (unsigned i = 0; i < c.u; ++i) {
      Vec e(c.d, 0);
      e[i] = 1;
      gens.push_back(e);
    }
    auto w = Subspace::span(f, c.d, gens);
    auto cosets = affine_cosets(w);
    EXPECT_EQ(cosets.size(), ipow(c.p, c.d - c.u));
    std::set<Point> all;
    for (const auto& co : cosets) {
      EXPECT_EQ(co.size(), ipow(c.p, c.u));
      all.insert(co.begin(), co.end());
    }
    EXPECT_EQ(all.size(), ipow(c.p, c.d));
  }
}

TEST(Subspace, EchelonCanonical) {
  auto f = make_field(3, 1);
  auto a = Subspace::span(f, 3, {{1, 1, 0}, {0, 1, 1}});
  auto b = Subspace::span(f, 3, {{1, 2, 1}, {0, 2, 2}, {2, 0, 1}});
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.basis(), (std::vector<Vec>{{1, 0, 2}, {0, 1, 1}}));
  EXPECT_EQ(Subspace::span(f, 3, {{1, 1, 0}, {0, 0, 1}}).dim(), 2u);
  EXPECT_FALSE(a == Subspace::span(f, 3, {{1, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(a.contains({1, 2, 1}));
  EXPECT_EQ(a.vectors().size(), 9u);
}
