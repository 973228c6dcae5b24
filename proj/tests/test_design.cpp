#include <gtest/gtest.h>

#include <ftd/design_io.hpp>
#include <ftd/geometry.hpp>

#include <random>
#include <set>

using namespace ftd;

namespace {

IncidenceDesign fano() {
  auto f = make_field(2, 1);
  ProjectiveSpace pg(3, f);
  return IncidenceDesign(7, pg.hyperplanes(), pg.group(as_linear_maps(sl_generators(3, f))));
}

PermGroup cyclic(std::size_t n) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(im)});
}

// Independent parameter count: per-point and per-pair incidence by brute force.
struct Naive {
  bool design;
  std::uint64_t r, k, lambda;
};
Naive naive_params(std::size_t v, const std::vector<Block>& blocks) {
  Naive n{true, 0, blocks.empty() ? 0 : blocks[0].size(), 0};
  auto has = [](const Block& b, Point x) { return std::find(b.begin(), b.end(), x) != b.end(); };
  for (const auto& b : blocks) n.design &= b.size() == n.k;
  for (Point x = 0; x < v; ++x) {
    std::uint64_t r = 0;
    for (const auto& b : blocks) r += has(b, x);
    if (x == 0) n.r = r;
    n.design &= r == n.r;
    for (Point y = x + 1; y < v; ++y) {
      std::uint64_t l = 0;
      for (const auto& b : blocks) l += has(b, x) && has(b, y);
      if (x == 0 && y == 1) n.lambda = l;
      n.design &= l == n.lambda;
    }
  }
  return n;
}

IncidenceDesign relabel(const IncidenceDesign& d, const std::vector<Point>& perm) {
  std::vector<Block> blocks;
  for (const auto& b : d.blocks()) {
    Block nb;
    for (Point x : b) nb.push_back(perm[x]);
    blocks.push_back(nb);
  }
  return IncidenceDesign(d.v(), blocks);
}

}  // namespace

TEST(DesignParams, Fano) {
  auto p = compute_params(fano());
  EXPECT_TRUE(p.is_2design);
  EXPECT_EQ(p.tuple(), "7,7,3,3,1");
  EXPECT_TRUE(p.coprime);
  EXPECT_TRUE(p.symmetric);
}

TEST(DesignParams, MatchesNaiveCountOnRandomStructures) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t v = 4 + rng() % 8;
    const std::size_t k = 2 + rng() % (v - 2);
    std::set<Block> blocks;
    const std::size_t b = 1 + rng() % 12;
    for (int attempt = 0; attempt < 200 && blocks.size() < b; ++attempt) {
      std::vector<Point> pts(v);
      std::iota(pts.begin(), pts.end(), Point{0});
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(trial % 3 == 0 ? 1 + rng() % (v - 1) : k);
      std::sort(pts.begin(), pts.end());
      blocks.insert(pts);
    }
    std::vector<Block> list(blocks.begin(), blocks.end());
    auto p = compute_params(IncidenceDesign(v, list));
    auto n = naive_params(v, list);
    ASSERT_EQ(p.is_2design, n.design);
    if (n.design) {
      EXPECT_EQ(p.r, n.r);
      EXPECT_EQ(p.lambda, n.lambda);
      EXPECT_EQ(p.b * p.k, p.v * p.r);
      EXPECT_EQ(p.lambda * (p.v - 1), p.r * (p.k - 1));
    } else {
      EXPECT_FALSE(p.defect.empty());
    }
  }
}

TEST(OrbitDesign, CompleteDesignFromSymmetricGroup) {
  std::vector<Point> cyc{1, 2, 3, 4, 5, 0};
  PermGroup s6(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation(cyc)});
  auto d = orbit_design(6, s6, {0, 2, 5});
  EXPECT_EQ(d.b(), 20u);
  EXPECT_EQ(compute_params(d).tuple(), "6,20,10,3,4");
  EXPECT_THROW(orbit_design(6, s6, {}), std::invalid_argument);
  EXPECT_THROW(orbit_design(6, s6, {0, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST(OrbitDesign, CyclicBiplaneAndRebuildInvariance) {
  auto c11 = cyclic(11);
  auto d = orbit_design(11, c11, {1, 3, 4, 5, 9});
  auto n = naive_params(11, d.blocks());
  EXPECT_TRUE(n.design);
  EXPECT_EQ(n.lambda, 2u);
  EXPECT_EQ(compute_params(d).tuple(), "11,11,5,5,2");
  for (const auto& blk : d.blocks()) EXPECT_EQ(orbit_design(11, c11, blk).blocks(), d.blocks());
}

TEST(FlagTransitivity, Examples) {
  auto f = fano();
  auto t = analyze_transitivity(f);
  EXPECT_TRUE(t.flag_transitive);
  EXPECT_TRUE(t.point_transitive);
  EXPECT_TRUE(t.block_transitive);
  EXPECT_EQ(t.flags, 21u);
  // all pairs of 5 points under C5: 20 flags, group order 5
  std::vector<Block> pairs;
  for (Point a = 0; a < 5; ++a)
    for (Point b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  IncidenceDesign k5(5, pairs, cyclic(5));
  EXPECT_FALSE(is_flag_transitive(k5));
  EXPECT_THROW(is_flag_transitive(IncidenceDesign(5, pairs)), std::invalid_argument);
}

TEST(Complement, Identities) {
  auto f = fano();
  auto c = complement(f);
  EXPECT_EQ(compute_params(c).tuple(), "7,7,4,4,2");
  EXPECT_EQ(complement(c), f);
  EXPECT_EQ(to_design_text(complement(c)), to_design_text(f));
  // AG(2,3) lines and their complements
  auto f3 = make_field(3, 1);
  VectorSpace vs(2, f3);
  std::vector<Block> lines;
  for (const auto& dir : proj_points(2, f3))
    for (const auto& co : affine_cosets(Subspace::span(f3, 2, {dir}))) lines.push_back(co);
  IncidenceDesign ag(9, lines);
  auto agc = complement(ag);
  auto n = naive_params(9, agc.blocks());
  EXPECT_TRUE(n.design);
  EXPECT_EQ(n.lambda, 5u);
  EXPECT_EQ(compute_params(agc).tuple(), "9,12,8,6,5");
  EXPECT_THROW(complement(IncidenceDesign(3, {{0, 1}, {0, 2}, {1, 2}})), std::invalid_argument);
}

TEST(Fingerprint, RelabelingInvariance) {
  std::mt19937 rng(3);
  auto f = fano();
  const auto fp = invariant_fingerprint(f);
  EXPECT_TRUE(fp.configurations_counted);
  for (int i = 0; i < 20; ++i) {
    std::vector<Point> perm(7);
    std::iota(perm.begin(), perm.end(), Point{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(invariant_fingerprint(relabel(f, perm)), fp);
  }
  auto cyc = orbit_design(7, cyclic(7), {0, 1, 3});
  EXPECT_EQ(invariant_fingerprint(cyc).hash, fp.hash);
  EXPECT_NE(invariant_fingerprint(complement(f)).hash, fp.hash);
}

TEST(Dembowski, Examples) {
  auto rep = check_dembowski_implications(fano());
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.primitive);
  EXPECT_TRUE(rep.two_transitive);
  // imprimitive transitive group, design not flag-transitive: vacuous
  std::vector<Block> pairs;
  for (Point a = 0; a < 4; ++a)
    for (Point b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  auto r2 = check_dembowski_implications(IncidenceDesign(4, pairs, cyclic(4)));
  EXPECT_TRUE(r2.ok());
  EXPECT_FALSE(r2.primitive);
  EXPECT_FALSE(r2.flag_transitive);
}

TEST(DesignFile, RoundTripAndVerify) {
  auto f = fano();
  f.set_meta("family", "point-hyperplane");
  f.set_meta("expect", "7,7,3,3,1");
  f.set_meta("claims", "2-design,coprime,flag-transitive,primitive");
  const auto text = to_design_text(f);
  auto parsed = parse_design_text(text);
  EXPECT_EQ(parsed.v, 7u);
  EXPECT_EQ(parsed.blocks, f.blocks());
  auto rep = verify_design(parsed);
  EXPECT_TRUE(rep.ok()) << rep.to_string();
  IncidenceDesign again(parsed.v, parsed.blocks, PermGroup(7, [&] {
                          std::vector<Permutation> g;
                          for (const auto& im : parsed.generators) g.emplace_back(im);
                          return g;
                        }()),
                        parsed.meta);
  EXPECT_EQ(to_design_text(again), text);
}

TEST(DesignFile, CorruptionIsNamed) {
  auto f = fano();
  f.set_meta("expect", "7,7,3,3,1");
  f.set_meta("claims", "2-design,coprime,flag-transitive,primitive");
  auto parsed = parse_design_text(to_design_text(f));
  parsed.blocks[3].pop_back();
  auto rep = verify_design(parsed);
  EXPECT_FALSE(rep.ok());
  auto failed = [&](const std::string& name) {
    for (const auto& r : rep.results)
      if (r.name == name) return !r.ok;
    return false;
  };
  EXPECT_TRUE(failed("2-design"));
  EXPECT_TRUE(failed("block-closed"));
  EXPECT_TRUE(failed("expect"));
}

TEST(DesignFile, ParseErrors) {
  EXPECT_THROW(parse_design_text("blocks\n0 1\nend\n"), FormatError);
  EXPECT_THROW(parse_design_text("v=3\nblocks\n0 1\n"), FormatError);
  EXPECT_THROW(parse_design_text("v=3\nblocks\n0 x\nend\n"), FormatError);
  EXPECT_THROW(parse_design_text("v=3\ngroup degree=3\nbogus\nend\nblocks\nend\n"), FormatError);
}
