#pragma once

// Subgroups T:<w^i, sigma^y w^j> of AGammaL_1(p^d), Paley-type symmetric
// designs, and a search for flag-transitive coprime orbit designs whose
// base block is a union of orbits of a cyclic subgroup of the point
// stabilizer.

#include "design.hpp"
#include "families.hpp"

#include <set>

namespace ftd {

/// x -> w^a * x^(p^e) on GF(p^d), stored as (a mod p^d-1, e mod d).
struct SemilinearElement {
  std::uint32_t a = 0;
  unsigned e = 0;
  friend auto operator<=>(const SemilinearElement&, const SemilinearElement&) = default;
};

struct SemilinearSubgroup {
  unsigned p = 0, d = 0;
  std::uint64_t i = 0, y = 0, j = 0;
  std::vector<SemilinearElement> stabilizer;  // G_0, sorted
  PermGroup group;                            // T:G_0 on element codes

  std::uint64_t order() const { return ipow(p, d) * stabilizer.size(); }
};

namespace detail {

struct SemilinearContext {
  FiniteField f;
  std::uint32_t q1;

  explicit SemilinearContext(FiniteField field) : f(std::move(field)), q1(f.order() - 1) {}

  /// (g h)(x) = g(h(x))
  SemilinearElement compose(const SemilinearElement& g, const SemilinearElement& h) const {
    const std::uint64_t pe = ipow(f.characteristic(), g.e) % q1;
    return {static_cast<std::uint32_t>((g.a + static_cast<std::uint64_t>(h.a) * pe) % q1), (g.e + h.e) % f.degree()};
  }

  /// x -> (w^-a x)^(p^(d-e))
  SemilinearElement inverse(const SemilinearElement& g) const {
    const unsigned e = (f.degree() - g.e) % f.degree();
    const std::uint64_t pe = ipow(f.characteristic(), e) % q1;
    return {static_cast<std::uint32_t>((q1 - g.a % q1) % q1 * pe % q1), e};
  }

  std::uint32_t apply(const SemilinearElement& g, std::uint32_t x) const {
    if (x == 0) return 0;
    return f.mul_code(f.exp(g.a).code(), f.frobenius_code(x, g.e));
  }

  std::vector<SemilinearElement> closure(const std::vector<SemilinearElement>& gens) const {
    std::set<SemilinearElement> seen{{0, 0}};
    std::vector<SemilinearElement> todo{{0, 0}};
    while (!todo.empty()) {
      const auto x = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        const auto y = compose(g, x);
        if (seen.insert(y).second) todo.push_back(y);
      }
    }
    return {seen.begin(), seen.end()};
  }

  Permutation permutation(const SemilinearElement& g) const {
    std::vector<Point> im(f.order());
    for (std::uint32_t x = 0; x < f.order(); ++x) im[x] = apply(g, x);
    return Permutation(std::move(im));
  }
};

inline void check_semilinear_size(unsigned p, unsigned d, std::uint64_t cap) {
  if (!is_prime(p)) throw PreconditionError("semilinear: p must be prime");
  if (d == 0 || d > 40 || ipow(p, d) > cap)
    throw PreconditionError("semilinear: p^d must be at most " + std::to_string(cap));
}

}  // namespace detail

/// All subgroups T:<w^i, sigma^y w^j> with y | d, 0 <= j < i and
/// i | gcd(p^d-1, j(p^d-1)/(p^y-1)), deduplicated by G_0 as a set.
/// Sorted by (i, y, j) of the first occurrence.
inline std::vector<SemilinearSubgroup> enumerate_semilinear(unsigned p, unsigned d) {
  detail::check_semilinear_size(p, d, 4096);
  const detail::SemilinearContext ctx(make_field(p, d));
  const std::uint64_t q1 = ctx.q1;
  const std::vector<Permutation> translations = VectorSpace(1, ctx.f).translation_generators();
  std::vector<SemilinearSubgroup> out;
  std::set<std::vector<SemilinearElement>> seen;
  for (std::uint64_t i : divisors(q1))
    for (std::uint64_t y : divisors(d))
      for (std::uint64_t j = 0; j < i; ++j) {
        const std::uint64_t twist = j * (q1 / (ipow(p, static_cast<unsigned>(y)) - 1));
        if (std::gcd(q1, twist) % i != 0) continue;
        const std::vector<SemilinearElement> gens{{static_cast<std::uint32_t>(i % q1), 0},
                                                  {static_cast<std::uint32_t>(j % q1), static_cast<unsigned>(y % d)}};
        auto g0 = ctx.closure(gens);
        if (!seen.insert(g0).second) continue;
        std::vector<Permutation> perms = translations;
        for (const auto& g : gens) perms.push_back(ctx.permutation(g));
        out.push_back({p, d, i, y, j, std::move(g0), PermGroup(ctx.f.order(), std::move(perms))});
      }
  return out;
}

struct PaleyParams {
  unsigned p = 0, d = 0;
  std::uint64_t i = 0, theta = 0, y = 0;

  std::uint64_t v() const { return ipow(p, d); }
  std::uint64_t k() const { return theta * (v() - 1) / i; }
  std::uint64_t lambda() const { return theta * theta * (v() - 1 - i / theta) / (i * i); }

  /// Empty if the divisibility conditions hold, otherwise the first failure.
  std::string violation() const {
    if (!is_prime(p) || d == 0) return "p must be prime and d positive";
    if (y == 0 || d % y != 0) return "y must divide d";
    if (theta == 0 || (d / y) % theta != 0) return "theta must divide d/y";
    const std::uint64_t q1 = v() - 1;
    if (i == 0 || q1 % i != 0) return "i must divide p^d-1";
    if ((theta * q1) % i != 0) return "theta(p^d-1)/i is not an integer";
    if (i % theta != 0) return "i/theta is not an integer";
    if ((theta * theta * (q1 - i / theta)) % (i * i) != 0) return "lambda is not an integer";
    return {};
  }
};

struct PaleyResult {
  std::optional<IncidenceDesign> design;
  std::string report;
};

/// First union of theta orbits of <w^i, sigma^y> on GF(q)* (orbits ordered
/// by least element, unions in lexicographic order) whose orbit design under
/// T:<w^i, sigma^y> is symmetric with the stated parameters.
inline PaleyResult paley_design(const PaleyParams& pp) {
  if (auto why = pp.violation(); !why.empty()) throw PreconditionError("paley: " + why);
  detail::check_semilinear_size(pp.p, pp.d, 4096);
  const detail::SemilinearContext ctx(make_field(pp.p, pp.d));
  const std::vector<SemilinearElement> gens{{static_cast<std::uint32_t>(pp.i % ctx.q1), 0},
                                            {0, static_cast<unsigned>(pp.y % pp.d)}};
  const std::uint64_t v = pp.v(), k = pp.k(), lambda = pp.lambda();
  std::vector<Permutation> perms = VectorSpace(1, ctx.f).translation_generators();
  for (const auto& g : gens) perms.push_back(ctx.permutation(g));
  const PermGroup grp(v, std::move(perms));
  const PermGroup mult(v, {ctx.permutation(gens[0]), ctx.permutation(gens[1])});

  std::vector<std::vector<Point>> orbs;
  for (auto& o : orbits(mult))
    if (o.front() != 0) orbs.push_back(std::move(o));
  std::ostringstream rep;
  rep << "paley p=" << pp.p << " d=" << pp.d << " i=" << pp.i << " theta=" << pp.theta << " y=" << pp.y << ": ";
  if (pp.theta > orbs.size()) {
    rep << "only " << orbs.size() << " orbits";
    return {std::nullopt, rep.str()};
  }
  std::vector<std::size_t> pick(pp.theta);
  std::iota(pick.begin(), pick.end(), 0);
  std::size_t tried = 0;
  while (true) {
    Block base;
    for (auto idx : pick) base.insert(base.end(), orbs[idx].begin(), orbs[idx].end());
    if (base.size() == k && k < v) {
      ++tried;
      auto d = orbit_design(v, grp, base);
      const auto p = compute_params(d);
      if (p.is_2design && p.symmetric && p.k == k && p.lambda == lambda) {
        d.set_meta("family", "paley");
        d.set_meta("params", "p=" + std::to_string(pp.p) + ",d=" + std::to_string(pp.d) + ",i=" +
                                 std::to_string(pp.i) + ",theta=" + std::to_string(pp.theta) + ",y=" +
                                 std::to_string(pp.y));
        d.set_meta("field", ctx.f.descriptor());
        d.set_meta("expect", p.tuple());
        d.set_meta("claims", p.coprime ? "2-design,coprime,symmetric" : "2-design,symmetric");
        rep << "found " << p.tuple();
        return {std::move(d), rep.str()};
      }
    }
    std::size_t t = pick.size();
    while (t > 0 && pick[t - 1] == orbs.size() - pick.size() + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < pick.size(); ++u) pick[u] = pick[u - 1] + 1;
  }
  rep << "no symmetric (" << v << "," << k << "," << lambda << ") design among " << tried << " candidates";
  return {std::nullopt, rep.str()};
}

struct SearchHit {
  SemilinearSubgroup subgroup;
  IncidenceDesign design;
  DesignParams params;
  std::string fingerprint;

  /// p^d k lambda r b i y j fingerprint
  std::string line() const {
    std::ostringstream os;
    os << subgroup.p << '^' << subgroup.d << ' ' << params.k << ' ' << params.lambda << ' ' << params.r << ' '
       << params.b << ' ' << subgroup.i << ' ' << subgroup.y << ' ' << subgroup.j << ' ' << fingerprint;
    return os.str();
  }
};

struct SearchOptions {
  std::uint64_t work_budget = 2'000'000'000;  // difference counts plus stabilizer trials
  std::uint64_t max_blocks = 2'000'000;
  std::size_t max_remembered = 4'000'000;  // candidate blocks kept for duplicate skipping
};

struct SearchReport {
  std::vector<SearchHit> hits;
  std::uint64_t candidates = 0;
  std::uint64_t oversized = 0;  // passing candidates too large to materialize and fingerprint
  bool truncated = false;
};

/// Base blocks: unions of at most three orbits of one cyclic subgroup of
/// G_0, with 2 < k < v-1 and k <= k_max. A candidate is kept if its orbit
/// design is a 2-design, G is flag-transitive and point-primitive, and
/// gcd(r, lambda) = 1. Hits are deduplicated by fingerprint.
inline SearchReport search_flag_transitive(unsigned p, unsigned d, std::uint64_t k_max,
                                           const SearchOptions& opt = {}) {
  detail::check_semilinear_size(p, d, 1024);
  if (k_max > 64) throw PreconditionError("search: k_max must be at most 64");
  const detail::SemilinearContext ctx(make_field(p, d));
  const std::uint32_t v = ctx.f.order();
  std::vector<std::uint32_t> neg(v), sub(v * static_cast<std::size_t>(v));
  for (std::uint32_t x = 0; x < v; ++x) neg[x] = ctx.f.neg_code(x);
  for (std::uint32_t x = 0; x < v; ++x)
    for (std::uint32_t y = 0; y < v; ++y) sub[x * v + y] = ctx.f.add_code(x, neg[y]);

  SearchReport report;
  std::uint64_t work = 0;
  std::set<std::string> seen_fp;
  const std::uint64_t k_hi = std::min<std::uint64_t>(k_max, v >= 2 ? v - 2 : 0);

  for (auto& sg : enumerate_semilinear(p, d)) {
    if (report.truncated) break;
    // G_0-orbits on nonzero elements
    std::vector<std::uint32_t> orbit_id(v, 0), orbit_size;
    {
      std::vector<char> done(v, 0);
      for (std::uint32_t x = 1; x < v; ++x) {
        if (done[x]) continue;
        std::set<std::uint32_t> o;
        for (const auto& g : sg.stabilizer) o.insert(ctx.apply(g, x));
        for (auto y : o) {
          done[y] = 1;
          orbit_id[y] = static_cast<std::uint32_t>(orbit_size.size());
        }
        orbit_size.push_back(static_cast<std::uint32_t>(o.size()));
      }
    }
    const bool primitive = is_primitive(sg.group);
    if (!primitive) continue;
    // act[n*v + x] = n-th element of G_0 applied to x
    const std::size_t n0 = sg.stabilizer.size();
    std::vector<std::uint16_t> act(n0 * v);
    for (std::size_t n = 0; n < n0; ++n)
      for (std::uint32_t x = 0; x < v; ++x) act[n * v + x] = static_cast<std::uint16_t>(ctx.apply(sg.stabilizer[n], x));

    // cyclic subgroups of G_0, each once
    std::vector<std::vector<SemilinearElement>> cyclic;
    {
      std::set<SemilinearElement> covered;
      for (const auto& g : sg.stabilizer) {
        if (covered.count(g)) continue;
        std::vector<SemilinearElement> powers{{0, 0}};
        for (auto x = g; !(x.a == 0 && x.e == 0); x = ctx.compose(g, x)) powers.push_back(x);
        const std::size_t n = powers.size();
        // conjugate subgroups give the same G-orbits of blocks
        for (const auto& h : sg.stabilizer) {
          const auto hinv = ctx.inverse(h);
          for (std::size_t t = 1; t < n; ++t)
            if (std::gcd(t, n) == 1) covered.insert(ctx.compose(h, ctx.compose(powers[t], hinv)));
        }
        if (n == 1) covered.insert(g);
        cyclic.push_back(std::move(powers));
      }
    }

    std::set<Block> tried, found;  // found: blocks of designs already materialized for this G
    std::vector<std::uint64_t> per_orbit(orbit_size.size());
    for (const auto& c : cyclic) {
      if (report.truncated) break;
      std::vector<std::vector<Point>> orbs;
      {
        std::vector<char> done(v, 0);
        for (std::uint32_t x = 0; x < v; ++x) {
          if (done[x]) continue;
          std::set<Point> o;
          for (const auto& g : c) o.insert(ctx.apply(g, x));
          for (auto y : o) done[y] = 1;
          orbs.emplace_back(o.begin(), o.end());
        }
      }
      const std::size_t m = orbs.size();
      auto evaluate = [&](std::initializer_list<std::size_t> pick) {
        std::size_t k = 0;
        for (auto idx : pick) k += orbs[idx].size();
        if (k < 3 || k > k_hi) return;
        Block blk;
        for (auto idx : pick) blk.insert(blk.end(), orbs[idx].begin(), orbs[idx].end());
        std::sort(blk.begin(), blk.end());
        if (tried.count(blk)) return;
        if (tried.size() < opt.max_remembered) tried.insert(blk);
        if (found.count(blk)) return;
        ++report.candidates;
        work += k * k;
        if (work > opt.work_budget) {
          report.truncated = true;
          return;
        }
        // lambda is constant iff differences hit every G_0-orbit proportionally
        std::fill(per_orbit.begin(), per_orbit.end(), 0);
        for (Point x : blk)
          for (Point y : blk)
            if (x != y) ++per_orbit[orbit_id[sub[x * v + y]]];
        for (std::size_t o = 1; o < per_orbit.size(); ++o)
          if (per_orbit[o] * orbit_size[0] != per_orbit[0] * orbit_size[o]) return;
        // block stabilizer: g in G_0 and t with g(B) + t = B
        std::vector<char> in(v, 0);
        for (Point x : blk) in[x] = 1;
        work += n0 * k;
        std::vector<std::pair<std::size_t, std::uint32_t>> stab;  // (index in G_0, translation)
        for (std::size_t n = 0; n < n0; ++n) {
          const std::uint16_t* g = &act[n * v];
          const std::uint32_t first = g[blk[0]];
          for (Point target : blk) {
            const std::uint32_t shift = sub[target * v + first];
            bool ok = true;
            for (std::size_t t = 1; t < k && ok; ++t) ok = in[sub[g[blk[t]] * v + neg[shift]]];
            if (ok) stab.emplace_back(n, shift);
          }
        }
        const std::uint64_t b = sg.order() / stab.size();
        const std::uint64_t r = b * k / v;
        const std::uint64_t lambda = r * (k - 1) / (v - 1);
        if (std::gcd(r, lambda) != 1) return;
        // flag-transitive iff the block stabilizer is transitive on the block
        std::set<Point> reach{blk[0]};
        std::vector<Point> todo{blk[0]};
        while (!todo.empty()) {
          const Point x = todo.back();
          todo.pop_back();
          for (const auto& [n, t] : stab) {
            const Point y = sub[act[n * v + x] * v + neg[t]];
            if (reach.insert(y).second) todo.push_back(y);
          }
        }
        if (reach.size() != k) return;
        if (b > opt.max_blocks || b * k * r > kFingerprintWork) {
          ++report.oversized;
          return;
        }

        auto des = orbit_design(v, sg.group, blk);
        if (found.size() + des.b() <= opt.max_remembered) found.insert(des.blocks().begin(), des.blocks().end());
        const auto params = compute_params(des);
        if (!params.is_2design || !params.coprime || !is_flag_transitive(des))
          throw std::logic_error("search: difference test disagrees with the orbit design");
        const auto fp = invariant_fingerprint(des).hex();
        if (!seen_fp.insert(fp).second) return;
        des.set_meta("family", "semilinear");
        des.set_meta("params", "p=" + std::to_string(p) + ",d=" + std::to_string(d) + ",i=" + std::to_string(sg.i) +
                                   ",y=" + std::to_string(sg.y) + ",j=" + std::to_string(sg.j));
        des.set_meta("field", ctx.f.descriptor());
        des.set_meta("expect", params.tuple());
        des.set_meta("claims", "2-design,coprime,flag-transitive,primitive");
        report.hits.push_back({sg, std::move(des), params, fp});
      };
      // with singleton orbits every block has a translate through 0
      const std::size_t a_end = c.size() == 1 ? 1 : m;
      for (std::size_t a = 0; a < a_end && !report.truncated; ++a) {
        const std::size_t ka = orbs[a].size();
        if (ka > k_hi) continue;
        evaluate({a});
        for (std::size_t b2 = a + 1; b2 < m && !report.truncated; ++b2) {
          const std::size_t kb = ka + orbs[b2].size();
          if (kb > k_hi) continue;
          evaluate({a, b2});
          for (std::size_t c3 = b2 + 1; c3 < m && !report.truncated; ++c3)
            if (kb + orbs[c3].size() <= k_hi) evaluate({a, b2, c3});
        }
      }
    }
  }
  std::sort(report.hits.begin(), report.hits.end(), [](const SearchHit& x, const SearchHit& y) {
    return std::tuple(x.params.k, x.params.lambda, x.subgroup.i, x.subgroup.y, x.subgroup.j, x.fingerprint) <
           std::tuple(y.params.k, y.params.lambda, y.subgroup.i, y.subgroup.y, y.subgroup.j, y.fingerprint);
  });
  return report;
}

}  // namespace ftd
