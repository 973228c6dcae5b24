#pragma once

// Incidence structures with an optional automorphism group, and the
// verifiers run on them: parameters, flag-transitivity, complements,
// invariant fingerprints and the Dembowski consistency report.

#include "algebra.hpp"
#include "permgroup.hpp"

#include <map>
#include <optional>

namespace ftd {

using Block = std::vector<Point>;

struct DesignParams {
  std::uint64_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
  bool is_2design = false;
  bool coprime = false;
  bool symmetric = false;
  std::string defect;  // why is_2design is false

  std::string tuple() const {
    return std::to_string(v) + "," + std::to_string(b) + "," + std::to_string(r) + "," + std::to_string(k) + "," +
           std::to_string(lambda);
  }
  bool same_numbers(const DesignParams& o) const {
    return v == o.v && b == o.b && r == o.r && k == o.k && lambda == o.lambda;
  }
};

struct Flag {
  Point point;
  std::uint32_t block;
};

inline DesignParams make_params(std::uint64_t v, std::uint64_t b, std::uint64_t r, std::uint64_t k,
                                std::uint64_t lambda) {
  DesignParams p{v, b, r, k, lambda, true, std::gcd(r, lambda) == 1, v == b, {}};
  if (b * k != v * r || lambda * (v - 1) != r * (k - 1)) {
    p.is_2design = false;
    p.defect = "parameters violate bk=vr or lambda(v-1)=r(k-1)";
  }
  return p;
}

/// First generator index that maps some block outside the list, if any.
inline std::optional<std::size_t> closure_failure(const PermGroup& g, const std::vector<Block>& sorted_blocks) {
  std::unordered_map<Block, std::uint32_t, PointVecHash> index;
  for (std::size_t i = 0; i < sorted_blocks.size(); ++i) index.emplace(sorted_blocks[i], static_cast<std::uint32_t>(i));
  for (std::size_t s = 0; s < g.generators().size(); ++s)
    for (const auto& blk : sorted_blocks)
      if (!index.count(set_image(g.generators()[s], blk))) return s;
  return std::nullopt;
}

class IncidenceDesign {
 public:
  /// Blocks are sorted and the list put in lexicographic order. Repeated
  /// points, repeated blocks, out-of-range points and a group that does not
  /// preserve the block set are rejected.
  IncidenceDesign(std::size_t v, std::vector<Block> blocks, std::optional<PermGroup> group = std::nullopt,
                  std::map<std::string, std::string> meta = {})
      : v_(v), blocks_(std::move(blocks)), group_(std::move(group)), meta_(std::move(meta)) {
    if (v == 0) throw std::invalid_argument("design needs at least one point");
    for (auto& blk : blocks_) {
      std::sort(blk.begin(), blk.end());
      if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
        throw std::invalid_argument("block repeats a point");
      if (!blk.empty() && blk.back() >= v) throw std::invalid_argument("block point out of range");
    }
    std::sort(blocks_.begin(), blocks_.end());
    if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
      throw std::invalid_argument("repeated block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) index_.emplace(blocks_[i], static_cast<std::uint32_t>(i));
    if (group_) {
      if (group_->degree() != v) throw std::invalid_argument("group degree differs from point count");
      if (auto s = closure_failure(*group_, blocks_))
        throw std::invalid_argument("group generator " + std::to_string(*s) + " does not preserve the blocks");
    }
  }

  std::size_t v() const { return v_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  bool has_group() const { return group_.has_value(); }
  const PermGroup& group() const {
    if (!group_) throw std::invalid_argument("design has no group attached");
    return *group_;
  }
  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(const std::string& key, const std::string& value) { meta_[key] = value; }

  std::optional<std::uint32_t> block_index(const Block& sorted) const {
    auto it = index_.find(sorted);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Action of each group generator on block indices.
  std::vector<Permutation> block_permutations() const {
    std::vector<Permutation> out;
    for (const auto& g : group().generators()) {
      std::vector<Point> images(blocks_.size());
      for (std::size_t i = 0; i < blocks_.size(); ++i) images[i] = index_.at(set_image(g, blocks_[i]));
      out.push_back(Permutation::unchecked(std::move(images)));
    }
    return out;
  }

  friend bool operator==(const IncidenceDesign& a, const IncidenceDesign& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_;
  std::vector<Block> blocks_;
  std::optional<PermGroup> group_;
  std::map<std::string, std::string> meta_;
  std::unordered_map<Block, std::uint32_t, PointVecHash> index_;
};

inline constexpr std::size_t kMaxPairCountDegree = 4096;

inline DesignParams compute_params(const IncidenceDesign& d) {
  DesignParams p;
  p.v = d.v();
  p.b = d.b();
  p.symmetric = p.v == p.b;
  if (d.b() == 0) {
    p.defect = "no blocks";
    return p;
  }
  if (d.v() > kMaxPairCountDegree) throw std::length_error("pair counting limited to v <= 4096");
  p.k = d.block(0).size();
  for (const auto& blk : d.blocks())
    if (blk.size() != p.k) {
      p.defect = "block sizes vary";
      return p;
    }
  std::vector<std::uint64_t> deg(d.v(), 0);
  for (const auto& blk : d.blocks())
    for (Point x : blk) ++deg[x];
  p.r = deg[0];
  for (auto r : deg)
    if (r != p.r) {
      p.defect = "replication numbers vary";
      return p;
    }
  const std::size_t v = d.v();
  std::vector<std::uint32_t> pairs(v * (v - 1) / 2, 0);
  auto slot = [v](std::size_t a, std::size_t b) { return a * (2 * v - a - 1) / 2 + (b - a - 1); };
  for (const auto& blk : d.blocks())
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++pairs[slot(blk[i], blk[j])];
  if (v >= 2) {
    const auto [lo, hi] = std::minmax_element(pairs.begin(), pairs.end());
    if (*lo != *hi) {
      p.defect = "pair counts vary between " + std::to_string(*lo) + " and " + std::to_string(*hi);
      return p;
    }
    p.lambda = *lo;
  }
  p.is_2design = true;
  p.coprime = std::gcd(p.r, p.lambda) == 1;
  if (p.b * p.k != p.v * p.r || p.lambda * (p.v - 1) != p.r * (p.k - 1))
    throw std::logic_error("counted parameters violate the design identities");
  return p;
}

struct TransitivityReport {
  bool point_transitive = false;
  bool block_transitive = false;
  bool flag_transitive = false;
  std::uint64_t flag_orbit = 0;
  std::uint64_t flags = 0;
};

/// Orbit of the flag (first point of block 0, block 0) under the group.
inline TransitivityReport analyze_transitivity(const IncidenceDesign& d) {
  const PermGroup& g = d.group();
  TransitivityReport rep;
  rep.point_transitive = is_transitive(g);
  if (d.b() == 0) return rep;
  const auto bperms = d.block_permutations();
  {
    std::vector<char> seen(d.b(), 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& s : bperms) {
        const auto y = s(queue[h]);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    rep.block_transitive = queue.size() == d.b();
  }
  std::vector<std::uint64_t> offset(d.b() + 1, 0);
  for (std::size_t i = 0; i < d.b(); ++i) offset[i + 1] = offset[i] + d.block(i).size();
  rep.flags = offset.back();
  std::vector<char> seen(rep.flags, 0);
  std::vector<std::uint64_t> queue{0};
  seen[0] = 1;
  std::vector<std::uint32_t> owner(rep.flags);
  for (std::size_t i = 0; i < d.b(); ++i)
    for (auto f = offset[i]; f < offset[i + 1]; ++f) owner[f] = static_cast<std::uint32_t>(i);
  const auto& gens = g.generators();
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto f = queue[h];
    const auto bi = owner[f];
    const Point x = d.block(bi)[f - offset[bi]];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto bj = bperms[s](bi);
      const Block& img = d.block(bj);
      const auto pos = std::lower_bound(img.begin(), img.end(), gens[s](x)) - img.begin();
      const auto nf = offset[bj] + static_cast<std::uint64_t>(pos);
      if (!seen[nf]) {
        seen[nf] = 1;
        queue.push_back(nf);
      }
    }
  }
  rep.flag_orbit = queue.size();
  rep.flag_transitive = rep.flag_orbit == rep.flags;
  return rep;
}

inline bool is_flag_transitive(const IncidenceDesign& d) { return analyze_transitivity(d).flag_transitive; }

inline IncidenceDesign complement(const IncidenceDesign& d) {
  const auto p = compute_params(d);
  if (!p.is_2design) throw std::invalid_argument("complement needs a 2-design");
  if (p.k + 1 >= p.v) throw std::invalid_argument("complement needs k < v-1");
  std::vector<Block> out;
  out.reserve(d.b());
  for (const auto& blk : d.blocks()) {
    Block c;
    std::size_t j = 0;
    for (Point x = 0; x < d.v(); ++x) {
      if (j < blk.size() && blk[j] == x) {
        ++j;
        continue;
      }
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  std::optional<PermGroup> g;
  if (d.has_group()) g = d.group();
  return IncidenceDesign(d.v(), std::move(out), std::move(g), d.meta());
}

/// Blocks = setwise orbit of the base block.
inline IncidenceDesign orbit_design(std::size_t v, const PermGroup& g, Block base,
                                    std::map<std::string, std::string> meta = {}) {
  if (g.degree() != v) throw std::invalid_argument("group degree differs from point count");
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty() || base.size() >= v) throw std::invalid_argument("base block must be nonempty and proper");
  return IncidenceDesign(v, orbit_of_set(g, std::move(base)), g, std::move(meta));
}

struct Fingerprint {
  std::uint64_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> intersections;  // size -> number of block pairs
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> profiles;  // sorted per-point histograms
  bool configurations_counted = false;
  std::uint64_t hash = 0;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.v == b.v && a.b == b.b && a.r == b.r && a.k == b.k && a.lambda == b.lambda &&
           a.intersections == b.intersections && a.profiles == b.profiles &&
           a.configurations_counted == b.configurations_counted;
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i) s[15 - i] = digits[(hash >> (4 * i)) & 15];
    return s;
  }
};

inline constexpr std::uint64_t kFingerprintWork = 400'000'000;

/// Relabeling-invariant summary: parameters, the histogram of block
/// intersection sizes, and per point x a histogram that, for every pair of
/// intersecting blocks B1, B2 missing x, records how many blocks through x
/// meet both B1\B2 and B2\B1. The per-point part is only computed when
/// v*b*b*r*k stays under a fixed budget, so the choice depends on parameters only.
inline Fingerprint invariant_fingerprint(const IncidenceDesign& d) {
  Fingerprint fp;
  const auto p = compute_params(d);
  fp.v = p.v;
  fp.b = p.b;
  fp.r = p.r;
  fp.k = p.k;
  fp.lambda = p.lambda;
  const std::size_t v = d.v(), b = d.b();
  std::vector<std::vector<std::uint32_t>> through(v);
  for (std::size_t i = 0; i < b; ++i)
    for (Point x : d.block(i)) through[x].push_back(static_cast<std::uint32_t>(i));
  if (p.b * p.k * p.r > kFingerprintWork) throw std::length_error("design too large for a fingerprint");

  std::map<std::uint32_t, std::uint64_t> inter;
  std::vector<std::uint32_t> meet(b, 0);
  const bool profiles = static_cast<unsigned __int128>(p.v) * p.b * p.b * p.r * p.k <= kFingerprintWork;
  std::vector<std::uint8_t> meets(profiles ? b * b : 0, 0);
  for (std::size_t i = 0; i < b; ++i) {
    std::fill(meet.begin(), meet.end(), 0);
    for (Point x : d.block(i))
      for (auto j : through[x]) ++meet[j];
    for (std::size_t j = i + 1; j < b; ++j) ++inter[meet[j]];
    if (profiles)
      for (std::size_t j = 0; j < b; ++j) meets[i * b + j] = meet[j] > 0;
  }
  fp.intersections.assign(inter.begin(), inter.end());

  if (profiles) {
    fp.configurations_counted = true;
    std::vector<char> on(b);
    for (Point x = 0; x < v; ++x) {
      std::fill(on.begin(), on.end(), 0);
      for (auto j : through[x]) on[j] = 1;
      std::map<std::uint32_t, std::uint64_t> hist;
      for (std::size_t b1 = 0; b1 < b; ++b1) {
        if (on[b1]) continue;
        for (std::size_t b2 = b1 + 1; b2 < b; ++b2) {
          if (on[b2] || !meets[b1 * b + b2]) continue;
          std::uint32_t m = 0;
          const Block& B1 = d.block(b1);
          const Block& B2 = d.block(b2);
          for (auto c : through[x]) {
            const Block& C = d.block(c);
            bool m1 = false, m2 = false;
            for (Point y : C) {
              const bool in1 = std::binary_search(B1.begin(), B1.end(), y);
              const bool in2 = std::binary_search(B2.begin(), B2.end(), y);
              m1 |= in1 && !in2;
              m2 |= in2 && !in1;
            }
            m += m1 && m2;
          }
          ++hist[m];
        }
      }
      fp.profiles.emplace_back(hist.begin(), hist.end());
    }
    std::sort(fp.profiles.begin(), fp.profiles.end());
  }

  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : {fp.v, fp.b, fp.r, fp.k, fp.lambda}) h = detail::fnv1a(h, x);
  for (auto [s, c] : fp.intersections) h = detail::fnv1a(detail::fnv1a(h, s), c);
  h = detail::fnv1a(h, fp.configurations_counted);
  for (const auto& prof : fp.profiles) {
    h = detail::fnv1a(h, prof.size());
    for (auto [m, c] : prof) h = detail::fnv1a(detail::fnv1a(h, m), c);
  }
  fp.hash = h;
  return fp;
}

struct DembowskiReport {
  DesignParams params;
  bool block_closed = false;
  bool point_transitive = false;
  bool block_transitive = false;
  bool flag_transitive = false;
  bool two_transitive = false;
  bool primitive = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Evaluates every predicate and the implications
///   flag-transitive and gcd(r,lambda)=1  =>  point-primitive,
///   2-transitive and gcd(r,lambda)=1 and block-closed  =>  flag-transitive,
///   flag-transitive  =>  point- and block-transitive.
inline DembowskiReport check_dembowski_implications(const IncidenceDesign& d) {
  DembowskiReport rep;
  rep.params = compute_params(d);
  rep.block_closed = !closure_failure(d.group(), d.blocks()).has_value();
  const auto tr = analyze_transitivity(d);
  rep.point_transitive = tr.point_transitive;
  rep.block_transitive = tr.block_transitive;
  rep.flag_transitive = tr.flag_transitive;
  rep.two_transitive = is_two_transitive(d.group());
  rep.primitive = rep.point_transitive && is_primitive(d.group());
  const bool coprime = rep.params.is_2design && rep.params.coprime;
  if (rep.flag_transitive && coprime && !rep.primitive)
    rep.violations.push_back("flag-transitive with gcd(r,lambda)=1 but not point-primitive");
  if (rep.two_transitive && coprime && rep.block_closed && !rep.flag_transitive)
    rep.violations.push_back("2-transitive with gcd(r,lambda)=1 but not flag-transitive");
  if (rep.flag_transitive && !(rep.point_transitive && rep.block_transitive))
    rep.violations.push_back("flag-transitive but not point- and block-transitive");
  if (rep.two_transitive && !rep.primitive) rep.violations.push_back("2-transitive but not primitive");
  return rep;
}

}  // namespace ftd
