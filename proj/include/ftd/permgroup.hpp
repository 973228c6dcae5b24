#pragma once

// Permutation groups on {0, ..., n-1}: orbits, a deterministic stabilizer
// chain (Schreier-Sims with natural-order base), stabilizers, transitivity
// degree and primitivity.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ftd {

using Point = std::uint32_t;

struct PointVecHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Point x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

class Permutation {
 public:
  Permutation() = default;

  /// images[i] is the image of i; must be a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw std::invalid_argument("image list is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return unchecked(std::move(inv));
  }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const {
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next.images_[images_[i]];
    return unchecked(std::move(out));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
  }

 private:
  std::vector<Point> images_;
};

/// Sorted image of a point set.
inline std::vector<Point> set_image(const Permutation& g, const std::vector<Point>& set) {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point x : set) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Permutation>& gens, std::vector<Point> base_prefix = {})
      : n_(degree) {
    std::vector<Permutation> strong;
    for (const auto& g : gens) {
      if (g.degree() != n_) throw std::invalid_argument("generator degree mismatch");
      if (!g.is_identity()) strong.push_back(g);
    }
    for (Point b : base_prefix) {
      if (b >= n_) throw std::out_of_range("base point out of range");
      if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
    }
    for (const auto& g : strong) {
      if (fixes_base(g, base_.size())) base_.push_back(first_moved(g));
    }
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
      levels_[i].base = base_[i];
      for (const auto& g : strong)
        if (fixes_base(g, i)) add_gen(i, g);
      rebuild_orbit(i);
    }
    run();
  }

  std::size_t degree() const { return n_; }
  std::size_t depth() const { return levels_.size(); }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_.at(level).orbit; }

  /// Strong generators of the pointwise stabilizer of the first `level` base
  /// points. An empty list means the trivial group.
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    static const std::vector<Permutation> none;
    return level < levels_.size() ? levels_[level].gens : none;
  }

  std::uint64_t order() const {
    unsigned __int128 r = 1;
    for (const auto& l : levels_) {
      r *= l.orbit.size();
      if (r > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != n_) return false;
    auto [h, j] = strip(g, 0);
    return j == levels_.size() && h.is_identity();
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens, inv;
    std::vector<std::int32_t> via;  // -2 root, -1 absent, else generator index
    std::vector<Point> orbit;
    std::vector<Permutation> reps, inv_reps;  // explicit transversal when small enough
    std::vector<std::int32_t> pos;            // point -> index in orbit, with reps
  };

  static constexpr std::size_t kExplicitTransversalLimit = std::size_t{1} << 22;

  bool fixes_base(const Permutation& g, std::size_t upto) const {
    for (std::size_t i = 0; i < upto; ++i)
      if (g(base_[i]) != base_[i]) return false;
    return true;
  }

  static Point first_moved(const Permutation& g) {
    for (Point i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    throw std::logic_error("identity has no moved point");
  }

  void add_gen(std::size_t level, const Permutation& g) {
    levels_[level].gens.push_back(g);
    levels_[level].inv.push_back(g.inverse());
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.via.assign(n_, -1);
    l.orbit.clear();
    l.reps.clear();
    l.inv_reps.clear();
    l.via[l.base] = -2;
    l.orbit.push_back(l.base);
    for (std::size_t head = 0; head < l.orbit.size(); ++head) {
      const Point x = l.orbit[head];
      for (std::size_t s = 0; s < l.gens.size(); ++s) {
        const Point y = l.gens[s](x);
        if (l.via[y] == -1) {
          l.via[y] = static_cast<std::int32_t>(s);
          l.orbit.push_back(y);
        }
      }
    }
    if (l.orbit.size() * n_ <= kExplicitTransversalLimit) {
      // orbit order is BFS order, so each parent's representative is ready
      std::vector<std::int32_t> pos(n_, -1);
      l.reps.reserve(l.orbit.size());
      for (std::size_t k = 0; k < l.orbit.size(); ++k) {
        const Point x = l.orbit[k];
        pos[x] = static_cast<std::int32_t>(k);
        if (l.via[x] == -2) {
          l.reps.push_back(Permutation::identity(n_));
        } else {
          const auto s = static_cast<std::size_t>(l.via[x]);
          const Point parent = l.inv[s](x);
          l.reps.push_back(l.reps[static_cast<std::size_t>(pos[parent])].then(l.gens[s]));
        }
      }
      for (const auto& r : l.reps) l.inv_reps.push_back(r.inverse());
      l.pos = std::move(pos);
    } else {
      l.pos.clear();
    }
  }

  // representative u with u(base) = x
  Permutation rep(std::size_t i, Point x) const {
    const Level& l = levels_[i];
    if (!l.reps.empty()) return l.reps[static_cast<std::size_t>(l.pos[x])];
    std::vector<std::size_t> path;
    while (l.via[x] != -2) {
      const auto s = static_cast<std::size_t>(l.via[x]);
      path.push_back(s);
      x = l.inv[s](x);
    }
    Permutation u = Permutation::identity(n_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u.then(l.gens[*it]);
    return u;
  }

  // h * rep(x)^{-1}
  Permutation times_rep_inverse(std::size_t i, Permutation h, Point x) const {
    const Level& l = levels_[i];
    if (!l.inv_reps.empty()) return h.then(l.inv_reps[static_cast<std::size_t>(l.pos[x])]);
    while (l.via[x] != -2) {
      const auto s = static_cast<std::size_t>(l.via[x]);
      h = h.then(l.inv[s]);
      x = l.inv[s](x);
    }
    return h;
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Point x = h(levels_[i].base);
      if (levels_[i].via[x] == -1) return {std::move(h), i};
      h = times_rep_inverse(i, std::move(h), x);
    }
    return {std::move(h), levels_.size()};
  }

  void run() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      const auto ui = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t oi = 0; oi < levels_[ui].orbit.size() && !extended; ++oi) {
        const Point beta = levels_[ui].orbit[oi];
        for (std::size_t s = 0; s < levels_[ui].gens.size(); ++s) {
          const Permutation& g = levels_[ui].gens[s];
          const Point image = g(beta);
          Permutation schreier = times_rep_inverse(ui, rep(ui, beta).then(g), image);
          if (schreier.is_identity()) continue;
          auto [h, j] = strip(std::move(schreier), ui + 1);
          if (j < levels_.size() || !h.is_identity()) {
            if (j == levels_.size()) {
              const Point b = first_moved(h);
              base_.push_back(b);
              levels_.emplace_back();
              levels_.back().base = b;
            }
            for (std::size_t l = ui + 1; l <= j; ++l) {
              add_gen(l, h);
              rebuild_orbit(l);
            }
            i = static_cast<std::ptrdiff_t>(j);
            extended = true;
            break;
          }
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t n_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  static constexpr std::size_t kMaxDegree = 100000;

  PermGroup(std::size_t degree, std::vector<Permutation> gens) : degree_(degree), gens_(std::move(gens)) {
    if (degree == 0) throw std::invalid_argument("group degree must be positive");
    if (degree > kMaxDegree) throw std::length_error("group degree exceeds " + std::to_string(kMaxDegree));
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("all generators must have the group's degree");
    if (gens_.empty()) gens_.push_back(Permutation::identity(degree_));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Stabilizer chain with base 0, 1, 2, ... (points not moved are skipped).
  /// Built on first use; safe to call from several threads.
  const StabChain& chain() const {
    std::call_once(cache_->once, [this] { cache_->chain = std::make_unique<StabChain>(degree_, gens_); });
    return *cache_->chain;
  }

  std::uint64_t order() const { return chain().order(); }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<StabChain> chain;
  };
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline void check_point(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw std::out_of_range("point " + std::to_string(x) + " out of range");
}

/// Breadth-first orbit, in first-discovery order.
inline std::vector<Point> orbit(const PermGroup& g, Point seed) {
  check_point(g, seed);
  std::vector<char> seen(g.degree(), 0);
  std::vector<Point> out{seed};
  seen[seed] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& s : g.generators()) {
      const Point y = s(out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

namespace detail {
template <typename ImageFn>
std::vector<std::vector<Point>> structured_orbit(const PermGroup& g, std::vector<Point> seed, ImageFn image) {
  for (Point x : seed) check_point(g, x);
  std::unordered_map<std::vector<Point>, std::size_t, PointVecHash> seen;
  std::vector<std::vector<Point>> out{seed};
  seen.emplace(std::move(seed), 0);
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& s : g.generators()) {
      auto y = image(s, out[head]);
      if (seen.emplace(y, out.size()).second) out.push_back(std::move(y));
    }
  return out;
}

inline std::vector<Point> tuple_image(const Permutation& s, const std::vector<Point>& t) {
  std::vector<Point> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = s(t[i]);
  return out;
}
}  // namespace detail

/// Orbit of an ordered tuple under the componentwise action.
inline std::vector<std::vector<Point>> orbit_of_tuple(const PermGroup& g, std::vector<Point> seed) {
  return detail::structured_orbit(g, std::move(seed), detail::tuple_image);
}

/// Orbit of a point set under the setwise action; every member is sorted.
inline std::vector<std::vector<Point>> orbit_of_set(const PermGroup& g, std::vector<Point> seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return detail::structured_orbit(g, std::move(seed), set_image);
}

/// All orbits, each in discovery order, listed by smallest member.
inline std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (Point y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

inline std::uint64_t group_order(const PermGroup& g) { return g.order(); }

inline PermGroup point_stabilizer(const PermGroup& g, Point pt) {
  check_point(g, pt);
  StabChain chain(g.degree(), g.generators(), {pt});
  std::vector<Permutation> gens = chain.strong_generators(1);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return PermGroup(g.degree(), std::move(gens));
}

inline bool is_transitive(const PermGroup& g) { return orbit(g, 0).size() == g.degree(); }

/// Transitive on ordered pairs of distinct points.
inline bool is_two_transitive(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n < 2) return true;
  if (!is_transitive(g)) return false;
  if (n <= 8192) {
    std::vector<bool> seen(n * n, false);
    std::vector<std::uint64_t> queue{1};
    seen[1] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point a = static_cast<Point>(queue[head] / n), b = static_cast<Point>(queue[head] % n);
      for (const auto& s : g.generators()) {
        const std::uint64_t key = std::uint64_t{s(a)} * n + s(b);
        if (!seen[key]) {
          seen[key] = true;
          queue.push_back(key);
        }
      }
    }
    return queue.size() == n * (n - 1);
  }
  const PermGroup stab = point_stabilizer(g, 0);
  return orbit(stab, 1).size() == n - 1;
}

/// Smallest block of imprimitivity containing a and b; returns the block
/// through a, sorted.
inline std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b) {
  check_point(g, a);
  check_point(g, b);
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto merge = [&](Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  merge(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (const auto& s : g.generators()) merge(s(x), s(y));
  }
  std::vector<Point> block;
  const Point ra = find(a);
  for (Point x = 0; x < n; ++x)
    if (find(x) == ra) block.push_back(x);
  return block;
}

/// Primitivity via minimal block systems; requires a transitive group.
inline bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("primitivity is only defined for transitive groups");
  const std::size_t n = g.degree();
  for (Point b = 1; b < n; ++b)
    if (minimal_block(g, 0, b).size() != n) return false;
  return true;
}

enum class Action { setwise, tuple };

/// Action on a list of subsets (setwise) or tuples. Generator order is kept.
inline PermGroup induced_action(const PermGroup& g, const std::vector<std::vector<Point>>& domain,
                                Action kind = Action::setwise) {
  if (domain.empty()) throw std::invalid_argument("empty domain");
  std::unordered_map<std::vector<Point>, Point, PointVecHash> index;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto key = domain[i];
    for (Point x : key) check_point(g, x);
    if (kind == Action::setwise) std::sort(key.begin(), key.end());
    if (!index.emplace(std::move(key), static_cast<Point>(i)).second)
      throw std::invalid_argument("domain contains a repeated element");
  }
  std::vector<Permutation> gens;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const auto& gen = g.generators()[s];
    std::vector<Point> images(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto img = kind == Action::setwise ? set_image(gen, domain[i]) : detail::tuple_image(gen, domain[i]);
      auto it = index.find(img);
      if (it == index.end())
        throw std::invalid_argument("domain is not closed under generator " + std::to_string(s));
      images[i] = it->second;
    }
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  return PermGroup(domain.size(), std::move(gens));
}

}  // namespace ftd
