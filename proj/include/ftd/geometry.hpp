#pragma once

// Vector spaces and projective spaces over GF(q): coordinates, subspaces,
// spreads, classical generators, the Hermitian plane and the Suzuki-Tits ovoid.

#include "algebra.hpp"
#include "permgroup.hpp"

#include <unordered_map>

namespace ftd {

/// Coordinate vector; entries are field element codes.
using Vec = std::vector<std::uint32_t>;

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> a_;
};

inline Vec mat_vec(const FiniteField& f, const Matrix& m, const Vec& x) {
  Vec y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s = f.add_code(s, f.mul_code(m(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

inline Matrix mat_mul(const FiniteField& f, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = f.add_code(s, f.mul_code(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

inline Vec frobenius_vec(const FiniteField& f, Vec x, unsigned e) {
  if (e == 0) return x;
  for (auto& c : x) c = f.frobenius_code(c, e);
  return x;
}

/// Row-reduced echelon form; zero rows dropped.
inline std::vector<Vec> rref(const FiniteField& f, std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint32_t inv = f.inv(f.element(rows[r][c])).code();
    for (auto& x : rows[r]) x = f.mul_code(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t factor = f.neg_code(rows[i][c]);
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.add_code(rows[i][j], f.mul_code(factor, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline std::size_t rank(const FiniteField& f, std::vector<Vec> rows) { return rref(f, std::move(rows)).size(); }

inline std::uint32_t determinant(const FiniteField& f, Matrix m) {
  const std::size_t n = m.size();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = f.neg_code(det);
    }
    det = f.mul_code(det, m(c, c));
    const std::uint32_t inv = f.inv(f.element(m(c, c))).code();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint32_t factor = f.neg_code(f.mul_code(m(i, c), inv));
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.add_code(m(i, j), f.mul_code(factor, m(c, j)));
    }
  }
  return det;
}

/// x -> M * x^(p^frob)
struct SemilinearMap {
  Matrix matrix;
  unsigned frob = 0;

  Vec apply(const FiniteField& f, const Vec& x) const { return mat_vec(f, matrix, frobenius_vec(f, x, frob)); }
};

/// Scale so that the first nonzero coordinate is 1.
inline Vec normalize(const FiniteField& f, Vec x) {
  auto it = std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
  if (it == x.end()) throw std::invalid_argument("zero vector has no projective point");
  const std::uint32_t inv = f.inv(f.element(*it)).code();
  for (auto& c : x) c = f.mul_code(c, inv);
  return x;
}

/// Base-q integer with coords[0] most significant; the canonical point order.
inline std::uint64_t projective_code(const FiniteField& f, const Vec& x) {
  std::uint64_t code = 0;
  for (auto c : x) code = code * f.order() + c;
  return code;
}

class ProjectiveSpace {
 public:
  /// PG(n-1, q): the 1-spaces of V_n(q).
  ProjectiveSpace(unsigned n, FiniteField f) : n_(n), f_(std::move(f)) {
    if (n < 2) throw std::invalid_argument("projective space needs n >= 2");
    const std::uint64_t q = f_.order();
    const std::uint64_t count = (ipow(q, n) - 1) / (q - 1);
    if (count > PermGroup::kMaxDegree) throw std::length_error("projective space too large");
    for (unsigned lead = 0; lead < n; ++lead) {
      const std::uint64_t tails = ipow(q, n - 1 - lead);
      for (std::uint64_t t = 0; t < tails; ++t) {
        Vec x(n, 0);
        x[lead] = 1;
        std::uint64_t rest = t;
        for (unsigned j = n; j-- > lead + 1;) {
          x[j] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
        }
        points_.push_back(std::move(x));
      }
    }
    std::sort(points_.begin(), points_.end(),
              [&](const Vec& a, const Vec& b) { return projective_code(f_, a) < projective_code(f_, b); });
    for (std::size_t i = 0; i < points_.size(); ++i)
      index_.emplace(projective_code(f_, points_[i]), static_cast<Point>(i));
  }

  unsigned dim() const { return n_; }
  const FiniteField& field() const { return f_; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(Point i) const { return points_.at(i); }
  const std::vector<Vec>& points() const { return points_; }

  Point index_of(const Vec& x) const {
    if (x.size() != n_) throw std::invalid_argument("coordinate vector has wrong length");
    return index_.at(projective_code(f_, normalize(f_, x)));
  }

  /// Hyperplanes in the order of their dual points.
  std::vector<std::vector<Point>> hyperplanes() const {
    std::vector<std::vector<Point>> out;
    out.reserve(points_.size());
    for (const auto& a : points_) {
      std::vector<Point> h;
      for (std::size_t i = 0; i < points_.size(); ++i)
        if (dot(a, points_[i]) == 0) h.push_back(static_cast<Point>(i));
      out.push_back(std::move(h));
    }
    return out;
  }

  /// Sorted indices of the points of the span of the given vectors.
  std::vector<Point> span_points(const std::vector<Vec>& gens) const {
    const auto basis = rref(f_, gens);
    std::vector<Point> out;
    const std::uint64_t q = f_.order();
    const std::uint64_t combos = ipow(q, static_cast<unsigned>(basis.size()));
    for (std::uint64_t c = 1; c < combos; ++c) {
      Vec x(n_, 0);
      std::uint64_t rest = c;
      for (const auto& row : basis) {
        const auto coef = static_cast<std::uint32_t>(rest % q);
        rest /= q;
        if (!coef) continue;
        for (unsigned j = 0; j < n_; ++j) x[j] = f_.add_code(x[j], f_.mul_code(coef, row[j]));
      }
      out.push_back(index_.at(projective_code(f_, normalize(f_, x))));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Point> line_through(Point a, Point b) const {
    if (a == b) throw std::invalid_argument("a line needs two distinct points");
    return span_points({point(a), point(b)});
  }

  Permutation permutation(const SemilinearMap& m) const {
    std::vector<Point> images(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) images[i] = index_of(m.apply(f_, points_[i]));
    return Permutation(std::move(images));
  }

  PermGroup group(const std::vector<SemilinearMap>& maps) const {
    std::vector<Permutation> gens;
    for (const auto& m : maps) gens.push_back(permutation(m));
    return PermGroup(points_.size(), std::move(gens));
  }

  std::uint32_t dot(const Vec& a, const Vec& b) const {
    std::uint32_t s = 0;
    for (unsigned j = 0; j < n_; ++j) s = f_.add_code(s, f_.mul_code(a[j], b[j]));
    return s;
  }

 private:
  unsigned n_;
  FiniteField f_;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, Point> index_;
};

inline std::vector<Vec> proj_points(unsigned n, const FiniteField& f) { return ProjectiveSpace(n, f).points(); }

inline std::vector<std::vector<Point>> hyperplanes(unsigned n, const FiniteField& f) {
  if (n < 3) throw std::invalid_argument("hyperplane designs need n >= 3");
  return ProjectiveSpace(n, f).hyperplanes();
}

/// V_n(q) with vectors indexed by sum code(x_i) q^i.
class VectorSpace {
 public:
  VectorSpace(unsigned n, FiniteField f) : n_(n), f_(std::move(f)) {
    const std::uint64_t size = ipow(f_.order(), n);
    if (size > PermGroup::kMaxDegree) throw std::length_error("vector space too large");
    size_ = static_cast<std::size_t>(size);
  }

  unsigned dim() const { return n_; }
  const FiniteField& field() const { return f_; }
  std::size_t size() const { return size_; }

  Point index(const Vec& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * f_.order() + x[i];
    return static_cast<Point>(idx);
  }

  Vec vector(Point idx) const {
    Vec x(n_);
    for (unsigned i = 0; i < n_; ++i) {
      x[i] = static_cast<std::uint32_t>(idx % f_.order());
      idx /= static_cast<Point>(f_.order());
    }
    return x;
  }

  Vec add(const Vec& a, const Vec& b) const {
    Vec c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = f_.add_code(a[i], b[i]);
    return c;
  }

  Permutation translation(const Vec& t) const {
    std::vector<Point> images(size_);
    for (Point i = 0; i < size_; ++i) images[i] = index(add(vector(i), t));
    return Permutation(std::move(images));
  }

  Permutation permutation(const SemilinearMap& m) const {
    std::vector<Point> images(size_);
    for (Point i = 0; i < size_; ++i) images[i] = index(m.apply(f_, vector(i)));
    return Permutation(std::move(images));
  }

  /// Translations by e_i * x^k for every coordinate i and GF(p)-basis element x^k.
  std::vector<Permutation> translation_generators() const {
    std::vector<Permutation> out;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned k = 0; k < f_.degree(); ++k) {
        Vec t(n_, 0);
        t[i] = static_cast<std::uint32_t>(ipow(f_.characteristic(), k));
        out.push_back(translation(t));
      }
    return out;
  }

 private:
  unsigned n_;
  FiniteField f_;
  std::size_t size_;
};

class Subspace {
 public:
  static Subspace span(const FiniteField& f, unsigned n, const std::vector<Vec>& gens) {
    for (const auto& g : gens)
      if (g.size() != n) throw std::invalid_argument("generator has wrong length");
    return Subspace(f, n, rref(f, gens));
  }

  unsigned ambient_dim() const { return n_; }
  const FiniteField& field() const { return f_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& x) const {
    auto rows = basis_;
    rows.push_back(x);
    return rank(f_, std::move(rows)) == basis_.size();
  }

  /// All q^dim vectors, in combination order.
  std::vector<Vec> vectors() const {
    const std::uint64_t q = f_.order();
    const std::uint64_t count = ipow(q, static_cast<unsigned>(basis_.size()));
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec x(n_, 0);
      std::uint64_t rest = c;
      for (const auto& row : basis_) {
        const auto coef = static_cast<std::uint32_t>(rest % q);
        rest /= q;
        if (!coef) continue;
        for (unsigned j = 0; j < n_; ++j) x[j] = f_.add_code(x[j], f_.mul_code(coef, row[j]));
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  /// Sorted vector indices in V_n(q).
  std::vector<Point> indices() const {
    VectorSpace vs(n_, f_);
    std::vector<Point> out;
    for (const auto& x : vectors()) out.push_back(vs.index(x));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  Subspace(FiniteField f, unsigned n, std::vector<Vec> basis) : f_(std::move(f)), n_(n), basis_(std::move(basis)) {}
  FiniteField f_;
  unsigned n_;
  std::vector<Vec> basis_;
};

class Spread {
 public:
  /// Validates equal dimensions and the partition of nonzero vectors.
  explicit Spread(std::vector<Subspace> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("empty spread");
    const auto& first = components_.front();
    VectorSpace vs(first.ambient_dim(), first.field());
    std::vector<char> hit(vs.size(), 0);
    for (const auto& c : components_) {
      if (c.dim() != first.dim()) throw std::invalid_argument("spread components differ in dimension");
      for (Point i : c.indices()) {
        if (i == 0) continue;
        if (hit[i]) throw std::invalid_argument("spread components overlap");
        hit[i] = 1;
      }
    }
    for (std::size_t i = 1; i < hit.size(); ++i)
      if (!hit[i]) throw std::invalid_argument("spread does not cover every nonzero vector");
  }

  const std::vector<Subspace>& components() const { return components_; }
  std::size_t component_dim() const { return components_.front().dim(); }

 private:
  std::vector<Subspace> components_;
};

/// The 1-spaces of V_{d/t}(p^t) read as t-dimensional GF(p)-subspaces of V_d(p).
inline Spread regular_spread(unsigned d, unsigned t, unsigned p) {
  if (t == 0 || d % t != 0) throw std::invalid_argument("spread dimension must divide d");
  const FiniteField big = make_field(p, t), prime = make_field(p, 1);
  const unsigned m = d / t;
  std::vector<Subspace> comps;
  auto flatten = [&](const Vec& y) {
    Vec out;
    for (auto c : y)
      for (int x : big.coeffs(big.element(c))) out.push_back(static_cast<std::uint32_t>(x));
    return out;
  };
  if (m == 1) {
    std::vector<Vec> gens;
    for (unsigned k = 0; k < t; ++k) gens.push_back(flatten({static_cast<std::uint32_t>(ipow(p, k))}));
    comps.push_back(Subspace::span(prime, d, gens));
    return Spread(std::move(comps));
  }
  for (const auto& pt : proj_points(m, big)) {
    std::vector<Vec> gens;
    for (unsigned k = 0; k < t; ++k) {
      const auto beta = static_cast<std::uint32_t>(ipow(p, k));
      Vec y(m);
      for (unsigned j = 0; j < m; ++j) y[j] = big.mul_code(beta, pt[j]);
      gens.push_back(flatten(y));
    }
    comps.push_back(Subspace::span(prime, d, gens));
  }
  return Spread(std::move(comps));
}

/// Additive cosets of W partitioning V_n(q), each as sorted vector indices.
inline std::vector<std::vector<Point>> affine_cosets(const Subspace& w) {
  VectorSpace vs(w.ambient_dim(), w.field());
  const auto members = w.vectors();
  std::vector<char> covered(vs.size(), 0);
  std::vector<std::vector<Point>> out;
  for (Point v = 0; v < vs.size(); ++v) {
    if (covered[v]) continue;
    const Vec base = vs.vector(v);
    std::vector<Point> coset;
    for (const auto& m : members) coset.push_back(vs.index(vs.add(base, m)));
    std::sort(coset.begin(), coset.end());
    for (Point x : coset) covered[x] = 1;
    out.push_back(std::move(coset));
  }
  return out;
}

/// Generators of SL_n(q): transvections I + a E_01 for a over a GF(p)-basis,
/// and a cyclic permutation of the basis with its sign fixed.
inline std::vector<Matrix> sl_generators(unsigned n, const FiniteField& f) {
  std::vector<Matrix> out;
  if (n < 2) return out;
  for (unsigned k = 0; k < f.degree(); ++k) {
    Matrix t = Matrix::identity(n);
    t(0, 1) = static_cast<std::uint32_t>(ipow(f.characteristic(), k));
    out.push_back(t);
  }
  Matrix c(n);
  for (unsigned i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
  if (n % 2 == 0) c(0, n - 1) = f.neg_code(1);
  out.push_back(c);
  return out;
}

/// SL_n(q) generators plus diag(w, 1, ..., 1) for a primitive w.
inline std::vector<Matrix> gl_generators(unsigned n, const FiniteField& f) {
  auto out = sl_generators(n, f);
  Matrix d = Matrix::identity(n);
  d(0, 0) = f.primitive_element().code();
  if (f.order() > 2) out.push_back(d);
  return out;
}

inline std::vector<SemilinearMap> as_linear_maps(const std::vector<Matrix>& ms) {
  std::vector<SemilinearMap> out;
  for (const auto& m : ms) out.push_back({m, 0});
  return out;
}

/// GL_n(q) generators and, for d > 1, the coordinatewise Frobenius.
inline std::vector<SemilinearMap> gammal_generators(unsigned n, const FiniteField& f) {
  auto out = as_linear_maps(gl_generators(n, f));
  if (f.degree() > 1) out.push_back({Matrix::identity(n), 1});
  return out;
}

/// V_3(q^2) with the form x0 y2^q + x1 y1^q + x2 y0^q.
class HermitianSpace {
 public:
  explicit HermitianSpace(unsigned q) : q_(q), f_(make_field_of_order(std::uint64_t{q} * q)), plane_(3, f_) {
    for (std::size_t i = 0; i < plane_.size(); ++i)
      if (form(plane_.point(static_cast<Point>(i)), plane_.point(static_cast<Point>(i))) == 0) {
        iso_index_.emplace(projective_code(f_, plane_.point(static_cast<Point>(i))),
                           static_cast<Point>(isotropic_.size()));
        isotropic_.push_back(plane_.point(static_cast<Point>(i)));
      }
  }

  unsigned q() const { return q_; }
  const FiniteField& field() const { return f_; }
  const ProjectiveSpace& plane() const { return plane_; }

  std::uint32_t conj(std::uint32_t a) const { return f_.frobenius_code(a, f_.degree() / 2); }

  std::uint32_t form(const Vec& x, const Vec& y) const {
    std::uint32_t s = f_.mul_code(x[0], conj(y[2]));
    s = f_.add_code(s, f_.mul_code(x[1], conj(y[1])));
    return f_.add_code(s, f_.mul_code(x[2], conj(y[0])));
  }

  /// Isotropic points in the canonical order of PG(2, q^2).
  const std::vector<Vec>& isotropic_points() const { return isotropic_; }

  Point isotropic_index(const Vec& x) const { return iso_index_.at(projective_code(f_, normalize(f_, x))); }

  /// Secant lines met in q+1 isotropic points, lexicographically sorted.
  std::vector<std::vector<Point>> hermitian_blocks() const {
    std::vector<std::vector<Point>> out;
    for (const auto& a : plane_.points()) {
      std::vector<Point> blk;
      for (std::size_t i = 0; i < isotropic_.size(); ++i)
        if (plane_.dot(a, isotropic_[i]) == 0) blk.push_back(static_cast<Point>(i));
      if (blk.size() == q_ + 1) out.push_back(std::move(blk));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool preserves_form(const Matrix& m) const {
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        Vec ei(3, 0), ej(3, 0);
        ei[i] = 1;
        ej[j] = 1;
        if (form(mat_vec(f_, m, ei), mat_vec(f_, m, ej)) != form(ei, ej)) return false;
      }
    return true;
  }

  /// Generators of GU_3(q): a split torus element, a norm-one scalar on e1,
  /// the swap of e0 and e2, and unipotent elements from the stabilizer of <e0>.
  std::vector<Matrix> unitary_generators() const {
    std::vector<Matrix> out;
    const std::uint32_t w = f_.primitive_element().code();
    Matrix torus = Matrix::identity(3);
    torus(0, 0) = w;
    torus(2, 2) = f_.inv(f_.element(conj(w))).code();
    out.push_back(torus);
    Matrix mid = Matrix::identity(3);
    mid(1, 1) = f_.pow(f_.element(w), static_cast<long long>(q_) - 1).code();
    out.push_back(mid);
    Matrix swap(3);
    swap(0, 2) = swap(2, 0) = swap(1, 1) = 1;
    out.push_back(swap);
    // smallest beta completing [[1,a,beta],[0,1,-a^q],[0,0,1]] to an isometry
    for (std::uint32_t alpha : {std::uint32_t{0}, std::uint32_t{1}, w}) {
      for (std::uint32_t beta = 1; beta < f_.order(); ++beta) {
        Matrix u = Matrix::identity(3);
        u(0, 1) = alpha;
        u(0, 2) = beta;
        u(1, 2) = f_.neg_code(conj(alpha));
        if (preserves_form(u)) {
          out.push_back(u);
          break;
        }
      }
    }
    for (const auto& m : out)
      if (!preserves_form(m)) throw std::logic_error("unitary generator does not preserve the form");
    return out;
  }

  /// Action of form-preserving matrices on the isotropic points.
  PermGroup isotropic_action(const std::vector<Matrix>& gens) const {
    std::vector<Permutation> perms;
    for (const auto& m : gens) {
      std::vector<Point> images(isotropic_.size());
      for (std::size_t i = 0; i < isotropic_.size(); ++i) images[i] = isotropic_index(mat_vec(f_, m, isotropic_[i]));
      perms.emplace_back(std::move(images));
    }
    return PermGroup(isotropic_.size(), std::move(perms));
  }

 private:
  unsigned q_;
  FiniteField f_;
  ProjectiveSpace plane_;
  std::vector<Vec> isotropic_;
  std::unordered_map<std::uint64_t, Point> iso_index_;
};

/// The Suzuki-Tits ovoid {(1 : st + s^(sigma+2) + t^sigma : t : s)} u {(0:1:0:0)}
/// in PG(3, q), q = 2^(2a+1), sigma: x -> x^(2^(a+1)).
class SuzukiOvoid {
 public:
  explicit SuzukiOvoid(unsigned q) {
    const auto [p, d] = prime_power(q);
    if (p != 2 || d % 2 == 0 || d < 3) throw std::invalid_argument("q must be 2^(2a+1) with a >= 1");
    if (q > 32) throw std::invalid_argument("Suzuki ovoid supported for q <= 32");
    q_ = q;
    f_ = std::make_shared<FiniteField>(make_field(2, d));
    sigma_ = (d - 1) / 2 + 1;
    const auto& f = *f_;
    points_.push_back({0, 1, 0, 0});
    for (std::uint32_t s = 0; s < q; ++s)
      for (std::uint32_t t = 0; t < q; ++t) {
        std::uint32_t v = f.mul_code(s, t);
        v = f.add_code(v, f.mul_code(sig(s), f.mul_code(s, s)));
        v = f.add_code(v, sig(t));
        points_.push_back({1, v, t, s});
      }
    std::sort(points_.begin(), points_.end(),
              [&](const Vec& a, const Vec& b) { return projective_code(f, a) < projective_code(f, b); });
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(projective_code(f, points_[i]), static_cast<Point>(i));
  }

  unsigned q() const { return q_; }
  const FiniteField& field() const { return *f_; }
  const std::vector<Vec>& points() const { return points_; }
  Point index_of(const Vec& x) const { return index_.at(projective_code(*f_, normalize(*f_, x))); }
  Point infinity() const { return index_of({0, 1, 0, 0}); }

  std::uint32_t sig(std::uint32_t x) const { return f_->frobenius_code(x, sigma_); }

  /// Translation fixing (0:1:0:0) and sending (1:*:0:0) to (1:*:b:a).
  Matrix translation(std::uint32_t a, std::uint32_t b) const {
    const auto& f = *f_;
    const std::uint32_t as = sig(a);
    Matrix m = Matrix::identity(4);
    m(1, 0) = f.add_code(f.add_code(f.mul_code(a, b), f.mul_code(as, f.mul_code(a, a))), sig(b));
    m(1, 2) = a;
    m(1, 3) = f.add_code(b, f.mul_code(as, a));
    m(2, 0) = b;
    m(2, 3) = as;
    m(3, 0) = a;
    return m;
  }

  Matrix dilation(std::uint32_t k) const {
    const auto& f = *f_;
    Matrix m(4);
    const std::uint32_t ks = sig(k);
    m(0, 0) = 1;
    m(1, 1) = f.mul_code(ks, f.mul_code(k, k));
    m(2, 2) = f.mul_code(ks, k);
    m(3, 3) = k;
    return m;
  }

  /// Swaps (0:1:0:0) and (1:0:0:0).
  static Matrix involution() {
    Matrix m(4);
    m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = 1;
    return m;
  }

  std::vector<Matrix> generators() const {
    std::vector<Matrix> out;
    for (unsigned k = 0; k < f_->degree(); ++k) out.push_back(translation(1u << k, 0));
    for (unsigned k = 0; k < f_->degree(); ++k) out.push_back(translation(0, 1u << k));
    out.push_back(dilation(f_->primitive_element().code()));
    out.push_back(involution());
    return out;
  }

  /// The subgroup q:(q-1) generated by translations (0, b) and dilations.
  std::vector<Matrix> frobenius_subgroup_generators() const {
    std::vector<Matrix> out;
    for (unsigned k = 0; k < f_->degree(); ++k) out.push_back(translation(0, 1u << k));
    out.push_back(dilation(f_->primitive_element().code()));
    return out;
  }

  PermGroup action(const std::vector<Matrix>& gens) const {
    std::vector<Permutation> perms;
    for (const auto& m : gens) {
      std::vector<Point> images(points_.size());
      for (std::size_t i = 0; i < points_.size(); ++i) images[i] = index_of(mat_vec(*f_, m, points_[i]));
      perms.emplace_back(std::move(images));
    }
    return PermGroup(points_.size(), std::move(perms));
  }

  PermGroup group() const { return action(generators()); }

  /// Exhaustive: every triple of points spans a plane.
  bool no_three_collinear() const {
    const std::size_t n = points_.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          if (rank(*f_, {points_[a], points_[b], points_[c]}) < 3) return false;
    return true;
  }

 private:
  unsigned q_ = 0;
  std::shared_ptr<FiniteField> f_;
  unsigned sigma_ = 0;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, Point> index_;
};

}  // namespace ftd
