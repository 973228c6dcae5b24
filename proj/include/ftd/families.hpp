#pragma once

// Constructors for the flag-transitive 2-designs with gcd(r, lambda) = 1.
// Each returns an IncidenceDesign with its group attached and metadata
// (family, params, field, expect, claims). Closed-form parameters are
// rechecked against the counted ones before a design is returned.

#include "design.hpp"
#include "geometry.hpp"

#include <set>

namespace ftd {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The construction ran but its output does not have the stated parameters.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// (v, b, r, k, lambda) from v, k, lambda via the design identities.
inline DesignParams params_from(std::uint64_t v, std::uint64_t k, std::uint64_t lambda) {
  if (k < 2 || (lambda * (v - 1)) % (k - 1) != 0) throw std::logic_error("parameters fail divisibility");
  const std::uint64_t r = lambda * (v - 1) / (k - 1);
  if ((v * r) % k != 0) throw std::logic_error("parameters fail divisibility");
  return make_params(v, v * r / k, r, k, lambda);
}

namespace detail {

inline void check_expected(const IncidenceDesign& d, const DesignParams& expected, const std::string& family) {
  const auto p = compute_params(d);
  if (!p.is_2design) throw ConstructionError(family + ": construction is not a 2-design (" + p.defect + ")");
  if (!p.same_numbers(expected))
    throw ConstructionError(family + ": counted " + p.tuple() + " but the closed form gives " + expected.tuple());
}

inline IncidenceDesign finish(IncidenceDesign d, const std::string& family, const std::string& params,
                              const std::string& field, const DesignParams& expected, bool check = true) {
  if (check) check_expected(d, expected, family);
  d.set_meta("family", family);
  d.set_meta("params", params);
  d.set_meta("field", field);
  d.set_meta("expect", expected.tuple());
  d.set_meta("claims", "2-design,coprime,flag-transitive,primitive");
  return d;
}

inline std::vector<Permutation> vector_space_group(const VectorSpace& vs, const std::vector<SemilinearMap>& maps) {
  auto gens = vs.translation_generators();
  for (const auto& m : maps) gens.push_back(vs.permutation(m));
  return gens;
}

inline std::uint64_t checked_prime_power(unsigned p, unsigned d, std::uint64_t cap, const char* what) {
  if (!is_prime(p)) throw PreconditionError(std::string(what) + ": p must be prime");
  if (d == 0) throw PreconditionError(std::string(what) + ": d must be positive");
  if (d > 40 || ipow(p, d) > cap) throw PreconditionError(std::string(what) + ": p^d exceeds " + std::to_string(cap));
  return ipow(p, d);
}

inline unsigned prime_power_of(std::uint64_t q, const char* what) {
  try {
    return prime_power(q).first;
  } catch (const std::invalid_argument&) {
    throw PreconditionError(std::string(what) + ": q must be a prime power");
  }
}

}  // namespace detail

inline IncidenceDesign build_point_hyperplane(unsigned n, std::uint64_t q) {
  if (n < 3) throw PreconditionError("point-hyperplane: n must be at least 3");
  detail::prime_power_of(q, "point-hyperplane");
  const std::uint64_t v = (ipow(q, n) - 1) / (q - 1);
  if (v > kMaxPairCountDegree) throw PreconditionError("point-hyperplane: more than 4096 points");
  auto f = make_field_of_order(q);
  ProjectiveSpace pg(n, f);
  const auto expected = make_params(v, v, (ipow(q, n - 1) - 1) / (q - 1), (ipow(q, n - 1) - 1) / (q - 1),
                                    (ipow(q, n - 2) - 1) / (q - 1));
  IncidenceDesign d(v, pg.hyperplanes(), pg.group(gammal_generators(n, f)));
  return detail::finish(std::move(d), "point-hyperplane", "n=" + std::to_string(n) + ",q=" + std::to_string(q),
                        f.descriptor(), expected);
}

/// Blocks: a line minus one of its points, under PGammaL_n(q).
inline IncidenceDesign build_projective_points_design(unsigned n, std::uint64_t q) {
  if (n < 3) throw PreconditionError("projective-points: n must be at least 3");
  detail::prime_power_of(q, "projective-points");
  if (std::gcd<std::uint64_t>(n - 1, q - 1) != 1)
    throw PreconditionError("projective-points: gcd(n-1,q-1)=gcd(" + std::to_string(n - 1) + "," +
                            std::to_string(q - 1) + ")=" + std::to_string(std::gcd<std::uint64_t>(n - 1, q - 1)) +
                            " must be 1");
  const std::uint64_t v = (ipow(q, n) - 1) / (q - 1);
  if (v > kMaxPairCountDegree) throw PreconditionError("projective-points: more than 4096 points");
  auto f = make_field_of_order(q);
  ProjectiveSpace pg(n, f);
  auto line = pg.line_through(0, 1);
  line.erase(line.begin());
  auto d = orbit_design(v, pg.group(gammal_generators(n, f)), line);
  return detail::finish(std::move(d), "projective-points", "n=" + std::to_string(n) + ",q=" + std::to_string(q),
                        f.descriptor(), params_from(v, q, q - 1));
}

/// Points: dihedral subgroups of order 2(q+1) in SL_2(q), q = 2^a >= 8,
/// each identified by its set of involutions. Blocks: the involutions.
/// Group: PGammaL_2(q) acting by conjugation.
inline IncidenceDesign build_wbs(std::uint64_t q) {
  if (q < 8 || q > 64 || (q & (q - 1)) != 0) throw PreconditionError("wbs: q must be 2^a with a >= 3 and q <= 64");
  const auto f = make_field_of_order(q);
  using M = std::array<std::uint32_t, 4>;  // a b / c d
  auto mul = [&](const M& x, const M& y) -> M {
    return {f.mul_code(x[0], y[0]) ^ f.mul_code(x[1], y[2]), f.mul_code(x[0], y[1]) ^ f.mul_code(x[1], y[3]),
            f.mul_code(x[2], y[0]) ^ f.mul_code(x[3], y[2]), f.mul_code(x[2], y[1]) ^ f.mul_code(x[3], y[3])};
  };
  auto inverse = [](const M& x) -> M { return {x[3], x[1], x[2], x[0]}; };
  auto key = [&](const M& x) { return ((x[0] * q + x[1]) * q + x[2]) * q + x[3]; };
  const M id{1, 0, 0, 1};

  std::vector<M> elements, involutions;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t dd = 0; dd < q; ++dd)
          if ((f.mul_code(a, dd) ^ f.mul_code(b, c)) == 1) {
            const M x{a, b, c, dd};
            elements.push_back(x);
            if (a == dd && x != id) involutions.push_back(x);
          }
  std::unordered_map<std::uint64_t, Point> inv_index;
  for (std::size_t i = 0; i < involutions.size(); ++i) inv_index.emplace(key(involutions[i]), static_cast<Point>(i));

  auto power = [&](M x, std::uint64_t e) {
    M r = id;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };
  const auto primes = prime_factors(q + 1);
  std::unordered_map<std::uint64_t, char> done;
  std::vector<std::vector<Point>> dihedral;
  for (const auto& g : elements) {
    if (done.count(key(g)) || power(g, q + 1) != id) continue;
    if (std::any_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return power(g, (q + 1) / r) == id; }))
      continue;
    M c = g;
    for (std::uint64_t i = 0; i < q + 1; ++i, c = mul(c, g)) done.emplace(key(c), 1);
    const M ginv = inverse(g);
    std::vector<Point> invs;
    for (std::size_t i = 0; i < involutions.size(); ++i)
      if (mul(mul(involutions[i], g), involutions[i]) == ginv) invs.push_back(static_cast<Point>(i));
    if (invs.size() != q + 1) throw std::logic_error("wbs: normalizer of a torus has the wrong size");
    dihedral.push_back(std::move(invs));
  }
  std::sort(dihedral.begin(), dihedral.end());

  std::vector<M> conj;
  for (unsigned k = 0; k < f.degree(); ++k) conj.push_back({1, 1u << k, 0, 1});
  conj.push_back({0, 1, 1, 0});
  std::vector<Permutation> on_invs;
  for (const auto& g : conj) {
    std::vector<Point> images(involutions.size());
    const M gi = inverse(g);
    for (std::size_t i = 0; i < involutions.size(); ++i) images[i] = inv_index.at(key(mul(mul(gi, involutions[i]), g)));
    on_invs.emplace_back(std::move(images));
  }
  {
    std::vector<Point> images(involutions.size());
    for (std::size_t i = 0; i < involutions.size(); ++i) {
      M x = involutions[i];
      for (auto& e : x) e = f.frobenius_code(e, 1);
      images[i] = inv_index.at(key(x));
    }
    on_invs.emplace_back(std::move(images));
  }
  const PermGroup point_group = induced_action(PermGroup(involutions.size(), on_invs), dihedral);

  std::vector<Block> blocks(involutions.size());
  for (std::size_t p = 0; p < dihedral.size(); ++p)
    for (Point t : dihedral[p]) blocks[t].push_back(static_cast<Point>(p));
  const std::uint64_t v = q * (q - 1) / 2;
  IncidenceDesign d(v, std::move(blocks), point_group);
  return detail::finish(std::move(d), "wbs", "q=" + std::to_string(q), f.descriptor(), params_from(v, q / 2, 1));
}

inline void check_unital_q(std::uint64_t q, const char* family) {
  detail::prime_power_of(q, family);
  if (q > 5) throw PreconditionError(std::string(family) + ": q must be at most 5");
}

inline IncidenceDesign build_hermitian_unital(std::uint64_t q) {
  check_unital_q(q, "hermitian-unital");
  HermitianSpace h(static_cast<unsigned>(q));
  const std::uint64_t v = q * q * q + 1;
  IncidenceDesign d(v, h.hermitian_blocks(), h.isotropic_action(h.unitary_generators()));
  return detail::finish(std::move(d), "hermitian-unital", "q=" + std::to_string(q), h.field().descriptor(),
                        params_from(v, q + 1, 1));
}

/// Blocks: a secant block of the unital minus one of its points, under PGU_3(q).
inline IncidenceDesign build_unitary_design(std::uint64_t q) {
  check_unital_q(q, "unitary");
  HermitianSpace h(static_cast<unsigned>(q));
  const std::uint64_t v = q * q * q + 1;
  auto base = h.hermitian_blocks().front();
  base.erase(base.begin());
  auto d = orbit_design(v, h.isotropic_action(h.unitary_generators()), base);
  return detail::finish(std::move(d), "unitary", "q=" + std::to_string(q), h.field().descriptor(),
                        params_from(v, q, q - 1));
}

/// Base block: the unique orbit of length q of the subgroup q:(q-1) of the
/// stabilizer of the point at infinity.
inline IncidenceDesign build_suzuki_design(std::uint64_t q) {
  if (q != 8 && q != 32) throw PreconditionError("suzuki: q must be 8 or 32");
  SuzukiOvoid o(static_cast<unsigned>(q));
  const PermGroup k = o.action(o.frobenius_subgroup_generators());
  if (k.order() != q * (q - 1)) throw std::logic_error("suzuki: subgroup q:(q-1) has the wrong order");
  std::vector<std::vector<Point>> size_q;
  for (auto& orb : orbits(k))
    if (orb.size() == q) size_q.push_back(std::move(orb));
  if (size_q.size() != 1) throw std::logic_error("suzuki: orbit of length q is not unique");
  const std::uint64_t v = q * q + 1;
  auto d = orbit_design(v, o.group(), size_q.front());
  return detail::finish(std::move(d), "suzuki", "q=" + std::to_string(q), o.field().descriptor(),
                        params_from(v, q, q - 1));
}

/// Parameters of the designs on the Ree unital: v = q^3+1, k = q^i.
inline DesignParams ree_parameters(std::uint64_t q, unsigned i) {
  unsigned a = 0;
  for (std::uint64_t x = q; x > 1; x /= 3) {
    if (x % 3 != 0) throw PreconditionError("ree: q must be a power of 3");
    ++a;
  }
  if (a < 3 || a % 2 == 0) throw PreconditionError("ree: q must be 3^a with a >= 3 odd");
  if (i != 1 && i != 2) throw PreconditionError("ree: i must be 1 or 2");
  const std::uint64_t q3 = ipow(q, 3);
  const std::uint64_t v = q3 + 1, k = ipow(q, i);
  const std::uint64_t b = ipow(q, 3 - i) * v;
  auto p = make_params(v, b, q3, k, k - 1);
  if (!p.is_2design) throw std::logic_error("ree: parameters violate the design identities");
  if (!p.coprime) throw std::logic_error("ree: gcd(r, lambda) is not 1");
  return p;
}

enum class Placement { a, b };

namespace detail {

/// GF(p^g)-span of 1, w, ..., w^(m-1) inside GF(q) as element codes.
inline std::vector<std::uint32_t> subfield_span(const FiniteField& f, unsigned g, unsigned m) {
  const auto sub = f.subfield_codes(g);
  std::vector<std::uint32_t> out{0};
  FieldElement w = f.primitive_element();
  for (unsigned j = 0; j < m; ++j) {
    const auto bj = f.pow(w, j).code();
    std::vector<std::uint32_t> next;
    for (auto x : out)
      for (auto s : sub) next.push_back(f.add_code(x, f.mul_code(s, bj)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Vectors with coordinates 0..n-2 arbitrary (if `hyperplane`) or zero, and
/// last/first coordinate drawn from `values`.
inline Block place(const VectorSpace& vs, const std::vector<std::uint32_t>& values, bool hyperplane) {
  const unsigned n = vs.dim();
  Block out;
  if (!hyperplane) {
    for (auto c : values) {
      Vec x(n, 0);
      x[0] = c;
      out.push_back(vs.index(x));
    }
  } else {
    const std::uint64_t q = vs.field().order();
    const std::uint64_t rest = ipow(q, n - 1);
    for (std::uint64_t y = 0; y < rest; ++y)
      for (auto c : values) {
        Vec x(n, 0);
        std::uint64_t t = y;
        for (unsigned i = 0; i + 1 < n; ++i) {
          x[i] = static_cast<std::uint32_t>(t % q);
          t /= q;
        }
        x[n - 1] = c;
        out.push_back(vs.index(x));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Linear part: SL_n(q) for n >= 2, GL_1(q) for n = 1; plus the smallest
/// Frobenius power stabilizing the block, if any.
inline std::vector<Permutation> affine_group(const VectorSpace& vs, const Block& base) {
  const auto& f = vs.field();
  const unsigned n = vs.dim();
  auto maps = as_linear_maps(n >= 2 ? sl_generators(n, f) : gl_generators(1, f));
  for (unsigned e = 1; e < f.degree(); ++e) {
    SemilinearMap s{Matrix::identity(n), e};
    if (set_image(vs.permutation(s), base) == base) {
      maps.push_back(s);
      break;
    }
  }
  return vector_space_group(vs, maps);
}

}  // namespace detail

/// Block: a u-dimensional GF(p)-subspace, a GF(p^g)-subspace (g = gcd(u,d/n))
/// inside <e0> (placement a) or containing the hyperplane x_{n-1} = 0
/// (placement b). Group: translations, SL_n(q) and a stabilizing field
/// automorphism. gcd(r, lambda) is computed, not assumed.
inline IncidenceDesign build_affine_subspace_design(unsigned p, unsigned d, unsigned n, unsigned u, Placement pl) {
  const std::string name = "affine-subspace";
  const std::uint64_t v = detail::checked_prime_power(p, d, 4096, "affine-subspace");
  if (n == 0 || d % n != 0) throw PreconditionError(name + ": n must divide d");
  const unsigned e = d / n;
  if (std::gcd(std::gcd(u, n), e) != 1) throw PreconditionError(name + ": gcd(u,n,d/n) must be 1");
  if (pl == Placement::a && !(std::gcd(u, d) < u && u < e))
    throw PreconditionError(name + ": placement a needs gcd(u,d) < u < d/n");
  if (pl == Placement::b && !(d - e <= u && u < d && std::gcd(u, d) < u))
    throw PreconditionError(name + ": placement b needs d-d/n <= u < d and gcd(u,d) < u");
  const unsigned g = std::gcd(u, e);
  const auto f = make_field(p, e);
  VectorSpace vs(n, f);
  const unsigned local = pl == Placement::a ? u : u - (d - e);
  const Block base = detail::place(vs, detail::subfield_span(f, g, local / g), pl == Placement::b);
  if (base.size() != ipow(p, u)) throw std::logic_error(name + ": block has the wrong size");
  const PermGroup grp(v, detail::affine_group(vs, base));
  auto des = orbit_design(v, grp, base);
  const auto expected = params_from(v, ipow(p, u), (ipow(p, u) - 1) / (ipow(p, g) - 1));
  std::ostringstream ps;
  ps << "p=" << p << ",d=" << d << ",n=" << n << ",u=" << u << ",case=" << (pl == Placement::a ? "a" : "b");
  auto out = detail::finish(std::move(des), name, ps.str(), f.descriptor(), expected);
  out.set_meta("gcd", std::to_string(std::gcd(expected.r, expected.lambda)));
  if (!expected.coprime) out.set_meta("claims", "2-design,flag-transitive,primitive");
  return out;
}

enum class CosetCase { i, ii };

/// Block: a regular orbit of a Frobenius group W:<alpha> of order p^u * omega,
/// inside <e0> (case i), or that orbit in the last coordinate together with
/// the whole hyperplane x_{n-1} = 0 (case ii). Group: translations, SL_n(q).
inline IncidenceDesign build_coset_union_design(unsigned p, unsigned d, unsigned n, unsigned u, unsigned omega,
                                                CosetCase cc) {
  const std::string name = "coset-union";
  const std::uint64_t v = detail::checked_prime_power(p, d, 4096, "coset-union");
  if (n == 0 || d % n != 0) throw PreconditionError(name + ": n must divide d");
  if (omega == 0) throw PreconditionError(name + ": omega must be positive");
  const unsigned e = d / n;
  const unsigned g = std::gcd(u, e);
  const std::uint64_t pg = ipow(p, g);
  if ((pg - 1) % omega != 0)
    throw PreconditionError(name + ": omega=" + std::to_string(omega) + " does not divide p^gcd(u,d/n)-1=" +
                            std::to_string(pg - 1));
  if ((v - 1) % omega != 0) throw PreconditionError(name + ": omega must divide p^d-1");
  const std::uint64_t k = ipow(p, u) * omega;
  const std::uint64_t a = (v - 1) / omega, bq = k - 1;
  if (std::gcd(a, bq) != 1)
    throw PreconditionError(name + ": gcd((p^d-1)/omega, p^u*omega-1) = gcd(" + std::to_string(a) + "," +
                            std::to_string(bq) + ")=" + std::to_string(std::gcd(a, bq)) + " must be 1");
  if (cc == CosetCase::i && u >= e) throw PreconditionError(name + ": case i needs u < d/n");
  if (cc == CosetCase::ii && !(d - e <= u && u < d)) throw PreconditionError(name + ": case ii needs d-d/n <= u < d");
  const unsigned local = cc == CosetCase::i ? u : u - (d - e);
  if (local % g != 0) throw PreconditionError(name + ": W must be a GF(p^gcd(u,d/n))-subspace");
  if (k < 3 || k + 1 >= v) throw PreconditionError(name + ": block size must satisfy 2 < k < v-1");
  const auto f = make_field(p, e);
  const auto w = detail::subfield_span(f, g, local / g);
  const auto alpha = f.pow(f.primitive_element(), static_cast<long long>((f.order() - 1) / omega)).code();

  auto orbit_of = [&](std::uint32_t t) {
    std::set<std::uint32_t> orb;
    std::uint32_t s = t;
    for (unsigned i = 0; i < omega; ++i, s = f.mul_code(s, alpha))
      for (auto x : w) orb.insert(f.add_code(s, x));
    return std::vector<std::uint32_t>(orb.begin(), orb.end());
  };
  const std::uint64_t regular = ipow(p, local) * omega;
  std::vector<std::uint32_t> orbit;
  for (std::uint32_t t = 0; t < f.order(); ++t) {
    auto o = orbit_of(t);
    if (o.size() == regular) {
      orbit = std::move(o);
      break;
    }
  }
  if (orbit.empty()) throw std::logic_error(name + ": no regular orbit");
  VectorSpace vs(n, f);
  const Block base = detail::place(vs, orbit, cc == CosetCase::ii);
  if (base.size() != k) throw std::logic_error(name + ": block has the wrong size");
  const PermGroup grp(v, detail::vector_space_group(
                             vs, as_linear_maps(n >= 2 ? sl_generators(n, f) : gl_generators(1, f))));
  auto des = orbit_design(v, grp, base);
  std::ostringstream ps;
  ps << "p=" << p << ",d=" << d << ",n=" << n << ",u=" << u << ",omega=" << omega
     << ",case=" << (cc == CosetCase::i ? "i" : "ii");
  return detail::finish(std::move(des), name, ps.str(), f.descriptor(), params_from(v, k, k - 1));
}

namespace detail {

/// GF(2)-matrix on V_2(2) (x) V_3(2), coordinates (i,j) at bit 3i+j.
inline Permutation tensor_map(const std::array<std::array<int, 2>, 2>& a, const std::array<std::array<int, 3>, 3>& b) {
  std::vector<Point> images(64);
  for (Point x = 0; x < 64; ++x) {
    Point y = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        int bit = 0;
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 3; ++l) bit ^= a[i][k] & b[j][l] & static_cast<int>((x >> (3 * k + l)) & 1);
        y |= static_cast<Point>(bit) << (3 * i + j);
      }
    images[x] = y;
  }
  return Permutation(std::move(images));
}

}  // namespace detail

/// Orbit of u0 (x) PG_2(2) in V_2(2) (x) V_3(2) under T:(GL_2(2) x GL_3(2)).
/// Every difference of two block points is a rank-1 tensor, so pairs whose
/// difference has rank 2 lie in no block: this is not a 2-design.
inline IncidenceDesign tensor_structure() {
  const std::array<std::array<int, 2>, 2> i2{{{1, 0}, {0, 1}}}, a1{{{1, 1}, {0, 1}}}, a2{{{0, 1}, {1, 0}}};
  const std::array<std::array<int, 3>, 3> i3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      b1{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}, b2{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  std::vector<Permutation> gens;
  for (Point bit = 0; bit < 6; ++bit) {
    std::vector<Point> im(64);
    for (Point x = 0; x < 64; ++x) im[x] = x ^ (1u << bit);
    gens.emplace_back(std::move(im));
  }
  gens.push_back(detail::tensor_map(a1, i3));
  gens.push_back(detail::tensor_map(a2, i3));
  gens.push_back(detail::tensor_map(i2, b1));
  gens.push_back(detail::tensor_map(i2, b2));
  auto d = orbit_design(64, PermGroup(64, std::move(gens)), {1, 2, 3, 4, 5, 6, 7});
  d.set_meta("family", "tensor");
  d.set_meta("field", make_field(2, 1).descriptor());
  return d;
}

/// Throws ConstructionError: see tensor_structure().
inline IncidenceDesign build_tensor_design() {
  return detail::finish(tensor_structure(), "tensor", "", make_field(2, 1).descriptor(), params_from(64, 7, 2));
}

/// GF(64) = GF(4) (x) GF(8): block {c^i (1 + z c^h)} with c of order 7 and
/// z of order 3, under T:<x -> w^3 x>, extended by x -> m x^4 (m in <w^3>)
/// when such a map stabilizes the block. All block differences lie in one
/// coset of <w^3>, so the other two cosets are never covered.
inline IncidenceDesign semilinear_tensor_structure(unsigned h) {
  if (h < 1 || h > 6) throw PreconditionError("tensor-variant: h must be in 1..6");
  const auto f = make_field(2, 6);
  const auto w = f.primitive_element();
  const auto c = f.pow(w, 9).code(), z = f.pow(w, 21).code(), w3 = f.pow(w, 3).code();
  const auto one_plus = f.add_code(1, f.mul_code(z, f.pow(f.element(c), h).code()));
  Block base;
  std::uint32_t ci = 1;
  for (int i = 0; i < 7; ++i, ci = f.mul_code(ci, c)) base.push_back(f.mul_code(ci, one_plus));
  std::sort(base.begin(), base.end());

  auto field_map = [&](auto fn) {
    std::vector<Point> im(64);
    for (std::uint32_t x = 0; x < 64; ++x) im[x] = fn(x);
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  for (unsigned k = 0; k < 6; ++k) gens.push_back(field_map([&](std::uint32_t x) { return x ^ (1u << k); }));
  gens.push_back(field_map([&](std::uint32_t x) { return f.mul_code(w3, x); }));
  std::string extra = "none";
  std::uint32_t m = 1;
  for (int j = 0; j < 21; ++j, m = f.mul_code(m, w3)) {
    auto s = field_map([&](std::uint32_t x) { return f.mul_code(m, f.frobenius_code(x, 2)); });
    if (set_image(s, base) == base) {
      gens.push_back(std::move(s));
      extra = "w^" + std::to_string(3 * j) + "*x^4";
      break;
    }
  }
  auto d = orbit_design(64, PermGroup(64, std::move(gens)), base);
  d.set_meta("family", "tensor-variant");
  d.set_meta("params", "h=" + std::to_string(h));
  d.set_meta("field", f.descriptor());
  d.set_meta("semilinear", extra);
  return d;
}

/// Throws ConstructionError: see semilinear_tensor_structure().
inline IncidenceDesign build_semilinear_tensor_variant(unsigned h) {
  auto d = semilinear_tensor_structure(h);
  const std::string field = d.meta().at("field");
  return detail::finish(std::move(d), "tensor-variant", "h=" + std::to_string(h), field, params_from(64, 7, 2));
}

/// Lines of AG_n(q) under AGammaL_n(q).
inline IncidenceDesign build_desarguesian_affine(unsigned n, std::uint64_t q) {
  if (n < 2) throw PreconditionError("desarguesian-affine: n must be at least 2");
  detail::prime_power_of(q, "desarguesian-affine");
  if (ipow(q, n) > kMaxPairCountDegree) throw PreconditionError("desarguesian-affine: more than 4096 points");
  if (q == 2) throw PreconditionError("desarguesian-affine: q=2 gives the trivial design of all pairs");
  const auto f = make_field_of_order(q);
  VectorSpace vs(n, f);
  Vec e0(n, 0);
  e0[0] = 1;
  const auto base = Subspace::span(f, n, {e0}).indices();
  const PermGroup grp(vs.size(), detail::vector_space_group(vs, gammal_generators(n, f)));
  auto d = orbit_design(vs.size(), grp, base);
  return detail::finish(std::move(d), "desarguesian-affine", "n=" + std::to_string(n) + ",q=" + std::to_string(q),
                        f.descriptor(), params_from(vs.size(), q, 1));
}

inline IncidenceDesign build_affine_plane_complement(std::uint64_t q) {
  if (q < 3) throw PreconditionError("affine-plane-complement: q must be at least 3");
  auto c = complement(build_desarguesian_affine(2, q));
  const std::uint64_t v = q * q;
  const auto expected = make_params(v, q * (q + 1), q * q - 1, q * q - q, q * q - q - 1);
  return detail::finish(std::move(c), "affine-plane-complement", "q=" + std::to_string(q),
                        make_field_of_order(q).descriptor(), expected);
}

/// Block: the line <e0> together with its translate by e1, under T:SL_2(p).
inline IncidenceDesign build_parallel_pairs(unsigned p) {
  if (!is_prime(p) || p < 3 || p > 61) throw PreconditionError("parallel-pairs: p must be an odd prime <= 61");
  const auto f = make_field(p, 1);
  VectorSpace vs(2, f);
  Block base;
  for (std::uint32_t x = 0; x < p; ++x) {
    base.push_back(vs.index({x, 0}));
    base.push_back(vs.index({x, 1}));
  }
  const PermGroup grp(vs.size(), detail::vector_space_group(vs, as_linear_maps(sl_generators(2, f))));
  auto d = orbit_design(vs.size(), grp, base);
  const std::uint64_t v = std::uint64_t{p} * p;
  const auto expected = params_from(v, 2 * p, 2 * p - 1);
  auto out = detail::finish(std::move(d), "parallel-pairs", "p=" + std::to_string(p), f.descriptor(), expected);
  out.set_meta("gcd", std::to_string(std::gcd(expected.r, expected.lambda)));
  if (!expected.coprime) out.set_meta("claims", "2-design,flag-transitive,primitive");
  return out;
}

}  // namespace ftd
