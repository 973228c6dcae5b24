#pragma once

// Exact arithmetic in GF(p^d).
//
// Elements are stored by their base-p encoding: the coefficient vector
// c_0 + c_1 x + ... + c_{d-1} x^{d-1} maps to sum c_i p^i. That integer order
// is the canonical element order used for point indexing everywhere else.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftd {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 1; f <= n; ++f)
    if (n % f == 0) out.push_back(f);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("ipow: 64-bit overflow");
    r *= base;
  }
  return r;
}

/// Splits q into (p, d) with q = p^d, or throws if q is not a prime power.
inline std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  auto fs = prime_factors(q);
  if (fs.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  unsigned d = 0;
  while (q > 1) {
    q /= fs[0];
    ++d;
  }
  return {static_cast<unsigned>(fs[0]), d};
}

namespace detail {

// Polynomials over GF(p), coefficient lists low-to-high, no trailing zeros
// except for the zero polynomial which is empty.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("inv_mod: no inverse");
}

// remainder of a modulo b over GF(p)
inline Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const int factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline Poly monic_from_code(std::uint64_t code, unsigned deg, int p) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

inline bool is_irreducible(const Poly& f, int p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned dd = 1; dd <= deg / 2; ++dd) {
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), dd);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_mod(f, monic_from_code(c, dd, p), p).empty()) return false;
    }
  }
  return true;
}

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

class FiniteField;

/// An element of a specific finite field. Carries a tag of its field so that
/// mixing operands from different fields is caught.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t code() const { return code_; }
  std::uint64_t field_tag() const { return tag_; }
  bool is_zero() const { return code_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.tag_ == b.tag_;
  }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code_ < b.code_; }

 private:
  friend class FiniteField;
  FieldElement(std::uint32_t code, std::uint64_t tag) : code_(code), tag_(tag) {}
  std::uint32_t code_ = 0;
  std::uint64_t tag_ = 0;
};

class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  /// Field with an explicit monic modulus (low-to-high). The modulus is
  /// checked for irreducibility.
  FiniteField(unsigned p, std::vector<int> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    if (modulus.size() < 2 || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (int c : modulus)
      if (c < 0 || c >= static_cast<int>(p)) throw std::invalid_argument("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus, static_cast<int>(p)))
      throw std::invalid_argument("modulus is reducible");
    build(p, std::move(modulus));
  }

  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->d; }
  std::uint32_t order() const { return t_->q; }
  const std::vector<int>& modulus() const { return t_->modulus; }
  std::uint64_t tag() const { return t_->tag; }

  /// `GF(p^d)/modulus=[c0,...,cd]`
  std::string descriptor() const {
    std::ostringstream os;
    os << "GF(" << t_->p << "^" << t_->d << ")/modulus=[";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) os << (i ? "," : "") << t_->modulus[i];
    os << "]";
    return os.str();
  }

  FieldElement zero() const { return {0, t_->tag}; }
  FieldElement one() const { return {1, t_->tag}; }

  FieldElement element(std::uint32_t code) const {
    if (code >= t_->q) throw std::out_of_range("element code out of range");
    return {code, t_->tag};
  }

  /// The integer n mod p, embedded in the prime field.
  FieldElement from_int(long long n) const {
    const long long p = t_->p;
    return {static_cast<std::uint32_t>(((n % p) + p) % p), t_->tag};
  }

  FieldElement from_coeffs(const std::vector<int>& coeffs) const {
    if (coeffs.size() != t_->d) throw std::invalid_argument("coefficient vector has wrong length");
    std::uint32_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] < 0 || coeffs[i] >= static_cast<int>(t_->p))
        throw std::invalid_argument("coefficient not reduced mod p");
      code = code * t_->p + static_cast<std::uint32_t>(coeffs[i]);
    }
    return {code, t_->tag};
  }

  std::vector<int> coeffs(FieldElement a) const {
    check(a);
    std::vector<int> out(t_->d);
    std::uint32_t c = a.code();
    for (auto& x : out) {
      x = static_cast<int>(c % t_->p);
      c /= t_->p;
    }
    return out;
  }

  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(t_->q);
    for (std::uint32_t c = 0; c < t_->q; ++c) out.push_back({c, t_->tag});
    return out;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return {add_code(a.code(), b.code()), t_->tag};
  }
  FieldElement neg(FieldElement a) const {
    check(a);
    return {neg_code(a.code()), t_->tag};
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return {mul_code(a.code(), b.code()), t_->tag};
  }
  FieldElement inv(FieldElement a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    const std::uint32_t m = t_->q - 1;
    return {t_->exp[(m - t_->log[a.code()]) % m], t_->tag};
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, long long e) const {
    check(a);
    if (a.is_zero()) {
      if (e < 0) throw std::domain_error("negative power of zero");
      return e == 0 ? one() : zero();
    }
    const long long m = t_->q - 1;
    long long idx = (static_cast<long long>(t_->log[a.code()]) * (((e % m) + m) % m)) % m;
    return {t_->exp[idx], t_->tag};
  }

  /// a^(p^e) for 0 <= e < d.
  FieldElement frobenius(FieldElement a, unsigned e) const {
    check(a);
    if (e >= t_->d) throw std::invalid_argument("frobenius exponent must be < d");
    return {frobenius_code(a.code(), e), t_->tag};
  }

  /// Generator of the multiplicative group with the smallest encoding.
  FieldElement primitive_element() const { return {t_->exp[1 % std::max<std::uint32_t>(1, t_->q - 1)], t_->tag}; }

  /// Discrete log to base primitive_element().
  std::uint32_t log(FieldElement a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("log of zero");
    return t_->log[a.code()];
  }
  FieldElement exp(long long i) const {
    const long long m = t_->q - 1;
    return {t_->exp[((i % m) + m) % m], t_->tag};
  }

  std::uint64_t multiplicative_order(FieldElement a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("order of zero");
    const std::uint64_t m = t_->q - 1;
    return m / std::gcd<std::uint64_t>(m, t_->log[a.code()]);
  }

  /// Subfield GF(p^e) as the set of element codes (e must divide d).
  std::vector<std::uint32_t> subfield_codes(unsigned e) const {
    if (e == 0 || t_->d % e != 0) throw std::invalid_argument("subfield degree must divide d");
    const std::uint32_t step = (t_->q - 1) / (static_cast<std::uint32_t>(ipow(t_->p, e)) - 1);
    std::vector<std::uint32_t> out{0};
    for (std::uint32_t i = 0; i < t_->q - 1; i += step) out.push_back(t_->exp[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Unchecked code-level arithmetic for inner loops.
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const {
    if (t_->p == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    const std::uint32_t p = t_->p;
    for (unsigned i = 0; i < t_->d; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
  std::uint32_t neg_code(std::uint32_t a) const {
    if (t_->p == 2) return a;
    std::uint32_t out = 0, scale = 1;
    const std::uint32_t p = t_->p;
    for (unsigned i = 0; i < t_->d; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[(t_->log[a] + t_->log[b]) % (t_->q - 1)];
  }
  std::uint32_t frobenius_code(std::uint32_t a, unsigned e) const {
    if (a == 0) return 0;
    const std::uint64_t m = t_->q - 1;
    const std::uint64_t pe = ipow(t_->p, e) % m;
    return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * pe) % m];
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.tag() == b.tag(); }

 private:
  struct Tables {
    unsigned p = 0, d = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::uint64_t tag = 0;
    std::vector<std::uint32_t> exp, log;
  };

  void check(FieldElement a) const {
    if (a.field_tag() != t_->tag) throw std::invalid_argument("field element belongs to a different field");
  }

  std::uint32_t mul_poly_code(std::uint32_t a, std::uint32_t b, const Tables& t) const {
    const int p = static_cast<int>(t.p);
    detail::Poly pa(t.d), pb(t.d);
    for (unsigned i = 0; i < t.d; ++i) {
      pa[i] = static_cast<int>(a % t.p);
      a /= t.p;
      pb[i] = static_cast<int>(b % t.p);
      b /= t.p;
    }
    detail::Poly prod(2 * t.d, 0);
    for (unsigned i = 0; i < t.d; ++i)
      for (unsigned j = 0; j < t.d; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    auto r = detail::poly_mod(prod, t.modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * t.p + static_cast<std::uint32_t>(r[i]);
    return code;
  }

  std::uint32_t pow_poly_code(std::uint32_t a, std::uint64_t e, const Tables& t) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_poly_code(r, a, t);
      a = mul_poly_code(a, a, t);
      e >>= 1;
    }
    return r;
  }

  void build(unsigned p, std::vector<int> modulus) {
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->d = static_cast<unsigned>(modulus.size() - 1);
    const std::uint64_t q = ipow(p, t->d);
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = detail::fnv1a(h, p);
    for (int c : t->modulus) h = detail::fnv1a(h, static_cast<std::uint64_t>(c));
    t->tag = h;

    const std::uint64_t m = q - 1;
    const auto primes = prime_factors(m);
    std::uint32_t gen = 1;
    if (m > 1) {
      for (gen = 1; gen < q; ++gen) {
        bool ok = true;
        for (auto r : primes) {
          if (pow_poly_code(gen, m / r, *t) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
    }
    t->exp.assign(std::max<std::uint64_t>(m, 1), 1);
    t->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      t->exp[i] = x;
      t->log[x] = static_cast<std::uint32_t>(i);
      x = mul_poly_code(x, gen, *t);
    }
    t_ = std::move(t);
  }

  std::shared_ptr<const Tables> t_;
};

/// GF(p^d) with the smallest monic irreducible modulus, comparing candidate
/// moduli by their base-p encoding (highest-degree coefficient most
/// significant).
inline FiniteField make_field(unsigned p, unsigned d) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (d < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (ipow(p, d) > FiniteField::kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
  const std::uint64_t count = ipow(p, d);
  for (std::uint64_t c = 0; c < count; ++c) {
    auto f = detail::monic_from_code(c, d, static_cast<int>(p));
    if (detail::is_irreducible(f, static_cast<int>(p))) return FiniteField(p, f);
  }
  throw std::logic_error("no irreducible polynomial found");
}

inline FiniteField make_field_of_order(std::uint64_t q) {
  auto [p, d] = prime_power(q);
  return make_field(p, d);
}

}  // namespace ftd
