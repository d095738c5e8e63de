#ifndef RTSSS_GF_HPP
#define RTSSS_GF_HPP

// Exact arithmetic in prime fields F_p (2 <= p < 2^16) and extension fields
// GF(p^m). Extension elements are coefficient vectors in the polynomial basis
// modulo a monic irreducible defining polynomial, always fully reduced, so
// equality is digit-wise. A discrete-log table is built when the residue
// class of x generates the multiplicative group and the field is small
// enough to enumerate; it only affects display ("w^e" notation), never the
// arithmetic itself.

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rtsss/errors.hpp"
#include "rtsss/linalg.hpp"

namespace rtsss {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// F_p with elements represented as uint32_t in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
      fail(Errc::kNotPrime, "modulus " + std::to_string(p) + " is not a prime below 2^16");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }

  Element pow(Element a, std::uint64_t e) const {
    Element r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Element inv(Element a) const {
    if (a % p_ == 0) fail(Errc::kDivisionByZero, "inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

namespace detail {

// Dense univariate polynomials over F_p, little-endian (index = degree).
using Poly = std::vector<std::uint32_t>;

inline int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

inline Poly poly_mul(const PrimeField& fp, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = fp.add(out[i + j], fp.mul(a[i], b[j]));
  }
  return out;
}

// a mod f, f monic of degree >= 1.
inline Poly poly_mod(const PrimeField& fp, Poly a, const Poly& f) {
  const int df = poly_degree(f);
  for (int i = poly_degree(a); i >= df; --i) {
    std::uint32_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    a[static_cast<std::size_t>(i)] = 0;
    for (int j = 0; j < df; ++j) {
      auto& cell = a[static_cast<std::size_t>(i - df + j)];
      cell = fp.sub(cell, fp.mul(c, f[static_cast<std::size_t>(j)]));
    }
  }
  a.resize(static_cast<std::size_t>(df));
  return a;
}

inline Poly poly_mulmod(const PrimeField& fp, const Poly& a, const Poly& b, const Poly& f) {
  return poly_mod(fp, poly_mul(fp, a, b), f);
}

inline Poly poly_powmod(const PrimeField& fp, Poly base, std::uint64_t e, const Poly& f) {
  Poly r(static_cast<std::size_t>(poly_degree(f)), 0);
  r[0] = 1;
  base = poly_mod(fp, std::move(base), f);
  while (e) {
    if (e & 1) r = poly_mulmod(fp, r, base, f);
    base = poly_mulmod(fp, base, base, f);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(const PrimeField& fp, Poly a, Poly b) {
  while (poly_degree(b) >= 0) {
    // reduce a modulo b after making b monic
    int db = poly_degree(b);
    std::uint32_t lead_inv = fp.inv(b[static_cast<std::size_t>(db)]);
    for (auto& c : b) c = fp.mul(c, lead_inv);
    Poly r = a;
    for (int i = poly_degree(r); i >= db; --i) {
      std::uint32_t c = r[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      r[static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < db; ++j) {
        auto& cell = r[static_cast<std::size_t>(i - db + j)];
        cell = fp.sub(cell, fp.mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

// Rabin's criterion: f of degree m is irreducible over F_p iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/q)) - x, f) = 1 for each prime q | m.
inline bool is_irreducible(const PrimeField& fp, const detail::Poly& f) {
  const int m = detail::poly_degree(f);
  if (m < 1) return false;
  if (m == 1) return true;

  std::vector<unsigned> prime_divisors;
  unsigned rem = static_cast<unsigned>(m);
  for (unsigned q = 2; q * q <= rem; ++q)
    if (rem % q == 0) {
      prime_divisors.push_back(q);
      while (rem % q == 0) rem /= q;
    }
  if (rem > 1) prime_divisors.push_back(rem);

  // h_j = x^(p^j) mod f, built by iterated p-th powering
  detail::Poly x(static_cast<std::size_t>(m), 0);
  x[1] = 1;
  std::vector<detail::Poly> h(static_cast<std::size_t>(m) + 1);
  h[0] = x;
  for (int j = 1; j <= m; ++j) h[static_cast<std::size_t>(j)] = detail::poly_powmod(fp, h[static_cast<std::size_t>(j - 1)], fp.modulus(), f);

  if (h[static_cast<std::size_t>(m)] != x) return false;
  for (unsigned q : prime_divisors) {
    detail::Poly diff = h[static_cast<std::size_t>(m / q)];
    diff[1] = fp.sub(diff[1], 1);
    if (detail::poly_degree(detail::poly_gcd(fp, f, diff)) > 0) return false;
  }
  return true;
}

class FieldElement;

class ExtensionField {
 public:
  using Element = FieldElement;

  // Fields with order at most this get a discrete-log table (and hence
  // "w^e" display) when the residue class of x is a generator.
  static constexpr std::uint64_t kLogTableCap = 1u << 16;

  ExtensionField() = default;

  ExtensionField(const PrimeField& base, unsigned m, const std::vector<std::uint32_t>& defining_poly) {
    init(base, m, defining_poly);
  }

  static ExtensionField with_default_poly(const PrimeField& base, unsigned m) {
    return ExtensionField(base, m, default_defining_poly(base, m));
  }

  // Smallest monic irreducible polynomial of degree m in the encoding order
  // value = sum c_i * p^i over the low coefficients; among candidates with
  // enumerable order the first primitive one is preferred so that power
  // notation is available.
  static std::vector<std::uint32_t> default_defining_poly(const PrimeField& base, unsigned m);

  std::uint32_t p() const { return ctx_->fp.modulus(); }
  const PrimeField& prime_field() const { return ctx_->fp; }
  unsigned degree() const { return ctx_->m; }
  std::uint64_t order() const { return ctx_->order; }
  const std::vector<std::uint32_t>& defining_poly() const { return ctx_->poly; }
  bool valid() const { return ctx_ != nullptr; }

  bool same_field(const ExtensionField& o) const {
    if (ctx_ == o.ctx_) return true;
    if (!ctx_ || !o.ctx_) return false;
    return ctx_->fp == o.ctx_->fp && ctx_->m == o.ctx_->m && ctx_->poly == o.ctx_->poly;
  }

  Element zero() const;
  Element one() const;
  Element generator() const;  // residue class of x
  Element embed_scalar(std::uint32_t c) const;
  Element from_digits(const std::vector<std::uint32_t>& digits) const;
  Element element_at(std::uint64_t index) const;  // index in base-p digits
  std::uint64_t index_of(const Element& a) const;

  bool is_zero(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element scale(const Element& a, std::uint32_t c) const;  // F_p scalar action
  Element pow(const Element& a, std::uint64_t e) const;
  Element frobenius(const Element& a, std::uint64_t i) const;  // a^(p^i)

  // Power notation. Available only when the residue class of x is primitive
  // and the field order is within kLogTableCap.
  bool power_notation() const { return ctx_->primitive; }
  std::optional<std::uint64_t> discrete_log(const Element& a) const;

  std::string to_string(const Element& a) const;
  Element parse(std::string_view text) const;

 private:
  struct Ctx {
    PrimeField fp;
    unsigned m;
    std::vector<std::uint32_t> poly;       // length m+1, monic
    std::vector<std::uint32_t> red_tail;   // -poly[0..m-1] mod p, used in reduction
    std::uint64_t order;                   // p^m
    bool primitive = false;
    std::vector<std::uint32_t> log;        // element index -> exponent of x
    std::vector<std::uint64_t> exp;        // exponent -> element index
  };

  void init(const PrimeField& base, unsigned m, const std::vector<std::uint32_t>& defining_poly);
  const Ctx& ctx() const { return *ctx_; }
  void require_element(const Element& a) const;

  std::shared_ptr<const Ctx> ctx_;
};

// One element of GF(p^m): the owning field handle plus m digits in [0, p),
// index = degree in the polynomial basis. Default-constructed elements are
// detached placeholders; using one in arithmetic throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;

  const std::vector<std::uint32_t>& digits() const { return digits_; }
  const ExtensionField& field() const { return field_; }
  bool valid() const { return field_.valid(); }

  bool is_zero() const {
    for (auto d : digits_)
      if (d) return false;
    return true;
  }

  bool operator==(const FieldElement& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid() && digits_ == o.digits_;
    return field_.same_field(o.field_) && digits_ == o.digits_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.field_.add(a, b); }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.field_.sub(a, b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.field_.mul(a, b); }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a.field_.mul(a, b.field_.inv(b));
  }
  FieldElement operator-() const { return field_.neg(*this); }

 private:
  friend class ExtensionField;
  FieldElement(const ExtensionField& f, std::vector<std::uint32_t> digits)
      : field_(f), digits_(std::move(digits)) {}

  ExtensionField field_;
  std::vector<std::uint32_t> digits_;
};

inline void ExtensionField::init(const PrimeField& base, unsigned m,
                                 const std::vector<std::uint32_t>& defining_poly) {
  if (m == 0) fail(Errc::kBadParams, "extension degree must be positive");
  if (defining_poly.size() != static_cast<std::size_t>(m) + 1 || defining_poly[m] != 1)
    fail(Errc::kDegreeMismatch, "defining polynomial must be monic of degree m");
  for (auto c : defining_poly)
    if (c >= base.modulus()) fail(Errc::kBadParams, "defining polynomial digit out of range");

  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (order > (std::uint64_t{1} << 62) / base.modulus())
      fail(Errc::kFieldTooLarge, "p^m must stay below 2^63");
    order *= base.modulus();
  }
  if (!is_irreducible(base, defining_poly))
    fail(Errc::kNotIrreducible, "defining polynomial is reducible over F_p");

  auto ctx = std::make_shared<Ctx>(Ctx{base, m, defining_poly, {}, order});
  ctx->red_tail.resize(m);
  for (unsigned i = 0; i < m; ++i) ctx->red_tail[i] = base.neg(defining_poly[i]);

  if (order <= kLogTableCap) {
    // walk powers of the residue class of x; a full cycle of length order-1
    // means x is primitive
    std::vector<std::uint32_t> cur(m, 0);
    if (m == 1)
      cur[0] = base.neg(defining_poly[0]);
    else
      cur[1] = 1;
    auto index_of_digits = [&](const std::vector<std::uint32_t>& d) {
      std::uint64_t idx = 0;
      for (unsigned i = m; i-- > 0;) idx = idx * base.modulus() + d[i];
      return idx;
    };
    bool zero_gen = index_of_digits(cur) == 0;
    if (!zero_gen) {
      std::vector<std::uint32_t> acc(m, 0);
      acc[0] = 1;
      std::vector<std::uint32_t> log(static_cast<std::size_t>(order), 0);
      std::vector<std::uint64_t> exp;
      exp.reserve(static_cast<std::size_t>(order - 1));
      bool ok = true;
      for (std::uint64_t e = 0; e < order - 1; ++e) {
        std::uint64_t idx = index_of_digits(acc);
        if (idx == 1 && e > 0) {  // cycled early: not primitive
          ok = false;
          break;
        }
        log[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(e);
        exp.push_back(idx);
        // acc *= x, reduced by the defining polynomial
        std::uint32_t carry = acc[m - 1];
        for (unsigned i = m; i-- > 1;) acc[i] = acc[i - 1];
        acc[0] = 0;
        if (carry)
          for (unsigned i = 0; i < m; ++i) acc[i] = base.add(acc[i], base.mul(carry, ctx->red_tail[i]));
      }
      if (ok && index_of_digits(acc) == 1) {
        ctx->primitive = true;
        ctx->log = std::move(log);
        ctx->exp = std::move(exp);
      }
    }
  }
  ctx_ = std::move(ctx);
}

inline std::vector<std::uint32_t> ExtensionField::default_defining_poly(const PrimeField& base,
                                                                        unsigned m) {
  if (m == 0) fail(Errc::kBadParams, "extension degree must be positive");
  const std::uint32_t p = base.modulus();
  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (order > (std::uint64_t{1} << 62) / p) fail(Errc::kFieldTooLarge, "p^m must stay below 2^63");
    order *= p;
  }
  const bool want_primitive = order <= kLogTableCap;
  std::vector<std::uint32_t> fallback;
  const std::uint64_t scan_cap = std::min<std::uint64_t>(order, 200000);
  for (std::uint64_t v = 0; v < scan_cap; ++v) {
    std::vector<std::uint32_t> poly(m + 1, 0);
    poly[m] = 1;
    std::uint64_t rest = v;
    for (unsigned i = 0; i < m; ++i) {
      poly[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (!is_irreducible(base, poly)) continue;
    if (!want_primitive) return poly;
    if (fallback.empty()) fallback = poly;
    ExtensionField probe(base, m, poly);
    if (probe.power_notation()) return poly;
  }
  if (!fallback.empty()) return fallback;
  fail(Errc::kNotIrreducible, "no irreducible polynomial found in scan range");
}

inline void ExtensionField::require_element(const Element& a) const {
  if (!a.valid() || !same_field(a.field()))
    fail(Errc::kFieldMismatch, "element does not belong to this field");
}

inline FieldElement ExtensionField::zero() const {
  return FieldElement(*this, std::vector<std::uint32_t>(ctx_->m, 0));
}

inline FieldElement ExtensionField::one() const {
  std::vector<std::uint32_t> d(ctx_->m, 0);
  d[0] = 1;
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::generator() const {
  std::vector<std::uint32_t> d(ctx_->m, 0);
  if (ctx_->m == 1)
    d[0] = ctx_->fp.neg(ctx_->poly[0]);
  else
    d[1] = 1;
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::embed_scalar(std::uint32_t c) const {
  std::vector<std::uint32_t> d(ctx_->m, 0);
  d[0] = c % ctx_->fp.modulus();
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != ctx_->m) fail(Errc::kDegreeMismatch, "element must have exactly m digits");
  for (auto d : digits)
    if (d >= ctx_->fp.modulus()) fail(Errc::kBadParams, "element digit out of range");
  return FieldElement(*this, digits);
}

inline FieldElement ExtensionField::element_at(std::uint64_t index) const {
  if (index >= ctx_->order) fail(Errc::kBadParams, "element index out of range");
  std::vector<std::uint32_t> d(ctx_->m, 0);
  for (unsigned i = 0; i < ctx_->m; ++i) {
    d[i] = static_cast<std::uint32_t>(index % ctx_->fp.modulus());
    index /= ctx_->fp.modulus();
  }
  return FieldElement(*this, std::move(d));
}

inline std::uint64_t ExtensionField::index_of(const Element& a) const {
  require_element(a);
  std::uint64_t idx = 0;
  for (unsigned i = ctx_->m; i-- > 0;) idx = idx * ctx_->fp.modulus() + a.digits()[i];
  return idx;
}

inline bool ExtensionField::is_zero(const Element& a) const {
  require_element(a);
  return a.is_zero();
}

inline FieldElement ExtensionField::add(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  std::vector<std::uint32_t> d(ctx_->m);
  for (unsigned i = 0; i < ctx_->m; ++i) d[i] = ctx_->fp.add(a.digits()[i], b.digits()[i]);
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::sub(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  std::vector<std::uint32_t> d(ctx_->m);
  for (unsigned i = 0; i < ctx_->m; ++i) d[i] = ctx_->fp.sub(a.digits()[i], b.digits()[i]);
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::neg(const Element& a) const {
  require_element(a);
  std::vector<std::uint32_t> d(ctx_->m);
  for (unsigned i = 0; i < ctx_->m; ++i) d[i] = ctx_->fp.neg(a.digits()[i]);
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::scale(const Element& a, std::uint32_t c) const {
  require_element(a);
  c %= ctx_->fp.modulus();
  std::vector<std::uint32_t> d(ctx_->m);
  for (unsigned i = 0; i < ctx_->m; ++i) d[i] = ctx_->fp.mul(a.digits()[i], c);
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::mul(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  const unsigned m = ctx_->m;
  const auto& fp = ctx_->fp;
  std::vector<std::uint32_t> buf(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a.digits()[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j)
      buf[i + j] = fp.add(buf[i + j], fp.mul(a.digits()[i], b.digits()[j]));
  }
  for (unsigned i = 2 * m - 2; i >= m && i < buf.size(); --i) {
    std::uint32_t c = buf[i];
    if (c == 0) continue;
    buf[i] = 0;
    for (unsigned j = 0; j < m; ++j)
      buf[i - m + j] = fp.add(buf[i - m + j], fp.mul(c, ctx_->red_tail[j]));
  }
  buf.resize(m);
  return FieldElement(*this, std::move(buf));
}

inline FieldElement ExtensionField::inv(const Element& a) const {
  require_element(a);
  if (a.is_zero()) fail(Errc::kDivisionByZero, "inverse of zero");
  // extended Euclid in F_p[x] against the defining polynomial
  const auto& fp = ctx_->fp;
  detail::Poly r0 = ctx_->poly;
  detail::Poly r1(a.digits().begin(), a.digits().end());
  detail::Poly s0{0}, s1{1};
  while (detail::poly_degree(r1) > 0) {
    int d0 = detail::poly_degree(r0);
    int d1 = detail::poly_degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    std::uint32_t factor = fp.mul(r0[static_cast<std::size_t>(d0)],
                                  fp.inv(r1[static_cast<std::size_t>(d1)]));
    int shift = d0 - d1;
    // r0 -= factor * x^shift * r1 ; s0 -= factor * x^shift * s1
    for (int i = 0; i <= d1; ++i) {
      auto& cell = r0[static_cast<std::size_t>(i + shift)];
      cell = fp.sub(cell, fp.mul(factor, r1[static_cast<std::size_t>(i)]));
    }
    if (s0.size() < s1.size() + static_cast<std::size_t>(shift))
      s0.resize(s1.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < s1.size(); ++i) {
      auto& cell = s0[i + static_cast<std::size_t>(shift)];
      cell = fp.sub(cell, fp.mul(factor, s1[i]));
    }
    if (detail::poly_degree(r0) < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  // r1 is a nonzero constant c; inverse = s1 / c reduced mod defining poly
  std::uint32_t c_inv = fp.inv(r1[0]);
  detail::Poly res = detail::poly_mod(fp, s1, ctx_->poly);
  std::vector<std::uint32_t> d(ctx_->m, 0);
  for (std::size_t i = 0; i < res.size() && i < d.size(); ++i) d[i] = fp.mul(res[i], c_inv);
  return FieldElement(*this, std::move(d));
}

inline FieldElement ExtensionField::pow(const Element& a, std::uint64_t e) const {
  require_element(a);
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

inline FieldElement ExtensionField::frobenius(const Element& a, std::uint64_t i) const {
  require_element(a);
  FieldElement r = a;
  for (std::uint64_t step = 0, n = i % ctx_->m; step < n; ++step) r = pow(r, ctx_->fp.modulus());
  return r;
}

inline std::optional<std::uint64_t> ExtensionField::discrete_log(const Element& a) const {
  require_element(a);
  if (!ctx_->primitive || a.is_zero()) return std::nullopt;
  return ctx_->log[static_cast<std::size_t>(index_of(a))];
}

inline std::string ExtensionField::to_string(const Element& a) const {
  require_element(a);
  if (a.is_zero()) return "0";
  if (ctx_->m == 1) return std::to_string(a.digits()[0]);
  if (ctx_->primitive) {
    auto e = discrete_log(a);
    return "w^" + std::to_string(*e);
  }
  std::string out = "[";
  for (unsigned i = ctx_->m; i-- > 0;) {
    out += std::to_string(a.digits()[i]);
    if (i) out += ' ';
  }
  out += ']';
  return out;
}

inline FieldElement ExtensionField::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) fail(Errc::kFormatError, "empty field element");
  if (text == "0") return zero();
  if (text == "w") return generator();
  if (text.rfind("w^", 0) == 0) {
    std::uint64_t e = 0;
    std::string body(text.substr(2));
    try {
      std::size_t used = 0;
      e = std::stoull(body, &used);
      if (used != body.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(Errc::kFormatError, "bad exponent in power notation: " + std::string(text));
    }
    return pow(generator(), e);
  }
  if (text.front() == '[') {
    if (text.back() != ']') fail(Errc::kFormatError, "unterminated digit vector");
    std::istringstream in{std::string(text.substr(1, text.size() - 2))};
    std::vector<std::uint32_t> rev;
    std::int64_t v;
    while (in >> v) {
      if (v < 0 || v >= static_cast<std::int64_t>(ctx_->fp.modulus()))
        fail(Errc::kFormatError, "digit out of range");
      rev.push_back(static_cast<std::uint32_t>(v));
    }
    if (!in.eof()) fail(Errc::kFormatError, "bad digit vector");
    if (rev.size() != ctx_->m) fail(Errc::kFormatError, "digit vector must list m digits");
    // text form is most-significant digit first
    std::vector<std::uint32_t> d(rev.rbegin(), rev.rend());
    return from_digits(d);
  }
  // bare integer: value in [0, p) embedded as a constant
  try {
    std::size_t used = 0;
    std::string body(text);
    unsigned long v = std::stoul(body, &used);
    if (used != body.size()) throw std::invalid_argument("trailing");
    if (v >= ctx_->fp.modulus()) fail(Errc::kFormatError, "scalar out of range");
    return embed_scalar(static_cast<std::uint32_t>(v));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::kFormatError, "unrecognized field element: " + std::string(text));
  }
}

// F_p-valued matrix lifted into GF(p^m) (entries become constant polynomials).
inline Matrix<FieldElement> embed(const ExtensionField& f, const Matrix<std::uint32_t>& a) {
  Matrix<FieldElement> out(a.rows(), a.cols(), f.zero());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = f.embed_scalar(a.at(r, c));
  return out;
}

using FpMatrix = Matrix<std::uint32_t>;
using ExtMatrix = Matrix<FieldElement>;

}  // namespace rtsss

#endif  // RTSSS_GF_HPP
