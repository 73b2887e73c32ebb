#pragma once

// Finite fields F_q, q = p^u <= 2^16, backed by log/antilog tables over a
// fixed generator of the unit group. Elements are encoded as integers in
// [0, q): the residue c_0 + c_1 x + ... + c_{u-1} x^{u-1} maps to
// c_0 + c_1 p + ... + c_{u-1} p^{u-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Code = std::uint32_t;

namespace gf_detail {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, lowest coefficient first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b,
                             const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

inline PrimePoly decode(Code c, std::uint32_t p, std::uint32_t u) {
  PrimePoly f(u, 0);
  for (std::uint32_t i = 0; i < u; ++i) {
    f[i] = c % p;
    c /= p;
  }
  trim(f);
  return f;
}

inline Code encode(const PrimePoly& f, std::uint32_t p) {
  Code c = 0;
  for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
  return c;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index`.
inline PrimePoly monic_from_index(std::uint64_t index, std::uint32_t p,
                                  std::uint32_t degree) {
  PrimePoly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::uint32_t u = static_cast<std::uint32_t>(f.size() - 1);
  if (u <= 1) return true;
  // no root
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return false;
  }
  // trial division by every monic factor of degree 2..u/2
  for (std::uint32_t deg = 2; deg <= u / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, p, deg), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace gf_detail

/// Immutable finite field. Copies share the same tables.
class FiniteField {
 public:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t u = 0;
    std::uint32_t q = 0;
    gf_detail::PrimePoly modulus;  // empty when u == 1
    Code generator = 0;
    std::vector<Code> antilog;            // antilog[k] = beta^k, k < q-1
    std::vector<std::uint32_t> log;       // log[x] for x != 0; log[0] unused
    std::vector<std::int32_t> zech;       // log(1 + beta^k), -1 when zero
    Code minus_one = 0;
  };

  FiniteField() = default;

  /// Builds F_{p^u}. The modulus is the first monic irreducible polynomial in
  /// encoding order; the generator is the smallest code of order q-1 unless
  /// `generator` names another primitive element.
  static FiniteField make(std::int64_t p, std::int64_t u,
                          std::optional<Code> generator = std::nullopt) {
    using namespace gf_detail;
    if (!is_prime(p))
      fail(ErrorCode::NonPrimeCharacteristic,
           "characteristic " + std::to_string(p) + " is not prime");
    if (u < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < u; ++i) {
      q *= p;
      if (q > (1 << 16))
        fail(ErrorCode::FieldTooLarge,
             std::to_string(p) + "^" + std::to_string(u) + " exceeds 2^16");
    }
    auto t = std::make_shared<Tables>();
    t->p = static_cast<std::uint32_t>(p);
    t->u = static_cast<std::uint32_t>(u);
    t->q = static_cast<std::uint32_t>(q);

    if (u > 1) {
      const std::uint64_t candidates = static_cast<std::uint64_t>(q);
      for (std::uint64_t idx = 0; idx < candidates; ++idx) {
        auto f = monic_from_index(idx, t->p, t->u);
        if (is_irreducible(f, t->p)) {
          t->modulus = std::move(f);
          break;
        }
      }
      if (t->modulus.empty())
        fail(ErrorCode::NoIrreducibleFound, "no irreducible modulus found");
    }

    auto slow_mul = [&](Code a, Code b) -> Code {
      if (t->u == 1) return static_cast<Code>((std::uint64_t(a) * b) % t->p);
      return encode(poly_mulmod(decode(a, t->p, t->u), decode(b, t->p, t->u),
                                t->modulus, t->p),
                    t->p);
    };

    const std::uint32_t order = t->q - 1;
    auto try_generator = [&](Code g) -> bool {
      std::vector<Code> powers;
      powers.reserve(order);
      Code x = 1;
      for (std::uint32_t k = 0; k < order; ++k) {
        if (k > 0 && x == 1) return false;
        powers.push_back(x);
        x = slow_mul(x, g);
      }
      if (x != 1) return false;
      t->generator = g;
      t->antilog = std::move(powers);
      return true;
    };

    if (generator) {
      if (*generator == 0 || *generator >= t->q || !try_generator(*generator))
        fail(ErrorCode::InvalidArgument,
             "requested generator does not generate the unit group");
    } else {
      bool found = false;
      for (Code g = 1; g < t->q && !found; ++g) found = try_generator(g);
      if (!found)
        fail(ErrorCode::NoIrreducibleFound, "unit group has no generator");
    }

    t->log.assign(t->q, 0);
    for (std::uint32_t k = 0; k < order; ++k) t->log[t->antilog[k]] = k;

    auto slow_add = [&](Code a, Code b) -> Code {
      if (t->u == 1) return (a + b) % t->p;
      Code r = 0, mul = 1;
      for (std::uint32_t i = 0; i < t->u; ++i) {
        r += ((a % t->p + b % t->p) % t->p) * mul;
        a /= t->p;
        b /= t->p;
        mul *= t->p;
      }
      return r;
    };
    t->zech.assign(order, -1);
    for (std::uint32_t k = 0; k < order; ++k) {
      const Code s = slow_add(1, t->antilog[k]);
      t->zech[k] = s == 0 ? -1 : static_cast<std::int32_t>(t->log[s]);
    }
    // -1 is beta^((q-1)/2) for odd q and 1 in characteristic 2
    t->minus_one = (t->p == 2) ? 1 : t->antilog[order / 2];

    FiniteField field;
    field.t_ = std::move(t);
    return field;
  }

  std::uint32_t p() const { return t_->p; }
  std::uint32_t u() const { return t_->u; }
  std::uint32_t q() const { return t_->q; }
  Code generator() const { return t_->generator; }
  const gf_detail::PrimePoly& modulus() const { return t_->modulus; }
  bool is_prime_field() const { return t_->u == 1; }
  const Tables& tables() const { return *t_; }
  bool valid() const { return t_ != nullptr; }

  /// Same arithmetic (the generator does not affect it).
  bool same_field(const FiniteField& o) const {
    return t_ == o.t_ || (t_ && o.t_ && t_->p == o.t_->p && t_->u == o.t_->u &&
                          t_->modulus == o.t_->modulus);
  }

  Code add(Code a, Code b) const {
    if (t_->u == 1) {
      const Code s = a + b;
      return s >= t_->p ? s - t_->p : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t n = t_->q - 1;
    const std::uint32_t la = t_->log[a], lb = t_->log[b];
    const std::int32_t z = t_->zech[(lb + n - la) % n];
    if (z < 0) return 0;
    return t_->antilog[(la + static_cast<std::uint32_t>(z)) % n];
  }

  Code neg(Code a) const {
    if (a == 0) return 0;
    if (t_->u == 1) return t_->p - a;
    return mul(a, t_->minus_one);
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (t_->u == 1)
      return static_cast<Code>((std::uint64_t(a) * b) % t_->p);
    const std::uint32_t n = t_->q - 1;
    return t_->antilog[(t_->log[a] + t_->log[b]) % n];
  }

  Code inv(Code a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t n = t_->q - 1;
    return t_->antilog[(n - t_->log[a]) % n];
  }

  Code div(Code a, Code b) const {
    if (b == 0) fail(ErrorCode::DivisionByZero, "division by zero");
    return mul(a, inv(b));
  }

  /// Exponent is reduced mod q-1 for a nonzero base; 0^0 = 1.
  Code pow(Code a, std::int64_t e) const {
    if (a == 0) {
      if (e == 0) return 1;
      if (e < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
      return 0;
    }
    const std::int64_t n = t_->q - 1;
    std::int64_t k = (static_cast<std::int64_t>(t_->log[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return t_->antilog[static_cast<std::size_t>(k)];
  }

  /// beta^k for any integer k.
  Code exp(std::int64_t k) const {
    const std::int64_t n = t_->q - 1;
    k %= n;
    if (k < 0) k += n;
    return t_->antilog[static_cast<std::size_t>(k)];
  }

  std::uint32_t discrete_log(Code a) const {
    if (a == 0) fail(ErrorCode::LogOfZero, "discrete log of zero");
    return t_->log[a];
  }

  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(t_->p);
    if (r < 0) r += t_->p;
    return static_cast<Code>(r);
  }

  /// Invariant checks on the tables; returns human-readable failures.
  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    const std::uint32_t n = t_->q - 1;
    if (t_->antilog.size() != n) {
      bad.push_back("antilog table has wrong length");
      return bad;
    }
    std::vector<bool> seen(t_->q, false);
    for (std::uint32_t k = 0; k < n; ++k) {
      const Code x = t_->antilog[k];
      if (x == 0 || x >= t_->q || seen[x]) {
        bad.push_back("antilog table is not a bijection onto the unit group");
        break;
      }
      seen[x] = true;
    }
    for (std::uint32_t k = 0; k < n && bad.empty(); ++k) {
      if (t_->log[t_->antilog[k]] != k) {
        bad.push_back("log(antilog(k)) != k");
        break;
      }
    }
    if (n > 0 && t_->antilog[0] != 1) bad.push_back("beta^0 != 1");
    if (t_->u > 1 && !gf_detail::is_irreducible(t_->modulus, t_->p))
      bad.push_back("modulus is reducible");
    return bad;
  }

  /// Copy with a swapped pair of antilog entries; used to exercise the
  /// invariant checks.
  FiniteField with_corrupted_tables() const {
    auto t = std::make_shared<Tables>(*t_);
    if (t->antilog.size() >= 2) {
      t->antilog[1] = t->antilog[0];
    } else if (!t->antilog.empty()) {
      t->antilog[0] = 0;
    }
    FiniteField f;
    f.t_ = std::move(t);
    return f;
  }

 private:
  std::shared_ptr<const Tables> t_;
};

inline FiniteField make_field(std::int64_t p, std::int64_t u) {
  return FiniteField::make(p, u);
}

/// Element bound to its field. Mixing fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FiniteField f, Code c) : f_(std::move(f)), c_(c) {
    if (c_ >= f_.q()) fail(ErrorCode::InvalidArgument, "code out of range");
  }

  static FieldElement zero(const FiniteField& f) { return {f, 0}; }
  static FieldElement one(const FiniteField& f) { return {f, 1}; }
  static FieldElement generator(const FiniteField& f) {
    return {f, f.generator()};
  }

  Code code() const { return c_; }
  const FiniteField& field() const { return f_; }
  bool is_zero() const { return c_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return {f_, f_.add(c_, o.c_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return {f_, f_.sub(c_, o.c_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return {f_, f_.mul(c_, o.c_)};
  }
  FieldElement operator/(const FieldElement& o) const {
    check(o);
    return {f_, f_.div(c_, o.c_)};
  }
  FieldElement operator-() const { return {f_, f_.neg(c_)}; }
  FieldElement inv() const { return {f_, f_.inv(c_)}; }
  FieldElement pow(std::int64_t e) const { return {f_, f_.pow(c_, e)}; }
  std::uint32_t discrete_log() const { return f_.discrete_log(c_); }

  bool operator==(const FieldElement& o) const {
    return f_.same_field(o.f_) && c_ == o.c_;
  }

 private:
  void check(const FieldElement& o) const {
    if (!f_.same_field(o.f_))
      fail(ErrorCode::FieldMismatch, "operands belong to different fields");
  }

  FiniteField f_;
  Code c_ = 0;
};

}  // namespace toric
