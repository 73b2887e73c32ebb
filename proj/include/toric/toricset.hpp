#pragma once

// Enumeration of the affine and projective toric sets X*, X parameterized by
// Laurent monomials over a finite field, the kernel of theta and the
// integral points of its polytope.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/gf.hpp"
#include "toric/zlat.hpp"

namespace toric {

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // monomial evaluations
  unsigned threads = 1;
};

/// Scales a nonzero vector so its first nonzero coordinate becomes 1.
inline std::vector<Code> canonicalize(const FiniteField& f, std::vector<Code> x) {
  auto it = std::find_if(x.begin(), x.end(), [](Code c) { return c != 0; });
  if (it == x.end()) fail(ErrorCode::ZeroPoint, "the zero vector is not a projective point");
  const Code inv = f.inv(*it);
  for (auto& c : x) c = f.mul(c, inv);
  return x;
}

/// Sorted, duplicate-free list of points of width `s`, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  PointSet(FiniteField field, std::size_t s, std::vector<Code> data)
      : field_(std::move(field)), s_(s), data_(std::move(data)) {}

  const FiniteField& field() const { return field_; }
  std::size_t width() const { return s_; }
  std::size_t size() const { return s_ ? data_.size() / s_ : 0; }
  std::span<const Code> point(std::size_t i) const {
    return {data_.data() + i * s_, s_};
  }
  std::vector<Code> point_vector(std::size_t i) const {
    auto p = point(i);
    return {p.begin(), p.end()};
  }
  const std::vector<Code>& data() const { return data_; }

  bool contains(std::span<const Code> x) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto p = point(mid);
      if (std::lexicographical_compare(p.begin(), p.end(), x.begin(), x.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == size()) return false;
    auto p = point(lo);
    return std::equal(p.begin(), p.end(), x.begin(), x.end());
  }

  bool operator==(const PointSet& o) const { return s_ == o.s_ && data_ == o.data_; }

 protected:
  FiniteField field_;
  std::size_t s_ = 0;
  std::vector<Code> data_;
};

/// The algebraic toric set X in P^{s-1}; points canonical (first coordinate 1).
class ToricSet : public PointSet {
 public:
  ToricSet() = default;
  ToricSet(PointConfiguration config, PointSet points)
      : PointSet(std::move(points)), config_(std::move(config)) {}
  const PointConfiguration& config() const { return config_; }

 private:
  PointConfiguration config_;
};

namespace toricset_detail {

inline void sort_unique(std::vector<Code>& flat, std::size_t s) {
  if (s == 0 || flat.empty()) return;
  const std::size_t m = flat.size() / s;
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(flat.begin() + a * s, flat.begin() + (a + 1) * s,
                                        flat.begin() + b * s, flat.begin() + (b + 1) * s);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<Code> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t row = idx[k];
    if (!out.empty() && std::equal(out.end() - s, out.end(), flat.begin() + row * s))
      continue;
    out.insert(out.end(), flat.begin() + row * s, flat.begin() + (row + 1) * s);
  }
  flat = std::move(out);
}

inline std::vector<Code> merge_unique(const std::vector<Code>& a, const std::vector<Code>& b,
                                      std::size_t s) {
  std::vector<Code> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push = [&](const Code* p) {
    if (!out.empty() && std::equal(out.end() - s, out.end(), p)) return;
    out.insert(out.end(), p, p + s);
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && !std::lexicographical_compare(b.begin() + j, b.begin() + j + s,
                                                       a.begin() + i, a.begin() + i + s))) {
      push(a.data() + i);
      i += s;
    } else {
      push(b.data() + j);
      j += s;
    }
  }
  return out;
}

inline std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline void check_budget(const PointConfiguration& config, const FiniteField& f,
                         std::uint64_t budget) {
  const std::uint64_t tuples = checked_power(f.q() - 1, config.n(), budget);
  const std::uint64_t evals =
      tuples > budget / std::max<std::uint64_t>(1, config.s()) ? budget + 1
                                                               : tuples * config.s();
  if (evals > budget)
    fail(ErrorCode::BudgetExceeded,
         "enumeration needs (q-1)^n * s = " + std::to_string(f.q() - 1) + "^" +
             std::to_string(config.n()) + " * " + std::to_string(config.s()) +
             " evaluations, budget is " + std::to_string(budget));
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Runs `emit(logs)` over every ell in [0,q-2]^n whose first coordinate lies
// in [first_lo, first_hi), lexicographically; logs[i] = <w_i, ell> mod (q-1).
template <class Emit>
void walk_logs(const std::vector<IntVec>& w, std::size_t n, std::int64_t qm1,
               std::int64_t first_lo, std::int64_t first_hi, Emit&& emit) {
  const std::size_t s = w.size();
  std::vector<std::int64_t> ell(n, 0), acc(s, 0);
  if (n == 0) {
    if (first_lo == 0) emit(ell, acc);
    return;
  }
  ell[0] = first_lo;
  for (std::size_t i = 0; i < s; ++i) acc[i] = mod(w[i][0] * first_lo, qm1);
  while (true) {
    emit(ell, acc);
    std::size_t j = n;
    while (j-- > 0) {
      if (j == 0) {
        if (++ell[0] >= first_hi) return;
        for (std::size_t i = 0; i < s; ++i) acc[i] = mod(acc[i] + w[i][0], qm1);
        break;
      }
      if (ell[j] + 1 < qm1) {
        ++ell[j];
        for (std::size_t i = 0; i < s; ++i) acc[i] = mod(acc[i] + w[i][j], qm1);
        break;
      }
      for (std::size_t i = 0; i < s; ++i) acc[i] = mod(acc[i] - w[i][j] * ell[j], qm1);
      ell[j] = 0;
    }
  }
}

// Sorted distinct images of ell -> (beta^{<w_i, ell>})_i, partitioned over
// the first coordinate of ell; identical result for every thread count.
inline std::vector<Code> enumerate_images(const std::vector<IntVec>& w, std::size_t n,
                                          const FiniteField& f, unsigned threads) {
  const std::int64_t qm1 = f.q() - 1;
  const std::size_t s = w.size();
  const std::int64_t slices = n == 0 ? 1 : qm1;
  auto run = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Code> acc, buf;
    walk_logs(w, n, qm1, lo, hi, [&](const std::vector<std::int64_t>&,
                                     const std::vector<std::int64_t>& logs) {
      for (std::size_t i = 0; i < s; ++i) buf.push_back(f.exp(static_cast<std::uint64_t>(logs[i])));
      if (buf.size() >= (1u << 20) * s) {
        sort_unique(buf, s);
        acc = merge_unique(acc, buf, s);
        buf.clear();
      }
    });
    sort_unique(buf, s);
    return merge_unique(acc, buf, s);
  };
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(slices)));
  if (t == 1) return run(0, slices);
  std::vector<std::vector<Code>> parts(t);
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < t; ++k) {
    const std::int64_t lo = slices * k / t, hi = slices * (k + 1) / t;
    pool.emplace_back([&, k, lo, hi] { parts[k] = run(lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::vector<Code> out;
  for (auto& p : parts) out = merge_unique(out, p, s);
  return out;
}

}  // namespace toricset_detail

/// X = {[(x^{v_1},...,x^{v_s})] : x in (K*)^n}, canonical and sorted.
inline ToricSet enumerate_projective(const PointConfiguration& config, const FiniteField& f,
                                     const EnumerationOptions& opt = {}) {
  toricset_detail::check_budget(config, f, opt.budget);
  std::vector<IntVec> w;
  for (std::size_t i = 0; i < config.s(); ++i) {
    IntVec d(config.n());
    for (std::size_t j = 0; j < config.n(); ++j) d[j] = config[i][j] - config[0][j];
    w.push_back(std::move(d));
  }
  auto data = toricset_detail::enumerate_images(w, config.n(), f, opt.threads);
  return ToricSet(config, PointSet(f, config.s(), std::move(data)));
}

/// X* = {(x^{v_1},...,x^{v_s})} in (K*)^s, sorted.
inline PointSet enumerate_affine(const PointConfiguration& config, const FiniteField& f,
                                 const EnumerationOptions& opt = {}) {
  toricset_detail::check_budget(config, f, opt.budget);
  auto data = toricset_detail::enumerate_images(config.vectors(), config.n(), f, opt.threads);
  return PointSet(f, config.s(), std::move(data));
}

/// Projective torus T in P^{s-1}.
inline ToricSet projective_torus(const FiniteField& f, std::size_t s,
                                 const EnumerationOptions& opt = {}) {
  return enumerate_projective(PointConfiguration::torus(s), f, opt);
}

/// Canonical componentwise product of two points.
inline std::vector<Code> point_product(const FiniteField& f, std::span<const Code> a,
                                       std::span<const Code> b) {
  std::vector<Code> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], b[i]);
  return canonicalize(f, std::move(r));
}

// ---------------------------------------------------------------------------

/// ell in [0,q-2]^n with theta(beta^ell) = [1,...,1], and the unique
/// (lambda, mu) with ell*A = (q-1)*lambda + mu*1, 0 <= mu <= q-2.
struct KernelElement {
  IntVec ell;
  IntVec lambda;
  std::int64_t mu = 0;
  bool operator==(const KernelElement&) const = default;
};

struct KernelData {
  std::vector<KernelElement> elements;
  std::size_t size() const { return elements.size(); }
};

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Membership is tested in the field: every coordinate of theta(x) equal.
inline KernelData kernel_of_theta(const PointConfiguration& config, const FiniteField& f,
                                  const EnumerationOptions& opt = {}) {
  toricset_detail::check_budget(config, f, opt.budget);
  const std::size_t n = config.n(), s = config.s();
  const std::int64_t qm1 = f.q() - 1;
  KernelData out;
  std::vector<IntVec> zero_w(1, IntVec(n, 0));
  toricset_detail::walk_logs(
      zero_w, n, qm1, 0, n == 0 ? 1 : qm1,
      [&](const std::vector<std::int64_t>& ell, const std::vector<std::int64_t>&) {
        std::vector<Code> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = f.exp(static_cast<std::uint64_t>(ell[j]));
        Code first = 0;
        for (std::size_t i = 0; i < s; ++i) {
          Code c = 1;
          for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t e = config[i][j];
            if (e > 0) c = f.mul(c, f.pow(x[j], static_cast<std::uint64_t>(e)));
            if (e < 0) c = f.mul(c, f.inv(f.pow(x[j], static_cast<std::uint64_t>(-e))));
          }
          if (i == 0) first = c;
          else if (c != first) return;
        }
        KernelElement k;
        k.ell = IntVec(ell.begin(), ell.end());
        k.mu = f.discrete_log(first);
        for (std::size_t i = 0; i < s; ++i) {
          const std::int64_t num = dot(config[i], k.ell) - k.mu;
          if (num % qm1 != 0)
            fail(ErrorCode::StructureViolation, "kernel element without integral lambda");
          k.lambda.push_back(num / qm1);
        }
        out.elements.push_back(std::move(k));
      });
  return out;
}

/// Integral points (ell, lambda, mu) of the polytope
/// {ell*A = (q-1) lambda + mu 1, 0 <= ell_i <= q-2, 0 <= mu <= q-2},
/// enumerated over (ell, mu) with integer arithmetic only.
inline std::vector<KernelElement> polytope_integral_points(const PointConfiguration& config,
                                                           const FiniteField& f,
                                                           const EnumerationOptions& opt = {}) {
  toricset_detail::check_budget(config, f, opt.budget);
  const std::size_t n = config.n(), s = config.s();
  const std::int64_t qm1 = f.q() - 1;
  std::vector<KernelElement> out;
  IntVec ell(n, 0);
  while (true) {
    for (std::int64_t mu = 0; mu < qm1; ++mu) {
      KernelElement k{ell, {}, mu};
      bool ok = true;
      for (std::size_t i = 0; i < s && ok; ++i) {
        const std::int64_t num = dot(config[i], ell) - mu;
        if (num % qm1 != 0) ok = false;
        else k.lambda.push_back(floor_div(num, qm1));
      }
      if (ok) out.push_back(std::move(k));
    }
    std::size_t j = n;
    while (j > 0 && ell[j - 1] + 1 >= qm1) ell[--j] = 0;
    if (j == 0) break;
    ++ell[j - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

struct DivisibilityReport {
  std::size_t r = 0;              // rank of ZB
  std::vector<std::size_t> witness;  // 0-based indices of B'
  bool pointed = true;            // R+B lies in {x_{n+1} > 0}
  std::uint64_t cardinality = 0;
  BigInt modulus;                 // (q-1)^(r-1)
  bool divides = false;
};

/// Searches size-r independent subsets B' of B = {(v_i,1)} with
/// Z^{n+1}/ZB' torsion-free; the projection X -> X_{B'} then forces
/// (q-1)^(r-1) | |X|.
inline DivisibilityReport divisibility_check(const PointConfiguration& config,
                                             const FiniteField& f, std::uint64_t cardinality,
                                             std::uint64_t subset_budget = 1'000'000) {
  const auto lifted = config.lifted();
  DivisibilityReport rep;
  rep.cardinality = cardinality;
  rep.r = rank(IntMatrix::from_columns(lifted.vectors(), lifted.n()));
  const std::size_t s = lifted.s();
  std::vector<std::size_t> pick(rep.r);
  std::iota(pick.begin(), pick.end(), 0);
  std::uint64_t tried = 0;
  bool found = false;
  while (!found) {
    if (++tried > subset_budget)
      fail(ErrorCode::HypothesisNotVerified,
           "no torsion-free independent subset found within " +
               std::to_string(subset_budget) + " subsets");
    std::vector<IntVec> sub;
    for (auto i : pick) sub.push_back(lifted[i]);
    const auto m = IntMatrix::from_columns(sub, lifted.n());
    if (rank(m) == rep.r && torsion_invariants(sub, lifted.n()).empty()) {
      found = true;
      rep.witness = pick;
      break;
    }
    std::size_t k = rep.r;
    while (k > 0 && pick[k - 1] == s - rep.r + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < rep.r; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!found)
    fail(ErrorCode::HypothesisNotVerified,
         "no linearly independent subset B' of size " + std::to_string(rep.r) +
             " has torsion-free Z^{n+1}/ZB'");
  rep.modulus = 1;
  for (std::size_t i = 1; i < rep.r; ++i) rep.modulus *= (f.q() - 1);
  rep.divides = BigInt(cardinality) % rep.modulus == 0;
  return rep;
}

}  // namespace toric
