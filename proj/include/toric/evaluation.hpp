#pragma once

// Evaluation of monomials on an enumerated point set and the rank route for
// the Hilbert function.

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/errors.hpp"
#include "toric/groebner.hpp"
#include "toric/linalg.hpp"
#include "toric/toricset.hpp"

namespace toric {

/// Discrete logs of the coordinates of every point (all coordinates are units).
class PointLogs {
 public:
  explicit PointLogs(const PointSet& X) : f_(X.field()), s_(X.width()), m_(X.size()) {
    logs_.resize(s_ * m_);
    for (std::size_t j = 0; j < m_; ++j) {
      auto p = X.point(j);
      for (std::size_t i = 0; i < s_; ++i) logs_[i * m_ + j] = f_.discrete_log(p[i]);
    }
  }

  std::size_t size() const { return m_; }

  /// (m(P_1), ..., m(P_m)).
  std::vector<Code> evaluate(const Monomial& mono) const {
    const std::uint64_t qm1 = f_.q() - 1;
    std::vector<std::uint64_t> acc(m_, 0);
    for (std::size_t i = 0; i < s_; ++i) {
      if (!mono.e[i]) continue;
      const std::uint64_t e = mono.e[i];
      const std::uint32_t* row = logs_.data() + i * m_;
      for (std::size_t j = 0; j < m_; ++j) acc[j] += e * row[j];
    }
    std::vector<Code> v(m_);
    for (std::size_t j = 0; j < m_; ++j) v[j] = f_.exp(static_cast<std::int64_t>(acc[j] % qm1));
    return v;
  }

  std::vector<Code> evaluate(const Polynomial& f) const {
    std::vector<Code> v(m_, 0);
    for (const auto& t : f.terms()) {
      const auto mv = evaluate(t.m);
      for (std::size_t j = 0; j < m_; ++j) v[j] = f_.add(v[j], f_.mul(t.c, mv[j]));
    }
    return v;
  }

 private:
  FiniteField f_;
  std::size_t s_, m_;
  std::vector<std::uint32_t> logs_;
};

/// Number of monomials of degree d in s variables.
inline std::uint64_t monomial_count(std::size_t s, std::uint32_t d) {
  if (s == 0) return d == 0 ? 1 : 0;
  // C(s+d-1, d) with saturation at 2^63
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= d; ++i) {
    r = r * (s - 1 + i) / i;
    if (r > (static_cast<unsigned __int128>(1) << 63)) return std::uint64_t(1) << 63;
  }
  return static_cast<std::uint64_t>(r);
}

/// All monomials of degree d, descending in grevlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t s, std::uint32_t d) {
  return standard_monomials({}, s, d, MonomialOrder::grevlex(s));
}

struct RankOptions {
  std::uint64_t budget = 500'000'000;  // matrix entries touched
};

/// H_X(d) = rank of the evaluation matrix of all degree-d monomials on X.
inline std::uint64_t hilbert_function_rank(const PointSet& X, std::uint32_t d,
                                           const RankOptions& opt = {},
                                           const PointLogs* logs = nullptr) {
  const std::size_t s = X.width(), m = X.size();
  const std::uint64_t N = monomial_count(s, d);
  if (N > opt.budget / std::max<std::size_t>(m, 1))
    fail(ErrorCode::BudgetExceeded, "evaluation matrix for d=" + std::to_string(d) +
                                        " has " + std::to_string(N) + " x " +
                                        std::to_string(m) + " entries");
  std::optional<PointLogs> local;
  if (!logs) local.emplace(X);
  const PointLogs& L = logs ? *logs : *local;
  EchelonBasis basis(X.field(), m);
  std::uint64_t touched = 0;
  for (const auto& mono : monomials_of_degree(s, d)) {
    basis.insert(L.evaluate(mono));
    touched += m;
    if (touched + basis.work() > opt.budget)
      fail(ErrorCode::BudgetExceeded, "rank computation for d=" + std::to_string(d) +
                                          " exceeded " + std::to_string(opt.budget) +
                                          " entries touched");
    if (basis.rank() == m) break;
  }
  return basis.rank();
}

/// dim I(X)_d = dim S_d - H_X(d), from the evaluation matrix alone.
inline std::uint64_t vanishing_ideal_degreewise_oracle(const PointSet& X, std::uint32_t d,
                                                       const RankOptions& opt = {}) {
  return monomial_count(X.width(), d) - hilbert_function_rank(X, d, opt);
}

}  // namespace toric
