#pragma once

// Hilbert function, h-vector, degree and regularity index of S/I(X).

#include <cstdint>
#include <vector>

#include "toric/errors.hpp"
#include "toric/evaluation.hpp"
#include "toric/groebner.hpp"
#include "toric/ideals.hpp"

namespace toric {

struct HilbertProfile {
  std::vector<std::uint64_t> H;  // H_X(0..d_stop)
  std::vector<std::uint64_t> h;  // numerator h_0..h_r
  std::uint64_t degree = 0;
  std::uint32_t regularity = 0;
};

/// Standard monomials of degree d with respect to the reduced basis.
inline std::uint64_t hilbert_function_gb(const VanishingIdealResult& I, std::uint32_t d) {
  return count_standard_monomials(I.basis().leading_monomials(), I.ring()->nvars(), d);
}

/// h_i = dim (S/(I, t_v))_i, v = `variable` (default t_s); H is tabulated
/// through r + 2.
inline HilbertProfile hilbert_series(const VanishingIdealResult& I,
                                     std::optional<std::size_t> variable = std::nullopt,
                                     const GroebnerOptions& opt = {}) {
  const RingPtr& S = I.ring();
  const std::size_t s = S->nvars();
  const std::size_t v = variable.value_or(s - 1);
  if (v >= s) fail(ErrorCode::InvalidArgument, "variable index out of range");
  auto gens = I.generators();
  gens.push_back(Polynomial::variable(S, v));
  const auto leads = buchberger(gens, S, opt).leading_monomials();
  if (!is_artinian(leads, s))
    fail(ErrorCode::StructureViolation,
         "I + (" + S->names()[v] + ") is not zero-dimensional; h-vector undefined");
  HilbertProfile p;
  for (std::uint32_t d = 0;; ++d) {
    if (d > opt.max_degree)
      fail(ErrorCode::ResourceExceeded, "h-vector exceeds degree guard");
    const auto c = count_standard_monomials(leads, s, d);
    if (c == 0) break;
    p.h.push_back(c);
  }
  p.regularity = static_cast<std::uint32_t>(p.h.size() - 1);
  std::uint64_t acc = 0;
  for (std::uint32_t d = 0; d <= p.regularity + 2; ++d) {
    acc += d < p.h.size() ? p.h[d] : 0;
    p.H.push_back(acc);
  }
  p.degree = acc;
  return p;
}

/// Sum of h_i equals |X| and H reaches it at the regularity index.
inline bool degree_consistency(std::uint64_t cardinality, const HilbertProfile& p) {
  return p.degree == cardinality && p.regularity < p.H.size() &&
         p.H[p.regularity] == cardinality;
}

/// 1 = H(0) < H(1) < ... < H(r-1) < H(r) = H(r+1) = ... = degree.
inline bool hilbert_shape_ok(const std::vector<std::uint64_t>& H, std::uint64_t degree) {
  if (H.empty() || H[0] != 1) return false;
  bool reached = H[0] == degree;
  for (std::size_t d = 1; d < H.size(); ++d) {
    if (reached) {
      if (H[d] != degree) return false;
    } else {
      if (H[d] <= H[d - 1] || H[d] > degree) return false;
      reached = H[d] == degree;
    }
  }
  return true;
}

/// Coefficients of ((1 - t^{q-1}) / (1 - t))^{s-1}, the numerator for the
/// projective torus in P^{s-1}.
inline std::vector<std::uint64_t> torus_numerator(std::uint64_t q, std::size_t s) {
  std::vector<std::uint64_t> out{1};
  for (std::size_t k = 1; k < s; ++k) {
    std::vector<std::uint64_t> next(out.size() + q - 2, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j + 1 < q; ++j) next[i + j] += out[i];
    out = std::move(next);
  }
  return out;
}

/// H_X(d) for d in [lo, hi] by the rank route; stops at the first degree
/// that exceeds the budget and returns the values computed so far.
inline std::vector<std::uint64_t> hilbert_table_rank(const PointSet& X, std::uint32_t lo,
                                                     std::uint32_t hi,
                                                     const RankOptions& opt = {}) {
  const PointLogs logs(X);
  std::vector<std::uint64_t> out;
  for (std::uint32_t d = lo; d <= hi; ++d) {
    try {
      out.push_back(hilbert_function_rank(X, d, opt, &logs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      break;
    }
  }
  return out;
}

}  // namespace toric
