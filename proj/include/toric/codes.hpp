#pragma once

// Parameterized codes C_X(d): generator matrices, exact minimum distance at
// desk scale, and the Singleton, graph and torus bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/evaluation.hpp"
#include "toric/gf.hpp"
#include "toric/groebner.hpp"
#include "toric/hilbert.hpp"
#include "toric/ideals.hpp"
#include "toric/linalg.hpp"
#include "toric/toricset.hpp"

namespace toric {

struct GeneratorMatrix {
  FiniteField field;
  std::uint32_t d = 0;
  std::vector<Monomial> basis;           // standard monomials, grevlex descending
  std::vector<std::vector<Code>> rows;   // k rows of length m
  std::size_t k() const { return rows.size(); }
  std::size_t m() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Rows are evaluations of the degree-d standard monomials of I at the
/// canonical points of X (t1 = 1 there, so f/t1^d is plain evaluation).
inline GeneratorMatrix generator_matrix(const PointSet& X, const VanishingIdealResult& I,
                                        std::uint32_t d,
                                        std::uint64_t budget = 500'000'000) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "code degree must be >= 1");
  const std::size_t s = I.ring()->nvars();
  const auto leads = I.basis().leading_monomials();
  const auto count = count_standard_monomials(leads, s, d);
  if (count > budget / std::max<std::size_t>(1, X.size()))
    fail(ErrorCode::BudgetExceeded, "generator matrix would have " + std::to_string(count) +
                                        " x " + std::to_string(X.size()) + " entries");
  GeneratorMatrix G;
  G.field = X.field();
  G.d = d;
  G.basis = standard_monomials(leads, s, d, MonomialOrder::grevlex(s));
  const PointLogs logs(X);
  for (const auto& mono : G.basis) G.rows.push_back(logs.evaluate(mono));
  return G;
}

inline std::uint64_t singleton_bound(std::uint64_t m, std::uint64_t k) {
  if (k < 1 || k > m)
    fail(ErrorCode::InvalidDimension, "need 1 <= k <= m, got k=" + std::to_string(k) +
                                          ", m=" + std::to_string(m));
  return m - k + 1;
}

namespace codes_detail {

inline double binom(std::uint64_t n, std::uint64_t k) {
  double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// Weight of every codeword with leading coefficient 1, walking the remaining
// coefficients in reflected q-ary Gray order so each step adds one scaled row.
inline std::uint64_t min_weight_codewords(const GeneratorMatrix& G) {
  const FiniteField& f = G.field;
  const std::size_t k = G.k(), m = G.m();
  const std::uint32_t q = f.q();
  std::uint64_t best = m;
  std::vector<Code> word(m);
  for (std::size_t lead = 0; lead < k; ++lead) {
    word = G.rows[lead];
    const std::size_t L = k - 1 - lead;
    std::vector<std::uint32_t> digit(L, 0);
    std::vector<int> dir(L, 1);
    while (true) {
      std::uint64_t w = 0;
      for (Code c : word) w += c != 0;
      if (w < best) best = w;
      if (best == 1) return best;
      std::size_t i = 0;
      while (i < L) {
        const std::int64_t next = std::int64_t(digit[i]) + dir[i];
        if (next >= 0 && next < std::int64_t(q)) break;
        dir[i] = -dir[i];
        ++i;
      }
      if (i == L) break;
      const Code from = digit[i];
      digit[i] = static_cast<std::uint32_t>(std::int64_t(digit[i]) + dir[i]);
      const Code delta = f.sub(digit[i], from);
      const auto& row = G.rows[lead + 1 + i];
      for (std::size_t j = 0; j < m; ++j)
        if (row[j]) word[j] = f.add(word[j], f.mul(delta, row[j]));
    }
  }
  return best;
}

// delta = least w such that deleting some w columns drops the rank below k.
inline std::uint64_t min_weight_supports(const GeneratorMatrix& G) {
  const std::size_t k = G.k(), m = G.m();
  std::vector<std::vector<Code>> cols(m, std::vector<Code>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < m; ++j) cols[j][r] = G.rows[r][j];
  for (std::size_t w = 1; w <= m - k + 1; ++w) {
    std::vector<std::size_t> del(w);
    for (std::size_t i = 0; i < w; ++i) del[i] = i;
    while (true) {
      EchelonBasis b(G.field, k);
      std::size_t next = 0;
      for (std::size_t j = 0; j < m && b.rank() < k; ++j) {
        if (next < w && del[next] == j) {
          ++next;
          continue;
        }
        b.insert(cols[j]);
      }
      if (b.rank() < k) return w;
      std::size_t i = w;
      while (i > 0 && del[i - 1] == m - w + i - 1) --i;
      if (i == 0) break;
      ++del[i - 1];
      for (std::size_t j = i; j < w; ++j) del[j] = del[j - 1] + 1;
    }
  }
  return m - k + 1;
}

}  // namespace codes_detail

struct DistanceOptions {
  double budget = 1e9;  // codewords (or column subsets) times length
};

/// Estimated cost of the two exact strategies.
struct DistanceCost {
  double codewords;
  double supports;
};

inline DistanceCost minimum_distance_cost(std::uint64_t q, std::uint64_t k, std::uint64_t m) {
  DistanceCost c;
  c.codewords = (std::pow(double(q), double(k)) - 1) / double(q - 1) * double(m);
  double subsets = 0;
  for (std::uint64_t w = 1; w + k <= m + 1; ++w) subsets += codes_detail::binom(m, w);
  c.supports = subsets * double(k) * double(m);
  return c;
}

inline DistanceCost minimum_distance_cost(const GeneratorMatrix& G) {
  return minimum_distance_cost(G.field.q(), G.k(), G.m());
}

/// Exact minimum Hamming weight of a nonzero codeword.
inline std::uint64_t minimum_distance_exhaustive(const GeneratorMatrix& G,
                                                 const DistanceOptions& opt = {}) {
  if (G.k() == 0) fail(ErrorCode::InvalidDimension, "code has dimension 0");
  const auto c = minimum_distance_cost(G);
  if (std::min(c.codewords, c.supports) > opt.budget)
    fail(ErrorCode::BudgetExceeded,
         "exact minimum distance needs ~" + std::to_string(std::min(c.codewords, c.supports)) +
             " operations, budget is " + std::to_string(opt.budget));
  return c.codewords <= c.supports ? codes_detail::min_weight_codewords(G)
                                   : codes_detail::min_weight_supports(G);
}

// ---------------------------------------------------------------------------

struct GraphBound {
  std::uint64_t value = 1;
  std::uint64_t k = 0;     // d = k(q-2) + l
  std::uint64_t l = 0;
  bool constant = false;   // d >= (q-2)(n-1)
};

inline GraphBound graph_bound(std::uint64_t n, std::uint64_t q, std::uint64_t d) {
  if (q < 3) fail(ErrorCode::FieldTooSmall, "graph bound needs q >= 3, got q=" + std::to_string(q));
  if (n < 3) fail(ErrorCode::InvalidArgument, "graph bound needs n >= 3");
  if (d < 1) fail(ErrorCode::InvalidArgument, "graph bound needs d >= 1");
  GraphBound g;
  g.k = (d - 1) / (q - 2);
  g.l = d - g.k * (q - 2);
  if (d >= (q - 2) * (n - 1)) {
    g.constant = true;
    g.value = 1;
    return g;
  }
  g.value = q - 1 - g.l;
  for (std::uint64_t i = 0; i + g.k + 2 < n; ++i) g.value *= (q - 1);
  return g;
}

struct WitnessPolynomial {
  Polynomial F;
  std::uint64_t k = 0, l = 0;
  std::uint64_t zeros = 0;     // enumerated on the torus in P^{n-1}
  std::uint64_t expected = 0;  // (q-1)^{n-k-2} [(q-1)^{k+1} - (q-1) + l]
  std::uint64_t torus_size = 0;
};

/// F_1 = f_1...f_k g_l with f_i = prod_{j=1}^{q-2} (beta^j t_1 - t_{i+1}) and
/// g_l = prod_{j=1}^{l} (beta^j t_1 - t_{k+2}).
inline WitnessPolynomial witness_polynomial(std::uint64_t n, const FiniteField& f,
                                            std::uint64_t d) {
  const std::uint64_t q = f.q();
  if (q < 3) fail(ErrorCode::FieldTooSmall, "witness polynomial needs q >= 3");
  if (n < 3) fail(ErrorCode::InvalidArgument, "witness polynomial needs n >= 3");
  if (d < 1 || d + 1 > (q - 2) * (n - 1))
    fail(ErrorCode::DegreeOutOfRange, "d=" + std::to_string(d) + " outside [1, " +
                                          std::to_string((q - 2) * (n - 1) - 1) + "]");
  const auto gb = graph_bound(n, q, d);
  WitnessPolynomial w;
  w.k = gb.k;
  w.l = gb.l;
  auto S = PolyRing::standard(f, n);
  auto factor = [&](std::uint64_t j, std::size_t var) {
    return Polynomial::monomial(S, Monomial::variable(0), f.exp(static_cast<std::int64_t>(j))) -
           Polynomial::variable(S, var);
  };
  Polynomial F = Polynomial::constant(S, 1);
  for (std::uint64_t i = 1; i <= w.k; ++i)
    for (std::uint64_t j = 1; j + 2 <= q; ++j) F = F * factor(j, i);
  for (std::uint64_t j = 1; j <= w.l; ++j) F = F * factor(j, w.k + 1);
  w.F = std::move(F);

  const auto T = projective_torus(f, n);
  const PointLogs logs(T);
  for (Code c : logs.evaluate(w.F)) w.zeros += c == 0;
  w.torus_size = T.size();
  std::uint64_t pk1 = 1;
  for (std::uint64_t i = 0; i < w.k + 1; ++i) pk1 *= (q - 1);
  w.expected = pk1 - (q - 1) + w.l;
  for (std::uint64_t i = 0; i + w.k + 2 < n; ++i) w.expected *= (q - 1);
  return w;
}

/// Closed-form minimum distance of C_T(d) for the torus in P^1 or P^2.
inline std::uint64_t torus_formulas(unsigned dim_proj, std::uint64_t q, std::uint64_t d) {
  if (q < 3) fail(ErrorCode::FieldTooSmall, "torus formulas need q >= 3");
  if (d < 1) fail(ErrorCode::InvalidArgument, "torus formulas need d >= 1");
  if (dim_proj == 1) return d + 3 <= q ? q - 1 - d : 1;
  if (dim_proj == 2) {
    if (d + 2 <= q) return (q - 1) * (q - 1) - d * (q - 1);
    if (d + 5 <= 2 * q) return 2 * q - d - 3;
    return 1;
  }
  fail(ErrorCode::InvalidArgument, "torus formulas cover P^1 and P^2 only");
}

// ---------------------------------------------------------------------------

struct CodeParameters {
  std::uint64_t q = 0, s = 0, d = 0;
  std::uint64_t m = 0;  // length |X|
  std::uint64_t k = 0;  // dimension H_X(d)
  std::optional<std::uint64_t> exact;
  std::uint64_t lower = 1, upper = 0;
  std::uint64_t singleton = 0;
  std::optional<std::uint64_t> graph;    // graph bound, connected non-bipartite only
  std::optional<std::uint64_t> formula;  // torus closed form
  std::string provenance;                // how the distance was obtained
};

struct CodeOptions {
  DistanceOptions distance;
  std::uint64_t matrix_budget = 500'000'000;
  std::optional<std::uint64_t> graph_vertices;  // enables the graph bound
  std::optional<unsigned> torus_dim;            // enables the torus formula
  std::optional<std::uint64_t> dimension;       // H_X(d) if already known
  bool exact = true;
};

inline CodeParameters code_parameters(const PointSet& X, const VanishingIdealResult& I,
                                      std::uint32_t d, const CodeOptions& opt = {}) {
  CodeParameters p;
  p.q = X.field().q();
  p.s = X.width();
  p.d = d;
  p.m = X.size();
  p.k = opt.dimension ? *opt.dimension : hilbert_function_gb(I, d);
  p.singleton = singleton_bound(p.m, p.k);
  p.upper = p.singleton;
  if (opt.graph_vertices && p.q >= 3) {
    p.graph = graph_bound(*opt.graph_vertices, p.q, d).value;
    p.upper = std::min(p.upper, *p.graph);
  }
  if (opt.torus_dim && p.q >= 3) p.formula = torus_formulas(*opt.torus_dim, p.q, d);
  if (p.upper == 1) {
    p.exact = 1;
    p.lower = 1;
    p.provenance = "bound";
    return p;
  }
  const auto cost = minimum_distance_cost(p.q, p.k, p.m);
  if (opt.exact && std::min(cost.codewords, cost.supports) <= opt.distance.budget) {
    try {
      const auto G = generator_matrix(X, I, d, opt.matrix_budget);
      p.exact = minimum_distance_exhaustive(G, opt.distance);
      p.lower = p.upper = *p.exact;
      p.provenance = "exhaustive";
      return p;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
  }
  p.provenance = "interval";
  return p;
}

/// delta strictly decreasing while > 1, then constantly 1.
inline bool distance_monotonicity_check(const std::vector<std::uint64_t>& deltas) {
  for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
    if (deltas[i] > 1 && !(deltas[i] > deltas[i + 1])) return false;
    if (deltas[i] == 1 && deltas[i + 1] != 1) return false;
  }
  return true;
}

inline bool mds_check(const CodeParameters& p) {
  if (!p.exact) fail(ErrorCode::DistanceUnknown, "minimum distance is only bounded");
  return *p.exact == p.m - p.k + 1;
}

}  // namespace toric
