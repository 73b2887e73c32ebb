#pragma once

// Vanishing ideals of algebraic toric sets: elimination and saturation
// routes, structure checks and the parameterization of V_A.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/evaluation.hpp"
#include "toric/gf.hpp"
#include "toric/groebner.hpp"
#include "toric/linalg.hpp"
#include "toric/mpoly.hpp"
#include "toric/toricset.hpp"
#include "toric/zlat.hpp"

namespace toric {

enum class IdealRoute { Elimination, Saturation };

inline const char* to_string(IdealRoute r) {
  return r == IdealRoute::Elimination ? "elimination" : "saturation";
}

struct IdealOptions {
  GroebnerOptions gb;
  OrderKind elimination_kind = OrderKind::Grevlex;
};

/// Generators of an ideal of S = K[t1..ts]; `generators` is the reduced
/// grevlex basis.
class VanishingIdealResult {
 public:
  VanishingIdealResult() = default;
  VanishingIdealResult(RingPtr ring, std::vector<Polynomial> gens, IdealRoute route,
                       bool certified)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        route_(route),
        certified_(certified),
        cache_(std::make_shared<Cache>()) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  IdealRoute route() const { return route_; }
  bool equality_certified() const { return certified_; }

  GroebnerBasis basis() const { return {ring_, gens_, true}; }

  /// Reduced basis for another order, computed once per order.
  GroebnerBasis basis_in(const MonomialOrder& order, const GroebnerOptions& opt = {}) const {
    if (order == ring_->order()) return basis();
    const std::string key = order.describe();
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
    const auto r = with_order(ring_, order);
    auto gb = buchberger(in_ring(gens_, r), r, opt);
    cache_->by_order.emplace(key, gb);
    return gb;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, GroebnerBasis> by_order;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  IdealRoute route_ = IdealRoute::Elimination;
  bool certified_ = false;
  std::shared_ptr<Cache> cache_;
};

/// t_i^{q-1} - t_1^{q-1}, i = 2..s.
inline std::vector<Polynomial> torus_binomials(const RingPtr& S) {
  const auto e = static_cast<std::uint16_t>(S->field().q() - 1);
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i < S->nvars(); ++i)
    out.push_back(Polynomial::binomial(S, Monomial::variable(i, e), Monomial::variable(0, e)));
  return out;
}

namespace ideals_detail {

inline Monomial shifted(const IntVec& exps, std::size_t offset) {
  Monomial m;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] < 0 || exps[j] > 0xFFFF)
      fail(ErrorCode::ResourceExceeded, "exponent out of monomial range");
    m.e[offset + j] = static_cast<std::uint16_t>(exps[j]);
  }
  m.refresh();
  return m;
}

}  // namespace ideals_detail

/// I(X) = ({t_i - y^{v_i} z} U {y_j^{q-1} - 1}) ∩ S, or with negative
/// exponents ({y^{v_i-} t_i - y^{v_i+} z} U {y_j^{q-1} - 1} U {y_0 y_1...y_n - 1}) ∩ S.
inline VanishingIdealResult vanishing_ideal_elimination(const PointConfiguration& config,
                                                        const FiniteField& f,
                                                        const IdealOptions& opt = {}) {
  const std::size_t n = config.n(), s = config.s();
  const bool laurent = config.has_negative_exponent();
  const std::size_t y_off = laurent ? 1 : 0;
  const std::size_t z = y_off + n;
  const std::size_t aux = z + 1;
  std::vector<std::string> names;
  if (laurent) names.push_back("y0");
  for (std::size_t j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("z");
  for (std::size_t i = 1; i <= s; ++i) names.push_back("t" + std::to_string(i));
  auto big = PolyRing::make(f, names, MonomialOrder::grevlex(names.size()));

  std::vector<Polynomial> gens;
  const Monomial zm = Monomial::variable(z);
  for (std::size_t i = 0; i < s; ++i) {
    const Monomial ti = Monomial::variable(aux + i);
    const Monomial plus = ideals_detail::shifted(config.positive_part(i), y_off);
    const Monomial minus = ideals_detail::shifted(config.negative_part(i), y_off);
    gens.push_back(Polynomial::binomial(big, minus * ti, plus * zm));
  }
  const auto qm1 = static_cast<std::uint16_t>(f.q() - 1);
  for (std::size_t j = 0; j < n; ++j) {
    auto g = Polynomial::monomial(big, Monomial::variable(y_off + j, qm1)) -
             Polynomial::constant(big, 1);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (laurent) {
    Monomial all;
    for (std::size_t j = 0; j <= n; ++j) all.e[j] = 1;
    all.refresh();
    gens.push_back(Polynomial::monomial(big, all) - Polynomial::constant(big, 1));
  }

  std::vector<std::size_t> front(aux);
  for (std::size_t k = 0; k < aux; ++k) front[k] = k;
  const auto elim = eliminate(gens, big, front, opt.elimination_kind, opt.gb);

  auto S = PolyRing::standard(f, s);
  std::vector<std::size_t> back(names.size(), Polynomial::npos);
  for (std::size_t i = 0; i < s; ++i) back[aux + i] = i;
  std::vector<Polynomial> in_s;
  for (const auto& g : elim) in_s.push_back(g.mapped(S, back));
  auto gb = buchberger(in_s, S, opt.gb);
  return {S, std::move(gb.generators), IdealRoute::Elimination, true};
}

/// (lattice-basis binomials of ker_Z(B) + torus binomials : (t1...ts)^inf).
/// Contained in I(X); equal when the invariant-factor criterion holds.
inline VanishingIdealResult vanishing_ideal_saturation(const PointConfiguration& config,
                                                       const FiniteField& f,
                                                       const IdealOptions& opt = {}) {
  const auto lifted = config.lifted();
  auto S = PolyRing::standard(f, config.s());
  std::vector<Polynomial> gens = torus_binomials(S);
  for (const auto& c : integer_kernel(IntMatrix::from_columns(lifted.vectors(), lifted.n())))
    gens.push_back(lattice_binomial(S, to_int64(c)));
  std::vector<Polynomial> sat;
  if (gens.empty())
    sat = {};
  else
    sat = saturate(gens, product_of_variables(S), opt.gb);
  return {S, std::move(sat), IdealRoute::Saturation,
          saturation_equality_criterion(config, f.q())};
}

// ---------------------------------------------------------------------------

namespace ideals_detail {

inline std::vector<Code> coefficient_vector(const Polynomial& g,
                                            const std::map<std::vector<std::uint16_t>, std::size_t>& index,
                                            std::size_t width, std::size_t nvars) {
  std::vector<Code> v(width, 0);
  for (const auto& t : g.terms())
    v[index.at(std::vector<std::uint16_t>(t.m.e.begin(), t.m.e.begin() + nvars))] = t.c;
  return v;
}

}  // namespace ideals_detail

/// Size of a minimal homogeneous generating set, extracted from the basis by
/// walking degrees upward and keeping an element only when it is not in the
/// span of degree-d multiples of the elements already kept (ties broken by
/// serialization).
struct MinimalGenerators {
  std::vector<Polynomial> generators;
  std::size_t count() const { return generators.size(); }
};

inline MinimalGenerators minimal_generators(const std::vector<Polynomial>& gens) {
  MinimalGenerators out;
  if (gens.empty()) return out;
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      fail(ErrorCode::NotHomogeneous, "minimal generators need homogeneous input");
  const RingPtr& ring = gens.front().ring();
  const std::size_t nv = ring->nvars();
  std::vector<Polynomial> sorted = gens;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return to_string(a) < to_string(b);
  });
  std::size_t pos = 0;
  while (pos < sorted.size()) {
    const std::uint32_t d = sorted[pos].total_degree();
    const auto monos = monomials_of_degree(nv, d);
    std::map<std::vector<std::uint16_t>, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k)
      index[std::vector<std::uint16_t>(monos[k].e.begin(), monos[k].e.begin() + nv)] = k;
    EchelonBasis span(ring->field(), monos.size());
    for (const auto& g : out.generators) {
      const std::uint32_t dg = g.total_degree();
      for (const auto& m : monomials_of_degree(nv, d - dg))
        span.insert(ideals_detail::coefficient_vector(g.times_monomial(m), index, monos.size(), nv));
    }
    for (; pos < sorted.size() && sorted[pos].total_degree() == d; ++pos)
      if (span.insert(ideals_detail::coefficient_vector(sorted[pos], index, monos.size(), nv)))
        out.generators.push_back(sorted[pos]);
  }
  return out;
}

/// I_[P] = (a_k t_i - a_i t_k), k the first nonzero coordinate.
inline std::vector<Polynomial> point_ideal(const RingPtr& S, const std::vector<Code>& P) {
  const FiniteField& f = S->field();
  if (P.size() != S->nvars()) fail(ErrorCode::InvalidArgument, "point length differs from ring arity");
  std::size_t k = 0;
  while (k < P.size() && P[k] == 0) ++k;
  if (k == P.size()) fail(ErrorCode::ZeroPoint, "the zero vector is not a projective point");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i == k) continue;
    out.push_back(Polynomial::monomial(S, Monomial::variable(i), P[k]) -
                  Polynomial::monomial(S, Monomial::variable(k), P[i]));
  }
  (void)f;
  return out;
}

/// dim I_d from the basis: dim S_d minus the standard-monomial count.
inline std::uint64_t ideal_dimension_gb(const VanishingIdealResult& I, std::uint32_t d) {
  const std::size_t s = I.ring()->nvars();
  return monomial_count(s, d) -
         count_standard_monomials(I.basis().leading_monomials(), s, d);
}

struct StructureReport {
  std::vector<std::size_t> zero_divisors;  // variables t_i with (I : t_i) != I
  bool binomial = true;
  bool artinian_reduction = true;           // I + (t_s) zero-dimensional
  bool ok() const { return zero_divisors.empty() && binomial && artinian_reduction; }
};

/// Lattice-ideal checks; throws StructureViolation naming the failed check.
inline StructureReport verify_lattice_ideal_structure(const std::vector<Polynomial>& gens,
                                                      const RingPtr& S,
                                                      const GroebnerOptions& opt = {}) {
  StructureReport rep;
  const auto I = buchberger(gens, S, opt);
  for (std::size_t i = 0; i < S->nvars(); ++i) {
    const auto sat = saturate(I.generators, Polynomial::variable(S, i), opt);
    if (!ideal_equal(sat, I.generators, S, opt)) rep.zero_divisors.push_back(i);
  }
  for (const auto& g : I.generators)
    if (!g.is_binomial()) rep.binomial = false;
  auto with_t = I.generators;
  with_t.push_back(Polynomial::variable(S, S->nvars() - 1));
  rep.artinian_reduction = is_artinian(buchberger(with_t, S, opt).leading_monomials(), S->nvars());

  if (!rep.zero_divisors.empty())
    fail(ErrorCode::StructureViolation,
         "(I : " + S->names()[rep.zero_divisors.front()] + ") != I: variable is a zero divisor");
  if (!rep.binomial) fail(ErrorCode::StructureViolation, "basis element is not a binomial");
  if (!rep.artinian_reduction)
    fail(ErrorCode::StructureViolation, "I + (" + S->names().back() +
                                            ") is not zero-dimensional");
  return rep;
}

inline StructureReport verify_lattice_ideal_structure(const VanishingIdealResult& r,
                                                      const GroebnerOptions& opt = {}) {
  return verify_lattice_ideal_structure(r.generators(), r.ring(), opt);
}

// ---------------------------------------------------------------------------

/// Exponents alpha_1..alpha_s whose toric set equals V_A: integral solutions
/// gamma of C x - (q-1) x' = 0, C the kernel basis of A, read columnwise.
inline PointConfiguration parameterize_binomial_variety(const PointConfiguration& config,
                                                        const FiniteField& f) {
  if (!is_homogeneous(config).homogeneous)
    fail(ErrorCode::NotHomogeneous, "configuration " + config.to_string() + " is not homogeneous");
  const std::size_t s = config.s();
  const auto C = integer_kernel(IntMatrix::from_columns(config.vectors(), config.n()));
  const std::size_t m = C.size();
  if (m == 0) return PointConfiguration::torus(s);
  std::vector<IntVec> rows;
  for (std::size_t j = 0; j < m; ++j) {
    IntVec r = to_int64(C[j]);
    r.resize(s + m, 0);
    r[s + j] = -static_cast<std::int64_t>(f.q() - 1);
    rows.push_back(std::move(r));
  }
  const auto gammas = integer_kernel(IntMatrix::from_rows(rows));
  const std::size_t k = gammas.size();
  std::vector<IntVec> alpha(s, IntVec(k));
  for (std::size_t c = 0; c < k; ++c) {
    const IntVec g = to_int64(gammas[c]);
    for (std::size_t i = 0; i < s; ++i) alpha[i][c] = g[i];
  }
  return PointConfiguration(k, std::move(alpha));
}

/// V_A: points of the projective torus where every generator of I_A vanishes.
inline PointSet binomial_variety(const PointConfiguration& config, const FiniteField& f,
                                 const EnumerationOptions& eopt = {},
                                 const GroebnerOptions& gopt = {}) {
  const std::size_t s = config.s();
  auto S = PolyRing::standard(f, s);
  const auto IA = toric_ideal(config, S, gopt);
  const auto T = projective_torus(f, s, eopt);
  std::vector<Code> data;
  for (std::size_t j = 0; j < T.size(); ++j) {
    const auto p = T.point_vector(j);
    bool zero = true;
    for (const auto& g : IA)
      if (g.evaluate(p) != 0) {
        zero = false;
        break;
      }
    if (zero) data.insert(data.end(), p.begin(), p.end());
  }
  return PointSet(f, s, std::move(data));
}

/// (I_A + torus : (t1...ts)^inf) = I(V_A), checked by inclusion and by
/// matching the Hilbert function against evaluation ranks on V_A.
inline bool finite_nullstellensatz_check(const PointConfiguration& config, const FiniteField& f,
                                         const IdealOptions& opt = {},
                                         const EnumerationOptions& eopt = {},
                                         const RankOptions& ropt = {}) {
  if (!is_homogeneous(config).homogeneous)
    fail(ErrorCode::HypothesisNotMet, "configuration is not homogeneous");
  if (!torsion_invariants(config.differences(), config.n()).empty())
    fail(ErrorCode::HypothesisNotMet, "Z^n/Z{v_i - v_1} has torsion");
  const std::size_t s = config.s();
  auto S = PolyRing::standard(f, s);
  auto gens = torus_binomials(S);
  for (const auto& g : toric_ideal(config, S, opt.gb)) gens.push_back(g);
  const auto J = gens.empty() ? std::vector<Polynomial>{}
                              : saturate(gens, product_of_variables(S), opt.gb);
  const auto V = binomial_variety(config, f, eopt, opt.gb);
  const PointLogs logs(V);
  for (const auto& g : J)
    for (Code c : logs.evaluate(g))
      if (c) return false;

  // H_{S/J} from the Artinian reduction J + (t_s); J ⊆ I(V) so equality of
  // Hilbert functions up to the regularity gives J = I(V).
  auto red = J;
  red.push_back(Polynomial::variable(S, s - 1));
  const auto leads = buchberger(red, S, opt.gb).leading_monomials();
  if (!is_artinian(leads, s)) return false;
  std::uint64_t H = 0;
  for (std::uint32_t d = 0;; ++d) {
    const auto h = count_standard_monomials(leads, s, d);
    H += h;
    if (hilbert_function_rank(V, d, ropt, &logs) != H) return false;
    if (h == 0) return H == V.size();
  }
}

}  // namespace toric
