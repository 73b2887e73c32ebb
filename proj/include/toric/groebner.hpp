#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, elimination,
// saturation, toric ideals and standard-monomial counting.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/mpoly.hpp"
#include "toric/zlat.hpp"

namespace toric {

/// Pair selection. Auto picks Normal for a pure lex order and Sugar otherwise.
enum class Selection { Auto, Normal, Sugar };

struct GroebnerOptions {
  std::size_t max_basis_size = 20000;
  std::uint32_t max_degree = 200;
  Selection selection = Selection::Auto;
};

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;  // sorted by leading monomial, descending
  bool reduced = false;

  const MonomialOrder& order() const { return ring->order(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(generators.size());
    for (const auto& g : generators) lm.push_back(g.lead_monomial());
    return lm;
  }

  bool is_unit_ideal() const {
    return generators.size() == 1 && generators.front().lead_monomial().deg == 0;
  }
};

namespace gb_detail {

inline void check_same_ring(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  for (const auto& p : polys)
    if (!p.ring() || !p.ring()->same_as(*ring))
      fail(ErrorCode::RingMismatch, "generators live in different rings");
}

// Divisor lookup restricted to an index subset.
struct Reducer {
  const std::vector<Polynomial>* polys;
  const std::vector<std::size_t>* active;

  const Polynomial* find(const Monomial& m) const {
    for (std::size_t idx : *active) {
      const Polynomial& g = (*polys)[idx];
      if (g.lead_monomial().divides(m)) return &g;
    }
    return nullptr;
  }
};

inline Polynomial reduce_full(Polynomial h, const Reducer& red) {
  if (h.is_zero()) return h;
  const FiniteField& f = h.ring()->field();
  Polynomial rem(h.ring());
  while (!h.is_zero()) {
    const Term lt = h.lead();
    if (const Polynomial* g = red.find(lt.m)) {
      h = h.sub_scaled_shift(f.div(lt.c, g->lead_coefficient()),
                             lt.m / g->lead_monomial(), *g);
    } else {
      rem.append_smaller(h.pop_lead());
    }
  }
  return rem;
}

}  // namespace gb_detail

/// Remainder of f under full division by G; no term of the result is
/// divisible by a leading monomial of G.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  if (G.empty()) fail(ErrorCode::InvalidArgument, "divisor list is empty");
  gb_detail::check_same_ring(G, f.ring());
  std::vector<Polynomial> nonzero;
  for (const auto& g : G)
    if (!g.is_zero()) nonzero.push_back(g);
  std::vector<std::size_t> idx(nonzero.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return gb_detail::reduce_full(f, {&nonzero, &idx});
}

/// Same ring variables and field, different monomial order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return PolyRing::make(ring->field(), ring->names(), std::move(order));
}

inline std::vector<Polynomial> in_ring(const std::vector<Polynomial>& polys,
                                       const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.in_ring(ring));
  return out;
}

inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& order) {
  const auto ring = with_order(f.ring(), order);
  return normal_form(f.in_ring(ring), in_ring(G, ring));
}

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                const GroebnerOptions& opt = {}) {
  gb_detail::check_same_ring(gens, ring);
  const MonomialOrder& ord = ring->order();
  const bool by_sugar =
      opt.selection == Selection::Sugar ||
      (opt.selection == Selection::Auto &&
       !(ord.blocks().size() == 1 && ord.blocks()[0].kind == OrderKind::Lex));

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar = 0;
  };
  std::vector<Polynomial> polys;
  std::vector<std::uint32_t> sugar;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto guard = [&](const Polynomial& h) {
    if (h.total_degree() > opt.max_degree)
      fail(ErrorCode::ResourceExceeded,
           "Groebner degree guard " + std::to_string(opt.max_degree) + " exceeded");
    if (polys.size() >= opt.max_basis_size)
      fail(ErrorCode::ResourceExceeded,
           "Groebner basis size guard " + std::to_string(opt.max_basis_size) +
               " exceeded");
  };

  // Gebauer-Moeller update with the new element h.
  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(sugar[i] + l.deg - polys[i].lead_monomial().deg,
                    sugar[j] + l.deg - polys[j].lead_monomial().deg);
  };

  auto update = [&](Polynomial h, std::uint32_t h_sugar) {
    guard(h);
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    sugar.push_back(std::max(h_sugar, polys[hi].total_degree()));
    const Monomial& hm = polys[hi].lead_monomial();

    std::vector<Pair> cand;
    cand.reserve(active.size());
    for (std::size_t g : active)
      cand.push_back({g, hi, Monomial::lcm(polys[g].lead_monomial(), hm), 0});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Pair& p = cand[a];
      bool keep = polys[p.i].lead_monomial().coprime(hm);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (cand[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (const Pair& p : pairs) {
      const bool drop = hm.divides(p.lcm) &&
                        !(Monomial::lcm(polys[p.i].lead_monomial(), hm) == p.lcm) &&
                        !(Monomial::lcm(polys[p.j].lead_monomial(), hm) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (Pair p : kept)
      if (!polys[p.i].lead_monomial().coprime(hm)) {
        p.sugar = pair_sugar(p.i, p.j, p.lcm);
        next.push_back(p);
      }
    pairs = std::move(next);

    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!hm.divides(polys[g].lead_monomial())) still.push_back(g);
    still.push_back(hi);
    active = std::move(still);
  };

  gb_detail::Reducer red{&polys, &active};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = gb_detail::reduce_full(g, red);
    if (h.is_zero()) continue;
    update(h.monic(), g.total_degree());
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (by_sugar ? a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0)
                   : ord.compare(a.lcm, b.lcm) < 0)
        best = k;
    }
    const Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();

    const Polynomial& f = polys[p.i];
    const Polynomial& g = polys[p.j];
    const FiniteField& fld = ring->field();
    // both monic: S = (L/lm f) f - (L/lm g) g
    Polynomial s = f.times_monomial(p.lcm / f.lead_monomial())
                       .sub_scaled_shift(fld.div(f.lead_coefficient(), g.lead_coefficient()),
                                         p.lcm / g.lead_monomial(), g);
    Polynomial h = gb_detail::reduce_full(std::move(s), red);
    if (!h.is_zero()) update(h.monic(), p.sugar);
  }

  // active leading monomials are minimal; interreduce tails
  std::vector<Polynomial> basis;
  for (std::size_t a = 0; a < active.size(); ++a) {
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < active.size(); ++b)
      if (b != a) others.push_back(active[b]);
    Polynomial g = polys[active[a]];
    const Term lt = g.pop_lead();
    Polynomial tail = gb_detail::reduce_full(std::move(g), {&polys, &others});
    Polynomial full = Polynomial::monomial(ring, lt.m, lt.c) + tail;
    basis.push_back(full.monic());
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  if (!basis.empty() && basis.back().lead_monomial().deg == 0)
    basis = {Polynomial::constant(ring, 1)};
  return {ring, std::move(basis), true};
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                const GroebnerOptions& opt = {}) {
  if (gens.empty()) return {};
  return buchberger(gens, gens.front().ring(), opt);
}

/// Every S-polynomial of the basis reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& G) {
  if (G.size() < 2) return true;
  const FiniteField& f = G.front().ring()->field();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Monomial L = Monomial::lcm(G[i].lead_monomial(), G[j].lead_monomial());
      Polynomial s = G[i].scaled(f.inv(G[i].lead_coefficient()))
                         .times_monomial(L / G[i].lead_monomial())
                         .sub_scaled_shift(f.inv(G[j].lead_coefficient()),
                                           L / G[j].lead_monomial(), G[j]);
      if (!normal_form(s, G).is_zero()) return false;
    }
  return true;
}

/// Basis of (gens) ∩ K[other variables], computed with the `front_vars`
/// block eliminated. Results live in the ring of `gens`.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                         const RingPtr& ring,
                                         const std::vector<std::size_t>& front_vars,
                                         OrderKind kind = OrderKind::Grevlex,
                                         const GroebnerOptions& opt = {}) {
  gb_detail::check_same_ring(gens, ring);
  if (front_vars.empty()) return buchberger(gens, ring, opt).generators;
  const std::size_t n = ring->nvars();
  std::vector<bool> is_front(n, false);
  for (auto v : front_vars) {
    if (v >= n) fail(ErrorCode::InvalidArgument, "variable index out of range");
    is_front[v] = true;
  }
  std::vector<std::size_t> to_big(n), layout;
  for (std::size_t v = 0; v < n; ++v)
    if (is_front[v]) layout.push_back(v);
  const std::size_t nf = layout.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!is_front[v]) layout.push_back(v);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    to_big[layout[k]] = k;
    names.push_back(ring->names()[layout[k]]);
  }
  auto big = PolyRing::make(ring->field(), names, MonomialOrder::elimination(nf, n, kind));
  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(g.mapped(big, to_big));
  const auto gb = buchberger(mapped, big, opt);

  std::vector<std::size_t> back(n);
  for (std::size_t k = 0; k < n; ++k) back[k] = layout[k];
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    bool free = true;
    for (std::size_t k = 0; k < nf && free; ++k) free = !g.uses_variable(k);
    if (free) out.push_back(g.mapped(ring, back));
  }
  return out;
}

/// (Q : h^inf) via a fresh variable w with w*h - 1, then eliminating w.
/// Returns the reduced basis in the ring's order.
inline std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens,
                                        const Polynomial& h,
                                        const GroebnerOptions& opt = {}) {
  if (h.is_zero()) fail(ErrorCode::ZeroPolynomial, "saturating by zero");
  const RingPtr& ring = h.ring();
  gb_detail::check_same_ring(gens, ring);
  if (!ring->order().permutation().empty())
    fail(ErrorCode::InvalidArgument, "saturation needs an unpermuted order");
  const std::size_t n = ring->nvars();
  std::vector<std::string> names{"w_"};
  for (const auto& s : ring->names()) names.push_back(s);
  auto big = PolyRing::make(ring->field(), names, ring->order().with_front_block(1));
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(g.mapped(big, shift));
  mapped.push_back(h.mapped(big, shift).times_monomial(Monomial::variable(0)) -
                   Polynomial::constant(big, 1));
  const auto gb = buchberger(mapped, big, opt);
  std::vector<std::size_t> back(n + 1, Polynomial::npos);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators)
    if (!g.uses_variable(0)) out.push_back(g.mapped(ring, back));
  return out;
}

inline Polynomial product_of_variables(const RingPtr& ring) {
  Monomial m;
  for (std::size_t i = 0; i < ring->nvars(); ++i) m.e[i] = 1;
  m.refresh();
  return Polynomial::monomial(ring, m);
}

/// Reduced bases coincide under the given order.
inline bool ideal_equal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                        const RingPtr& ring, const GroebnerOptions& opt = {}) {
  gb_detail::check_same_ring(I, ring);
  gb_detail::check_same_ring(J, ring);
  const auto a = buchberger(I, ring, opt);
  const auto b = buchberger(J, ring, opt);
  return a.generators == b.generators;
}

inline bool ideal_equal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                        const RingPtr& ring, const MonomialOrder& order,
                        const GroebnerOptions& opt = {}) {
  gb_detail::check_same_ring(I, ring);
  gb_detail::check_same_ring(J, ring);
  const auto r = with_order(ring, order);
  return ideal_equal(in_ring(I, r), in_ring(J, r), r, opt);
}

/// f lies in the ideal with reduced basis G.
inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (G.generators.empty()) return false;
  return normal_form(f.in_ring(G.ring), G.generators).is_zero();
}

/// t^{c+} - t^{c-} for an integer vector c.
inline Polynomial lattice_binomial(const RingPtr& ring, const IntVec& c) {
  Monomial plus, minus;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) plus.e[i] = static_cast<std::uint16_t>(c[i]);
    if (c[i] < 0) minus.e[i] = static_cast<std::uint16_t>(-c[i]);
  }
  plus.refresh();
  minus.refresh();
  return Polynomial::binomial(ring, plus, minus);
}

/// Toric ideal I_A: lattice-basis binomials of ker_Z(A) saturated by t1...ts.
inline std::vector<Polynomial> toric_ideal(const PointConfiguration& config,
                                           const RingPtr& ring,
                                           const GroebnerOptions& opt = {}) {
  if (ring->nvars() != config.s())
    fail(ErrorCode::RingMismatch, "ring arity differs from configuration size");
  const auto kernel =
      integer_kernel(IntMatrix::from_columns(config.vectors(), config.n()));
  if (kernel.empty()) return {};
  std::vector<Polynomial> gens;
  for (const auto& c : kernel) gens.push_back(lattice_binomial(ring, to_int64(c)));
  return saturate(gens, product_of_variables(ring), opt);
}

// ---------------------------------------------------------------------------
// Standard monomials (not divisible by any given leading monomial).

namespace gb_detail {

inline bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const auto& l : leads)
    if (l.divides(m)) return true;
  return false;
}

// Visits standard monomials of exact degree `degree`; every prefix of a
// standard monomial is standard, so branches are cut early.
inline void visit_standard(const std::vector<Monomial>& leads, std::size_t nvars,
                           std::uint32_t degree,
                           const std::function<void(const Monomial&)>& visit) {
  Monomial m;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                             std::uint32_t left) {
    if (nvars == 0) return;
    if (i + 1 == nvars) {
      m.e[i] = static_cast<std::uint16_t>(left);
      m.refresh();
      if (!divisible_by_any(m, leads)) visit(m);
      m.e[i] = 0;
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      m.e[i] = static_cast<std::uint16_t>(a);
      m.refresh();
      if (divisible_by_any(m, leads)) break;
      rec(i + 1, left - a);
    }
    m.e[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0 && !divisible_by_any(m, leads)) visit(m);
    return;
  }
  rec(0, degree);
}

}  // namespace gb_detail

inline std::uint64_t count_standard_monomials(const std::vector<Monomial>& leads,
                                              std::size_t nvars, std::uint32_t degree) {
  std::uint64_t n = 0;
  gb_detail::visit_standard(leads, nvars, degree, [&](const Monomial&) { ++n; });
  return n;
}

/// Standard monomials of the given degree, descending in `order`.
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads,
                                                std::size_t nvars, std::uint32_t degree,
                                                const MonomialOrder& order) {
  std::vector<Monomial> out;
  gb_detail::visit_standard(leads, nvars, degree,
                            [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare(a, b) > 0;
  });
  return out;
}

/// Zero-dimensional (Artinian) quotient: every variable has a pure power
/// among the leading monomials.
inline bool is_artinian(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    bool found = false;
    for (const auto& l : leads)
      if (l.mask == (1u << i)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace toric
