#include <random>

#include "support.hpp"
#include "toric/groebner.hpp"

using namespace toric;

namespace {

// Dense univariate polynomials over F_p, low degree first.
using Uni = std::vector<std::uint32_t>;

void trim(Uni& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Uni uni_mod(Uni a, const Uni& b, std::uint32_t p) {
  const auto inv = [&](std::uint32_t x) {
    for (std::uint32_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0u;
  };
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back() * inv(b.back()) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i]) % p;
    trim(a);
  }
  return a;
}

Uni uni_gcd_monic(Uni a, Uni b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = uni_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  std::uint32_t inv = 1;
  while (a.back() * inv % p != 1) ++inv;
  for (auto& x : a) x = x * inv % p;
  return a;
}

Polynomial from_uni(const RingPtr& R, const Uni& a) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) t.push_back({Monomial::variable(0, static_cast<std::uint16_t>(i)), a[i]});
  return Polynomial::from_terms(R, t);
}

// Reduced row echelon form over F_p, rows sorted by pivot column.
std::vector<std::vector<std::uint32_t>> rref(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    std::uint32_t inv = 1;
    while (m[r][c] * inv % p != 1) ++inv;
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c]) {
        const std::uint32_t k = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p * p - k * m[r][j]) % p;
      }
    ++r;
  }
  m.resize(r);
  return m;
}

// Division with remainder written directly against the order, no reducer index.
Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& G) {
  const auto& R = f.ring();
  const auto& fld = R->field();
  Polynomial r(R);
  while (!f.is_zero()) {
    const Term lt = f.lead();
    bool divided = false;
    for (const auto& g : G)
      if (g.lead_monomial().divides(lt.m)) {
        f = f - g.times_monomial(lt.m / g.lead_monomial()).scaled(fld.div(lt.c, g.lead_coefficient()));
        divided = true;
        break;
      }
    if (!divided) {
      r = r + Polynomial::monomial(R, lt.m, lt.c);
      f = f - Polynomial::monomial(R, lt.m, lt.c);
    }
  }
  return r;
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  const auto L = Monomial::lcm(a.lead_monomial(), b.lead_monomial());
  const auto& f = a.ring()->field();
  return a.times_monomial(L / a.lead_monomial()).scaled(f.inv(a.lead_coefficient())) -
         b.times_monomial(L / b.lead_monomial()).scaled(f.inv(b.lead_coefficient()));
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& R, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  std::uniform_int_distribution<Code> c(1, R->field().q() - 1);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < R->nvars(); ++i) m.e[i] = static_cast<std::uint16_t>(e(rng));
    m.refresh();
    t.push_back({m, c(rng)});
  }
  return Polynomial::from_terms(R, t);
}

void expect_reduced_groebner(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    EXPECT_EQ(G[i].lead_coefficient(), 1u);
    for (std::size_t j = i + 1; j < G.size(); ++j) EXPECT_TRUE(naive_remainder(spoly(G[i], G[j]), G).is_zero());
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j) {
        for (const auto& t : G[i].terms()) EXPECT_FALSE(G[j].lead_monomial().divides(t.m));
      }
  }
}

}  // namespace

TEST(Buchberger, RandomIdealsAreReducedBases) {
  std::mt19937 rng(0);
  for (auto [p, u] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    const auto f = FiniteField::make(p, u);
    for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
      const auto R = PolyRing::make(f, {"x", "y", "z"}, order);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Polynomial> gens{random_poly(rng, R, 3, 2), random_poly(rng, R, 3, 2),
                                     random_poly(rng, R, 2, 2)};
        const auto G = buchberger(gens, R);
        expect_reduced_groebner(G.generators);
        EXPECT_TRUE(is_groebner_basis(G.generators));
        for (const auto& g : gens) EXPECT_TRUE(naive_remainder(g, G.generators).is_zero());
      }
    }
  }
}

TEST(Buchberger, UnivariateIsMonicGcd) {
  std::mt19937 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto R = PolyRing::standard(FiniteField::make(p, 1), 1);
    std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
    for (int trial = 0; trial < 30; ++trial) {
      Uni common(2 + rng() % 3), a(1 + rng() % 4), b(1 + rng() % 4);
      for (auto* v : {&common, &a, &b})
        for (auto& x : *v) x = c(rng);
      common.back() = a.back() = b.back() = 1;
      auto mul = [&](const Uni& x, const Uni& y) {
        Uni r(x.size() + y.size() - 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
        return r;
      };
      const auto fa = mul(common, a), fb = mul(common, b);
      const auto G = buchberger({from_uni(R, fa), from_uni(R, fb)}, R);
      ASSERT_EQ(G.generators.size(), 1u);
      EXPECT_EQ(G.generators[0], from_uni(R, uni_gcd_monic(fa, fb, p)));
    }
  }
}

TEST(Buchberger, LinearIdealsAreEchelonForms) {
  std::mt19937 rng(2);
  const std::uint32_t p = 7;
  const auto R = PolyRing::make(FiniteField::make(p, 1), {"a", "b", "c", "d", "e"}, MonomialOrder::lex(5));
  std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<std::uint32_t>> rows(1 + rng() % 4, std::vector<std::uint32_t>(5));
    std::vector<Polynomial> gens;
    for (auto& row : rows) {
      std::vector<Term> t;
      for (std::size_t j = 0; j < 5; ++j) {
        row[j] = c(rng);
        t.push_back({Monomial::variable(j), row[j]});
      }
      gens.push_back(Polynomial::from_terms(R, t));
    }
    std::vector<Polynomial> expected;
    for (const auto& row : rref(rows, p)) {
      std::vector<Term> t;
      for (std::size_t j = 0; j < 5; ++j) t.push_back({Monomial::variable(j), row[j]});
      expected.push_back(Polynomial::from_terms(R, t));
    }
    EXPECT_EQ(buchberger(gens, R).generators, expected);
  }
}

TEST(Buchberger, CanonicalUnderShufflesAndScaling) {
  std::mt19937 rng(3);
  const auto f = FiniteField::make(5, 1);
  const auto R = PolyRing::standard(f, 4);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(rng, R, 2, 2));
  const auto ref = buchberger(gens, R).generators;
  for (int k = 0; k < 50; ++k) {
    auto g = gens;
    std::shuffle(g.begin(), g.end(), rng);
    for (auto& x : g) x = x.scaled(1 + rng() % 4);
    g.push_back(g[0] * Polynomial::variable(R, rng() % 4) + g[1]);
    EXPECT_EQ(buchberger(g, R).generators, ref);
  }
}

TEST(Buchberger, UnitAndZeroIdeals) {
  const auto R = PolyRing::standard(FiniteField::make(3, 1), 2);
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  const auto one = Polynomial::constant(R, 1);
  EXPECT_TRUE(buchberger({x * y - one, x}, R).is_unit_ideal());
  EXPECT_TRUE(buchberger({Polynomial(R)}, R).generators.empty());
}

TEST(Buchberger, BasisSizeGuard) {
  const auto R = PolyRing::standard(FiniteField::make(5, 1), 3);
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1), z = Polynomial::variable(R, 2);
  GroebnerOptions opt;
  opt.max_basis_size = 2;
  EXPECT_TORIC_ERROR(buchberger({x * x - y * z, y * y - x * z, z * z - x * y}, R, opt),
                     ErrorCode::ResourceExceeded);
}

TEST(Toric, TwistedCubic) {
  const auto R = PolyRing::standard(FiniteField::make(7, 1), 4);
  const auto I = toric_ideal(PointConfiguration({{3, 0}, {2, 1}, {1, 2}, {0, 3}}), R);
  std::vector<Polynomial> expected{parse_polynomial(R, "t2^2 + 6*t1*t3"), parse_polynomial(R, "t2*t3 + 6*t1*t4"),
                                   parse_polynomial(R, "t3^2 + 6*t2*t4")};
  EXPECT_TRUE(ideal_equal(I, expected, R));
  EXPECT_EQ(I.size(), 3u);
}

TEST(Toric, FourCycle) {
  const auto R = PolyRing::standard(FiniteField::make(5, 1), 4);
  const auto I = toric_ideal(PointConfiguration({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}), R);
  ASSERT_EQ(I.size(), 1u);
  EXPECT_EQ(to_string(I[0]), "1*t1*t3 + 4*t2*t4");
  EXPECT_TRUE(toric_ideal(PointConfiguration::torus(3), PolyRing::standard(FiniteField::make(5, 1), 3)).empty());
}

TEST(Elimination, ImplicitizesCuspidalCubic) {
  const auto f = FiniteField::make(5, 1);
  const auto R = PolyRing::make(f, {"s", "a", "b"}, MonomialOrder::grevlex(3));
  const auto gens = std::vector<Polynomial>{parse_polynomial(R, "a + 4*s^2"), parse_polynomial(R, "b + 4*s^3")};
  const auto E = eliminate(gens, R, {0});
  ASSERT_EQ(E.size(), 1u);
  EXPECT_TRUE(ideal_equal(E, {parse_polynomial(R, "a^3 + 4*b^2")}, R));
  EXPECT_FALSE(E[0].uses_variable(0));
  for (auto kind : {OrderKind::Lex, OrderKind::Grevlex})
    EXPECT_TRUE(ideal_equal(eliminate(gens, R, {0}, kind), E, R));
}

TEST(Elimination, PointsOnEliminatedVariablesVanish) {
  std::mt19937 rng(4);
  const auto f = FiniteField::make(7, 1);
  const auto R = PolyRing::standard(f, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens{random_poly(rng, R, 2, 2), random_poly(rng, R, 2, 2)};
    const auto E = eliminate(gens, R, {0, 1});
    for (const auto& g : E) {
      EXPECT_FALSE(g.uses_variable(0));
      EXPECT_FALSE(g.uses_variable(1));
      EXPECT_TRUE(ideal_contains(buchberger(gens, R), g));
    }
  }
}

TEST(Saturation, RemovesMonomialComponents) {
  const auto R = PolyRing::standard(FiniteField::make(3, 1), 2);
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  EXPECT_TRUE(ideal_equal(saturate({x * y, x * x}, x), {Polynomial::constant(R, 1)}, R));
  EXPECT_TRUE(ideal_equal(saturate({x * y, y * y}, x), {y}, R));
  EXPECT_TRUE(ideal_equal(saturate({x * x * (x - y)}, x), {x - y}, R));
  EXPECT_TORIC_ERROR(saturate({x}, Polynomial(R)), ErrorCode::ZeroPolynomial);
}

TEST(Saturation, ResultIsSaturated) {
  std::mt19937 rng(5);
  const auto R = PolyRing::standard(FiniteField::make(5, 1), 3);
  const auto h = product_of_variables(R);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens{random_poly(rng, R, 2, 2), random_poly(rng, R, 2, 2)};
    const auto S = saturate(gens, h);
    const auto G = buchberger(S, R);
    for (const auto& g : gens) EXPECT_TRUE(ideal_contains(G, g));
    // (S : t_i) = S
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_TRUE(ideal_equal(saturate(S, Polynomial::variable(R, i)), S, R));
  }
}

TEST(IdealEqual, OrderIndependence) {
  const auto R = PolyRing::standard(FiniteField::make(5, 1), 3);
  const auto I = std::vector<Polynomial>{parse_polynomial(R, "t1^2 + 4*t2*t3"), parse_polynomial(R, "t2^2 + 4*t1*t3")};
  auto J = I;
  J.push_back(I[0] * Polynomial::variable(R, 2) + I[1]);
  EXPECT_TRUE(ideal_equal(I, J, R));
  EXPECT_TRUE(ideal_equal(I, J, R, MonomialOrder::lex(3)));
  EXPECT_FALSE(ideal_equal(I, {I[0]}, R));
}

TEST(Staircase, CountMatchesBruteForce) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Monomial> leads;
    for (int k = 0; k < 1 + int(rng() % 4); ++k) {
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) m.e[i] = static_cast<std::uint16_t>(rng() % 3);
      m.refresh();
      if (m.deg) leads.push_back(m);
    }
    for (std::uint32_t d = 0; d <= 5; ++d) {
      std::uint64_t brute = 0;
      std::vector<std::uint16_t> e(n, 0);
      std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == n) {
          Monomial m;
          for (std::size_t j = 0; j + 1 < n; ++j) m.e[j] = e[j];
          m.e[n - 1] = static_cast<std::uint16_t>(left);
          m.refresh();
          bool standard = true;
          for (const auto& l : leads)
            if (l.divides(m)) standard = false;
          brute += standard;
          return;
        }
        for (std::uint32_t a = 0; a <= left; ++a) {
          e[i] = static_cast<std::uint16_t>(a);
          rec(i + 1, left - a);
        }
      };
      rec(0, d);
      EXPECT_EQ(count_standard_monomials(leads, n, d), brute);
      EXPECT_EQ(standard_monomials(leads, n, d, MonomialOrder::grevlex(n)).size(), brute);
    }
  }
}

TEST(Staircase, Artinian) {
  EXPECT_TRUE(is_artinian({Monomial::variable(0, 2), Monomial::variable(1, 3), Monomial::from_exponents({1, 1})}, 2));
  EXPECT_FALSE(is_artinian({Monomial::variable(0, 2), Monomial::from_exponents({1, 1})}, 2));
}

TEST(Buchberger, SelectionStrategyDoesNotChangeTheBasis) {
  std::mt19937 rng(7);
  const auto f = FiniteField::make(3, 1);
  for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3), MonomialOrder::elimination(1, 3)}) {
    const auto R = PolyRing::make(f, {"x", "y", "z"}, order);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens{random_poly(rng, R, 3, 2), random_poly(rng, R, 3, 2)};
      GroebnerOptions normal, sugar;
      normal.selection = Selection::Normal;
      sugar.selection = Selection::Sugar;
      EXPECT_EQ(buchberger(gens, R, normal).generators, buchberger(gens, R, sugar).generators);
    }
  }
}

TEST(Buchberger, LexBasisOverF2) {
  const auto R = PolyRing::make(FiniteField::make(2, 1), {"x", "y", "z"}, MonomialOrder::lex(3));
  const std::vector<Polynomial> gens{parse_polynomial(R, "x^2*y + x*y^2*z^2 + y*z"),
                                     parse_polynomial(R, "x^2*z + x*y^2*z + x*y^2"),
                                     parse_polynomial(R, "x^2*y^2 + x")};
  const auto G = buchberger(gens, R).generators;
  ASSERT_EQ(G.size(), 3u);
  EXPECT_EQ(to_string(G[2]), "1*y*z^13 + 1*y*z^12 + 1*y*z^9 + 1*y*z^5 + 1*y*z");
  expect_reduced_groebner(G);
}
