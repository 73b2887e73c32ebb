#include <cstdio>
#include <random>

#include "support.hpp"
#include "toric/codes.hpp"
#include "toric/graphs.hpp"

using namespace toric;

namespace {

// Minimum weight over every nonzero coefficient vector, no normalization.
std::uint64_t brute_distance(const GeneratorMatrix& G) {
  const FiniteField& f = G.field;
  const std::size_t k = G.k(), m = G.m();
  std::vector<Code> coef(k, 0);
  std::uint64_t best = m + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && coef[i] + 1 == f.q()) coef[i++] = 0;
    if (i == k) break;
    ++coef[i];
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < m; ++j) {
      Code v = 0;
      for (std::size_t r = 0; r < k; ++r) v = f.add(v, f.mul(coef[r], G.rows[r][j]));
      w += v != 0;
    }
    best = std::min(best, w);
  }
  return best;
}

struct TorusCode {
  PointSet X;
  VanishingIdealResult I;
};

TorusCode torus_code(const FiniteField& f, std::size_t s) {
  return {projective_torus(f, s), vanishing_ideal_elimination(PointConfiguration::torus(s), f)};
}

}  // namespace

TEST(Distance, StrategiesAgreeWithBruteForce) {
  for (auto [p, u, s] : {std::tuple{3, 1, 3}, {2, 2, 3}, {5, 1, 2}, {3, 1, 4}}) {
    const auto f = FiniteField::make(p, u);
    const auto t = torus_code(f, s);
    for (std::uint32_t d = 1; d <= 4; ++d) {
      const auto G = generator_matrix(t.X, t.I, d);
      if (std::pow(double(f.q()), double(G.k())) > 2e5) continue;
      const auto want = brute_distance(G);
      EXPECT_EQ(codes_detail::min_weight_codewords(G), want) << "q=" << f.q() << " d=" << d;
      EXPECT_EQ(codes_detail::min_weight_supports(G), want) << "q=" << f.q() << " d=" << d;
    }
  }
}

TEST(Distance, GraphCodesAgreeWithBruteForce) {
  const auto f = FiniteField::make(5, 1);
  const auto c = incidence_configuration(Graph::cycle(4));
  const auto X = enumerate_projective(c, f);
  const auto I = vanishing_ideal_elimination(c, f);
  for (std::uint32_t d = 1; d <= 3; ++d) {
    const auto G = generator_matrix(X, I, d);
    EXPECT_EQ(G.k(), hilbert_function_rank(X, d));
    if (std::pow(5.0, double(G.k())) > 2e6) continue;
    EXPECT_EQ(minimum_distance_exhaustive(G), brute_distance(G)) << d;
  }
}

TEST(Distance, TorusFormulas) {
  for (auto [p, u] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    const auto f = FiniteField::make(p, u);
    const std::uint64_t q = f.q();
    for (unsigned dim : {1u, 2u}) {
      const auto t = torus_code(f, dim + 1);
      std::vector<std::uint64_t> deltas;
      for (std::uint32_t d = 1; d <= dim * (q - 2) + 1; ++d) {
        CodeOptions opt;
        opt.torus_dim = dim;
        const auto P = code_parameters(t.X, t.I, d, opt);
        ASSERT_TRUE(P.exact.has_value());
        EXPECT_EQ(*P.exact, torus_formulas(dim, q, d)) << "q=" << q << " dim=" << dim << " d=" << d;
        EXPECT_EQ(P.formula, P.exact);
        if (dim == 1) {
          EXPECT_TRUE(mds_check(P));
        }
        deltas.push_back(*P.exact);
      }
      EXPECT_TRUE(distance_monotonicity_check(deltas));
      EXPECT_EQ(deltas.back(), 1u);
    }
  }
}

TEST(Distance, TorusPlaneSequenceQ5) {
  const auto t = torus_code(FiniteField::make(5, 1), 3);
  std::vector<std::uint64_t> got;
  for (std::uint32_t d = 1; d <= 6; ++d) got.push_back(minimum_distance_exhaustive(generator_matrix(t.X, t.I, d)));
  EXPECT_EQ(got, (std::vector<std::uint64_t>{12, 8, 4, 3, 2, 1}));
}

TEST(Distance, BudgetGivesInterval) {
  const auto f = FiniteField::make(7, 1);
  const auto t = torus_code(f, 3);
  CodeOptions opt;
  opt.distance.budget = 10;
  const auto P = code_parameters(t.X, t.I, 2, opt);
  EXPECT_FALSE(P.exact.has_value());
  EXPECT_EQ(P.provenance, "interval");
  EXPECT_LE(P.lower, torus_formulas(2, 7, 2));
  EXPECT_GE(P.upper, torus_formulas(2, 7, 2));
  EXPECT_TORIC_ERROR(mds_check(P), ErrorCode::DistanceUnknown);
  EXPECT_TORIC_ERROR(minimum_distance_exhaustive(generator_matrix(t.X, t.I, 2), opt.distance),
                     ErrorCode::BudgetExceeded);
}

TEST(Bounds, Singleton) {
  EXPECT_EQ(singleton_bound(16, 1), 16u);
  EXPECT_EQ(singleton_bound(16, 16), 1u);
  EXPECT_TORIC_ERROR(singleton_bound(16, 0), ErrorCode::InvalidDimension);
  EXPECT_TORIC_ERROR(singleton_bound(16, 17), ErrorCode::InvalidDimension);
}

TEST(Bounds, GraphBoundRowK5) {
  const std::vector<std::uint64_t> want{1080, 864, 648, 432, 216, 180, 144, 108, 72, 36,
                                        30, 24, 18, 12, 6, 5, 4, 3, 2, 1};
  for (std::uint32_t d = 1; d <= 20; ++d) EXPECT_EQ(graph_bound(5, 7, d).value, want[d - 1]) << d;
  EXPECT_TRUE(graph_bound(5, 7, 20).constant);
  EXPECT_TORIC_ERROR(graph_bound(5, 2, 1), ErrorCode::FieldTooSmall);
  EXPECT_TORIC_ERROR(graph_bound(2, 7, 1), ErrorCode::InvalidArgument);
  EXPECT_TORIC_ERROR(graph_bound(5, 7, 0), ErrorCode::InvalidArgument);
}

TEST(Bounds, GraphBoundDominatesTrueDistance) {
  const auto f = FiniteField::make(5, 1);
  const auto c = incidence_configuration(Graph::cycle(3));
  const auto X = enumerate_projective(c, f);
  const auto I = vanishing_ideal_elimination(c, f);
  for (std::uint32_t d = 1; d <= 6; ++d) {
    CodeOptions opt;
    opt.graph_vertices = 3;
    const auto P = code_parameters(X, I, d, opt);
    ASSERT_TRUE(P.exact.has_value());
    EXPECT_LE(*P.exact, *P.graph) << d;
    EXPECT_LE(*P.exact, P.singleton) << d;
  }
}

TEST(Witness, ZeroCountIdentity) {
  for (std::uint64_t n : {3u, 4u}) {
    for (auto [p, u] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
      const auto f = FiniteField::make(p, u);
      const std::uint64_t q = f.q();
      for (std::uint64_t d = 1; d + 1 <= (q - 2) * (n - 1); ++d) {
        const auto w = witness_polynomial(n, f, d);
        EXPECT_EQ(w.zeros, w.expected) << "n=" << n << " q=" << q << " d=" << d;
        EXPECT_EQ(w.F.total_degree(), d);
        EXPECT_EQ(w.torus_size - w.zeros, graph_bound(n, q, d).value);
      }
    }
  }
  EXPECT_TORIC_ERROR(witness_polynomial(3, FiniteField::make(5, 1), 6), ErrorCode::DegreeOutOfRange);
  EXPECT_TORIC_ERROR(witness_polynomial(3, FiniteField::make(2, 1), 1), ErrorCode::FieldTooSmall);
}

TEST(Shape, MonotonicityPredicate) {
  EXPECT_TRUE(distance_monotonicity_check({12, 8, 4, 3, 2, 1, 1}));
  EXPECT_FALSE(distance_monotonicity_check({12, 12, 4}));
  EXPECT_FALSE(distance_monotonicity_check({3, 1, 2}));
}

TEST(Codes, ConstantRowUsesBound) {
  const auto f = FiniteField::make(3, 1);
  const auto t = torus_code(f, 2);
  const auto P = code_parameters(t.X, t.I, 5);
  EXPECT_EQ(P.k, P.m);
  EXPECT_EQ(P.exact, std::optional<std::uint64_t>(1));
  EXPECT_EQ(P.provenance, "bound");
  EXPECT_TORIC_ERROR(generator_matrix(t.X, t.I, 0), ErrorCode::InvalidArgument);
}

// Attainment of the graph bound on odd cycles is only reported; the
// assertion is the bound itself.
TEST(Bounds, OddCycleAttainmentReport) {
  for (std::size_t n : {3u, 5u}) {
    for (auto [p, u] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
      const auto f = FiniteField::make(p, u);
      const auto c = incidence_configuration(Graph::cycle(n));
      const auto X = enumerate_projective(c, f);
      const auto I = vanishing_ideal_elimination(c, f);
      std::string row;
      for (std::uint32_t d = 1; d < (f.q() - 2) * (n - 1); ++d) {
        CodeOptions opt;
        opt.graph_vertices = n;
        opt.distance.budget = 2e7;
        const auto P = code_parameters(X, I, d, opt);
        ASSERT_TRUE(P.graph.has_value());
        if (P.exact) {
          EXPECT_LE(*P.exact, *P.graph);
          row += " d" + std::to_string(d) + (*P.exact == *P.graph ? ":attained" : ":below");
        } else {
          row += " d" + std::to_string(d) + ":open";
        }
      }
      RecordProperty("C" + std::to_string(n) + "_q" + std::to_string(f.q()), row);
      std::printf("C%zu q=%u:%s\n", n, f.q(), row.c_str());
    }
  }
}
