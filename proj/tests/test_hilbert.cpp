#include <random>

#include "support.hpp"
#include "toric/graphs.hpp"
#include "toric/hilbert.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

PointConfiguration random_config(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 3, s = 2 + rng() % 3;
  std::vector<IntVec> v(s, IntVec(n));
  for (auto& x : v)
    for (auto& y : x) y = rng() % 4;
  return PointConfiguration(n, v);
}

}  // namespace

TEST(Hilbert, RankAndBasisAgree) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const std::pair<int, int> fields[] = {{2, 2}, {3, 1}, {5, 1}};
    const auto f = FiniteField::make(fields[trial % 3].first, fields[trial % 3].second);
    const auto c = random_config(rng);
    const auto X = enumerate_projective(c, f);
    const auto I = vanishing_ideal_elimination(c, f);
    const auto prof = hilbert_series(I);
    for (std::uint32_t d = 0; d <= prof.regularity + 2; ++d) {
      EXPECT_EQ(hilbert_function_gb(I, d), hilbert_function_rank(X, d)) << c.to_string() << " d=" << d;
      EXPECT_EQ(prof.H[d], hilbert_function_rank(X, d)) << c.to_string() << " d=" << d;
    }
    EXPECT_TRUE(degree_consistency(X.size(), prof));
    EXPECT_TRUE(hilbert_shape_ok(prof.H, X.size()));
  }
}

TEST(Hilbert, TorusNumeratorMatchesRanks) {
  for (auto [p, u] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    const auto f = FiniteField::make(p, u);
    for (std::size_t s = 2; s <= 4; ++s) {
      const auto h = torus_numerator(f.q(), s);
      const auto T = projective_torus(f, s);
      // Partial sums of the numerator are the Hilbert function.
      std::uint64_t acc = 0;
      for (std::size_t d = 0; d < h.size() + 2; ++d) {
        acc += d < h.size() ? h[d] : 0;
        EXPECT_EQ(hilbert_function_rank(T, d), acc) << "q=" << f.q() << " s=" << s << " d=" << d;
      }
      const auto prof = hilbert_series(vanishing_ideal_elimination(PointConfiguration::torus(s), f));
      EXPECT_EQ(prof.h, h);
      EXPECT_EQ(prof.regularity, (s - 1) * (f.q() - 2));
    }
  }
}

TEST(Hilbert, TwoTrianglesPrefix) {
  const auto X = enumerate_projective(incidence_configuration(two_triangles()), FiniteField::make(7, 1));
  const std::vector<std::uint64_t> want{1, 6, 21, 56, 126, 252, 457};
  EXPECT_EQ(hilbert_table_rank(X, 0, 6), want);
}

TEST(Hilbert, VariableChoiceDoesNotMatter) {
  const auto f = FiniteField::make(5, 1);
  const auto I = vanishing_ideal_elimination(incidence_configuration(Graph::cycle(4)), f);
  const auto ref = hilbert_series(I);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(hilbert_series(I, v).h, ref.h);
  EXPECT_EQ(ref.degree, 16u);
}

TEST(Hilbert, ShapePredicate) {
  EXPECT_TRUE(hilbert_shape_ok({1, 3, 5, 6, 6}, 6));
  EXPECT_TRUE(hilbert_shape_ok({1, 1, 1}, 1));
  EXPECT_FALSE(hilbert_shape_ok({1, 3, 3, 6}, 6));
  EXPECT_FALSE(hilbert_shape_ok({1, 3, 6, 5}, 6));
  EXPECT_FALSE(hilbert_shape_ok({2, 3, 6}, 6));
  EXPECT_FALSE(hilbert_shape_ok({1, 7}, 6));
}

TEST(Hilbert, TableStopsAtBudget) {
  const auto X = enumerate_projective(incidence_configuration(two_triangles()), FiniteField::make(7, 1));
  const auto part = hilbert_table_rank(X, 0, 10, {2'000'000});
  ASSERT_LT(part.size(), 11u);
  const std::vector<std::uint64_t> want{1, 6, 21, 56, 126, 252, 457};
  for (std::size_t d = 0; d < part.size() && d < want.size(); ++d) EXPECT_EQ(part[d], want[d]);
}

TEST(Hilbert, Errors) {
  const auto f = FiniteField::make(3, 1);
  auto S = PolyRing::standard(f, 2);
  const VanishingIdealResult empty(S, {}, IdealRoute::Elimination, true);
  EXPECT_TORIC_ERROR(hilbert_series(empty), ErrorCode::StructureViolation);
  const auto I = vanishing_ideal_elimination(PointConfiguration::torus(2), f);
  EXPECT_TORIC_ERROR(hilbert_series(I, 5), ErrorCode::InvalidArgument);
}
