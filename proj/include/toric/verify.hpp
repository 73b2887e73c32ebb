#pragma once

// Bundled configurations and the invariant suite run by `toric verify`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/codes.hpp"
#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/evaluation.hpp"
#include "toric/gf.hpp"
#include "toric/graphs.hpp"
#include "toric/groebner.hpp"
#include "toric/hilbert.hpp"
#include "toric/ideals.hpp"
#include "toric/io.hpp"
#include "toric/toricset.hpp"
#include "toric/zlat.hpp"

namespace toric {

inline Graph two_triangles() {
  return Graph::disjoint_union(Graph::cycle(3), Graph::cycle(3));
}

inline std::vector<ConfigFile> bundled_configurations() {
  auto graph_config = [](std::string name, FieldSpec f, Graph g) {
    ConfigFile c{std::move(name), f, incidence_configuration(g), g};
    return c;
  };
  std::vector<ConfigFile> out;
  out.push_back({"torus_s3_q5", {5, 1}, PointConfiguration::torus(3), std::nullopt});
  out.push_back(graph_config("triangle_q5", {5, 1}, Graph::cycle(3)));
  out.push_back(graph_config("four_cycle_q5", {5, 1}, Graph::cycle(4)));
  out.push_back(graph_config("path4_q4", {2, 2}, Graph::path(4)));
  out.push_back(graph_config("two_triangles_q3", {3, 1}, two_triangles()));
  out.push_back(graph_config("two_triangles_q4", {2, 2}, two_triangles()));
  out.push_back(graph_config("two_triangles_q7", {7, 1}, two_triangles()));
  out.push_back({"laurent_q7", {7, 1},
                 PointConfiguration(std::vector<IntVec>{{1, 0}, {0, 1}, {-1, -1}}),
                 std::nullopt});
  return out;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  bool inject_gf_fault = false;
  unsigned threads = 1;
  std::vector<ConfigFile> configs = bundled_configurations();
  std::size_t random_graphs = 50;
  std::size_t shuffles = 5;
  std::size_t closure_pairs = 200;
  std::size_t rank_check_max_points = 400;  // rank-vs-GB agreement on small X only
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"passed", passed()}, {"checks", arr}};
  }
};

namespace verify_detail {

struct Prepared {
  ConfigFile file;
  FiniteField field;
  ToricSet X;
  VanishingIdealResult elim, sat;
  HilbertProfile profile;
};

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, bool connected) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a != b && seen.insert({a, b}).second) e.push_back({a, b});
  };
  if (connected)
    for (std::size_t v = 1; v < n; ++v) add(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(0.35);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) add(a, b);
  if (e.empty()) add(0, 1);
  return Graph(n, e);
}

inline FiniteField random_small_field(std::mt19937_64& rng) {
  static const std::pair<int, int> fields[] = {{3, 1}, {2, 2}, {5, 1}};
  const auto [p, u] = fields[std::uniform_int_distribution<int>(0, 2)(rng)];
  return FiniteField::make(p, u);
}

}  // namespace verify_detail

/// Runs every invariant; each check records pass/fail and a short detail.
inline SuiteReport run_invariant_suite(const SuiteOptions& opt = {}) {
  using verify_detail::Prepared;
  SuiteReport report;
  std::mt19937_64 rng(opt.seed);

  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.rfind("FAIL", 0) != 0;
    } catch (const Error& e) {
      r.detail = std::string("FAIL: ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("FAIL: ") + e.what();
    }
    report.checks.push_back(std::move(r));
  };

  // field tables
  check("gf.tables", [&]() -> std::string {
    std::size_t fields = 0;
    for (const auto& c : opt.configs) {
      FiniteField f = c.field.make();
      if (opt.inject_gf_fault) f = f.with_corrupted_tables();
      const auto problems = f.validate();
      if (!problems.empty()) return "FAIL: GF(" + std::to_string(f.q()) + "): " + problems.front();
      std::uniform_int_distribution<Code> pick(0, f.q() - 1);
      for (int i = 0; i < 200; ++i) {
        const Code a = pick(rng), b = pick(rng), c = pick(rng);
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
          return "FAIL: distributivity in GF(" + std::to_string(f.q()) + ")";
        if (a && f.mul(a, f.inv(a)) != 1) return "FAIL: inverse in GF(" + std::to_string(f.q()) + ")";
      }
      ++fields;
    }
    return std::to_string(fields) + " fields validated";
  });

  std::vector<Prepared> prepared;
  check("setup.configurations", [&]() -> std::string {
    for (const auto& c : opt.configs) {
      Prepared p{c, c.field.make(), {}, {}, {}, {}};
      p.X = enumerate_projective(c.config, p.field, {100'000'000, opt.threads});
      p.elim = vanishing_ideal_elimination(c.config, p.field);
      p.sat = vanishing_ideal_saturation(c.config, p.field);
      p.profile = hilbert_series(p.elim);
      prepared.push_back(std::move(p));
    }
    return std::to_string(prepared.size()) + " configurations prepared";
  });

  check("toricset.group_closure", [&]() -> std::string {
    for (const auto& p : prepared) {
      std::uniform_int_distribution<std::size_t> pick(0, p.X.size() - 1);
      std::vector<Code> ones(p.X.width(), 1);
      if (!p.X.contains(ones)) return "FAIL: " + p.file.name + " lacks [1,...,1]";
      for (std::size_t k = 0; k < opt.closure_pairs; ++k) {
        const auto prod = point_product(p.field, p.X.point(pick(rng)), p.X.point(pick(rng)));
        if (!p.X.contains(prod)) return "FAIL: " + p.file.name + " not closed under products";
      }
    }
    return "closed on " + std::to_string(prepared.size()) + " sets";
  });

  check("toricset.kernel_count", [&]() -> std::string {
    for (const auto& p : prepared) {
      const auto K = kernel_of_theta(p.file.config, p.field);
      const auto total = toricset_detail::checked_power(p.field.q() - 1, p.file.config.n(), ~0ull);
      if (p.X.size() * K.size() != total)
        return "FAIL: " + p.file.name + ": |X|*|ker| = " + std::to_string(p.X.size() * K.size()) +
               " != " + std::to_string(total);
    }
    return "|X| |ker theta| = (q-1)^n on all sets";
  });

  check("toricset.polytope_bijection", [&]() -> std::string {
    for (const auto& p : prepared) {
      const auto K = kernel_of_theta(p.file.config, p.field);
      const auto P = polytope_integral_points(p.file.config, p.field);
      if (K.elements != P) return "FAIL: " + p.file.name + ": kernel and polytope points differ";
    }
    return "kernel tuples equal polytope points";
  });

  check("toricset.beta_independence", [&]() -> std::string {
    for (const auto& p : prepared) {
      const std::uint32_t q = p.field.q();
      Code other = 0;
      for (std::uint32_t k = 2; k < q - 1 && !other; ++k)
        if (std::gcd(k, q - 1) == 1) other = p.field.exp(k);
      if (!other) continue;
      const auto g = FiniteField::make(p.field.p(), p.field.u(), other);
      if (!(enumerate_projective(p.file.config, g) == p.X))
        return "FAIL: " + p.file.name + " depends on the generator";
    }
    return "point sets independent of beta";
  });

  check("mpoly.gb_canonical_shuffle", [&]() -> std::string {
    for (const auto& p : prepared) {
      const RingPtr& S = p.sat.ring();
      auto gens = torus_binomials(S);
      const auto lifted = p.file.config.lifted();
      for (const auto& c : integer_kernel(IntMatrix::from_columns(lifted.vectors(), lifted.n())))
        gens.push_back(lattice_binomial(S, to_int64(c)));
      if (gens.empty()) continue;
      const auto ref = buchberger(gens, S);
      std::uniform_int_distribution<Code> unit(1, p.field.q() - 1);
      for (std::size_t k = 0; k < opt.shuffles; ++k) {
        auto g = gens;
        std::shuffle(g.begin(), g.end(), rng);
        for (auto& x : g) x = x.scaled(unit(rng));
        if (!(buchberger(g, S).generators == ref.generators))
          return "FAIL: " + p.file.name + ": reduced basis changed under shuffle";
      }
    }
    return "reduced bases stable under shuffles and rescaling";
  });

  check("mpoly.binomial_preservation", [&]() -> std::string {
    for (const auto& p : prepared)
      for (const auto* I : {&p.elim, &p.sat})
        for (const auto& g : I->generators())
          if (!g.is_binomial()) return "FAIL: " + p.file.name + ": " + to_string(g);
    return "all basis elements are binomials";
  });

  check("ideals.generators_vanish", [&]() -> std::string {
    for (const auto& p : prepared) {
      const PointLogs logs(p.X);
      for (const auto* I : {&p.elim, &p.sat})
        for (const auto& g : I->generators())
          for (Code c : logs.evaluate(g))
            if (c) return "FAIL: " + p.file.name + ": " + to_string(g) + " does not vanish on X";
    }
    return "every generator vanishes on X";
  });

  check("ideals.nonzerodivisors", [&]() -> std::string {
    for (const auto& p : prepared) verify_lattice_ideal_structure(p.elim);
    return "(I : t_i) = I, binomial, Artinian reduction on all ideals";
  });

  check("ideals.saturation_certification", [&]() -> std::string {
    std::string detail;
    for (const auto& p : prepared) {
      const bool equal = ideal_equal(p.elim.generators(), p.sat.generators(), p.elim.ring());
      if (equal != p.sat.equality_certified())
        return "FAIL: " + p.file.name + ": certified=" + std::to_string(p.sat.equality_certified()) +
               " but routes equal=" + std::to_string(equal);
      if (p.file.graph && graph_saturation_equality(*p.file.graph, p.field) != p.sat.equality_certified())
        return "FAIL: " + p.file.name + ": graph criterion disagrees with invariant factors";
      detail += p.file.name + (equal ? "=cert " : "=uncert ");
    }
    return detail;
  });

  check("hilbert.degree_sum", [&]() -> std::string {
    for (const auto& p : prepared)
      if (!degree_consistency(p.X.size(), p.profile))
        return "FAIL: " + p.file.name + ": sum h_i = " + std::to_string(p.profile.degree) +
               ", |X| = " + std::to_string(p.X.size());
    return "sum h_i = |X| on all sets";
  });

  check("hilbert.rank_vs_gb", [&]() -> std::string {
    std::size_t compared = 0;
    for (const auto& p : prepared) {
      if (p.X.size() > opt.rank_check_max_points) continue;
      const PointLogs logs(p.X);
      for (std::uint32_t d = 0; d <= p.profile.regularity + 2; ++d) {
        const auto a = hilbert_function_rank(p.X, d, {}, &logs);
        const auto b = hilbert_function_gb(p.elim, d);
        if (a != b)
          return "FAIL: " + p.file.name + " d=" + std::to_string(d) + ": rank " + std::to_string(a) +
                 " vs GB " + std::to_string(b);
        ++compared;
      }
    }
    return std::to_string(compared) + " degrees agree";
  });

  check("hilbert.shape", [&]() -> std::string {
    for (const auto& p : prepared) {
      std::vector<std::uint64_t> H;
      for (std::uint32_t d = 0; d <= p.profile.regularity + 2; ++d) H.push_back(hilbert_function_gb(p.elim, d));
      if (!hilbert_shape_ok(H, p.X.size())) return "FAIL: " + p.file.name;
      if (H != p.profile.H) return "FAIL: " + p.file.name + ": h-vector sums disagree with staircase";
    }
    return "strictly increasing, then constant";
  });

  check("codes.distance_shape", [&]() -> std::string {
    std::string detail;
    struct Case {
      std::string name;
      PointConfiguration config;
      FiniteField field;
      std::optional<std::uint64_t> graph_n;
    };
    std::vector<Case> cases{{"torus_P1_q5", PointConfiguration::torus(2), FiniteField::make(5, 1), {}},
                            {"torus_P2_q5", PointConfiguration::torus(3), FiniteField::make(5, 1), {}},
                            {"triangle_q5", incidence_configuration(Graph::cycle(3)),
                             FiniteField::make(5, 1), 3}};
    for (const auto& c : cases) {
      const auto X = enumerate_projective(c.config, c.field);
      const auto I = vanishing_ideal_saturation(c.config, c.field);
      std::vector<std::uint64_t> deltas;
      for (std::uint32_t d = 1;; ++d) {
        CodeOptions co;
        co.graph_vertices = c.graph_n;
        const auto params = code_parameters(X, I, d, co);
        if (!params.exact) return "FAIL: " + c.name + " d=" + std::to_string(d) + " not exact";
        if (*params.exact > params.singleton) return "FAIL: Singleton violated";
        if (params.graph && *params.exact > *params.graph) return "FAIL: graph bound violated";
        deltas.push_back(*params.exact);
        if (*params.exact == 1 && params.k == params.m) break;
      }
      if (!distance_monotonicity_check(deltas)) return "FAIL: " + c.name + " distances not monotone";
      detail += c.name + ":";
      for (auto x : deltas) detail += " " + std::to_string(x);
      detail += "; ";
    }
    return detail;
  });

  check("codes.graph_bound_q2", [&]() -> std::string {
    try {
      graph_bound(5, 2, 1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::FieldTooSmall) return "FieldTooSmall raised as expected";
      throw;
    }
    return "FAIL: q=2 accepted";
  });

  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < opt.random_graphs; ++i)
    graphs.push_back(verify_detail::random_graph(
        rng, std::uniform_int_distribution<std::size_t>(3, 8)(rng), false));

  check("graphs.structure_theorem", [&]() -> std::string {
    for (const auto& g : graphs)
      if (!structure_theorem_check(g)) return "FAIL: graph " + graph_to_json(g).dump();
    return std::to_string(graphs.size()) + " random graphs";
  });

  check("zlat.delta_ratio", [&]() -> std::string {
    std::size_t tested = 0;
    for (const auto& g : graphs) {
      if (classify(g).c1 < 1) continue;
      const auto A = incidence_configuration(g);
      const auto B = A.lifted();
      const auto da = delta_r(IntMatrix::from_columns(A.vectors(), A.n()));
      const auto db = delta_r(IntMatrix::from_columns(B.vectors(), B.n()));
      if (da != 2 * db) return "FAIL: Delta_r(A)=" + da.str() + ", Delta_r(B)=" + db.str();
      ++tested;
    }
    return std::to_string(tested) + " non-bipartite graphs";
  });

  check("graphs.criteria_agree", [&]() -> std::string {
    for (const auto& g : graphs) {
      const auto f = verify_detail::random_small_field(rng);
      if (graph_saturation_equality(g, f) != saturation_equality_criterion(incidence_configuration(g), f.q()))
        return "FAIL: graph " + graph_to_json(g).dump() + " q=" + std::to_string(f.q());
    }
    return std::to_string(graphs.size()) + " graphs";
  });

  check("graphs.length_formula", [&]() -> std::string {
    for (std::size_t i = 0; i < opt.random_graphs; ++i) {
      const auto g = verify_detail::random_graph(
          rng, std::uniform_int_distribution<std::size_t>(3, 7)(rng), true);
      const auto f = verify_detail::random_small_field(rng);
      const auto X = enumerate_projective(incidence_configuration(g), f, {100'000'000, opt.threads});
      const auto expect = expected_length(g, f.q());
      if (!expect || *expect != X.size())
        return "FAIL: graph " + graph_to_json(g).dump() + " q=" + std::to_string(f.q()) +
               ": |X|=" + std::to_string(X.size());
    }
    return std::to_string(opt.random_graphs) + " connected graphs";
  });

  check("ideals.binomial_variety", [&]() -> std::string {
    std::size_t tested = 0;
    std::vector<std::pair<Graph, FiniteField>> cases;
    for (const auto& c : opt.configs)
      if (c.graph && c.field.q() <= 5) {
        const auto cls = classify(*c.graph);
        if (cls.connected() || cls.bipartite()) cases.push_back({*c.graph, c.field.make()});
      }
    for (std::size_t i = 0; i < 6; ++i) {
      const bool connected = i % 2 == 0;
      auto g = verify_detail::random_graph(rng, std::uniform_int_distribution<std::size_t>(3, 5)(rng), connected);
      const auto cls = classify(g);
      if (cls.connected() || cls.bipartite()) cases.push_back({g, verify_detail::random_small_field(rng)});
    }
    for (const auto& [g, f] : cases) {
      const auto A = incidence_configuration(g);
      const auto X = enumerate_projective(A, f);
      const auto V = binomial_variety(A, f);
      const auto Z = enumerate_projective(parameterize_binomial_variety(A, f), f);
      if (!(static_cast<const PointSet&>(X) == V))
        return "FAIL: X != V_A for graph " + graph_to_json(g).dump();
      if (!(static_cast<const PointSet&>(Z) == V))
        return "FAIL: parameterized Z != V_A for graph " + graph_to_json(g).dump();
      ++tested;
    }
    return std::to_string(tested) + " connected or bipartite graphs";
  });

  return report;
}

}  // namespace toric
