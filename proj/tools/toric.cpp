// toric: enumerate algebraic toric sets, compute vanishing ideals, code
// parameters and run the invariant suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/toric.hpp"

using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct Job {
  std::string field;
  std::string config;
  std::string graph;
  std::string degree;
  std::string route = "auto";
  std::string format = "text";
  std::string out;
  std::string fault;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget_enum = 100'000'000;
  std::uint64_t budget_rank = 500'000'000;
  double budget_distance = 1e9;
  std::size_t budget_basis = 20'000;
  bool points = false;
};

struct Failure {
  int code;
  std::string message;
};

ConfigFile resolve_input(const Job& job) {
  ConfigFile c;
  if (!job.config.empty() && !job.graph.empty())
    throw Failure{2, "--config and --graph are exclusive"};
  if (!job.config.empty()) {
    c = load_config(job.config);
  } else if (!job.graph.empty()) {
    c.graph = load_graph(job.graph);
    c.config = incidence_configuration(*c.graph);
    c.name = job.graph;
  } else {
    throw Failure{2, "one of --config or --graph is required"};
  }
  if (!job.field.empty()) c.field = parse_field_spec(job.field);
  if (c.field.p == 0) throw Failure{2, "no field given; use --field p,u"};
  return c;
}

std::pair<std::uint32_t, std::uint32_t> parse_degrees(const std::string& text) {
  if (text.empty()) throw Failure{2, "--degree is required"};
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const auto d = static_cast<std::uint32_t>(std::stoul(text));
      return {d, d};
    }
    const auto lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
    const auto hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
    if (lo > hi) throw Failure{2, "empty degree range " + text};
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Failure{2, "--degree must be D or D1..D2, got '" + text + "'"};
  }
}

GroebnerOptions gb_options(const Job& job) {
  GroebnerOptions g;
  g.max_basis_size = job.budget_basis;
  return g;
}

VanishingIdealResult compute_ideal(const Job& job, const ConfigFile& c, const FiniteField& f) {
  IdealOptions opt;
  opt.gb = gb_options(job);
  if (job.route == "elim") return vanishing_ideal_elimination(c.config, f, opt);
  if (job.route == "sat") return vanishing_ideal_saturation(c.config, f, opt);
  if (saturation_equality_criterion(c.config, f.q())) return vanishing_ideal_saturation(c.config, f, opt);
  return vanishing_ideal_elimination(c.config, f, opt);
}

std::string csv_header(const json& header) {
  std::ostringstream os;
  os << "# tool=" << header["tool"].get<std::string>() << " version=" << header["version"].get<std::string>()
     << " field=" << header["field"]["p"] << "," << header["field"]["u"]
     << " config_hash=" << header["config_hash"].get<std::string>() << "\n";
  return os.str();
}

std::string text_header(const json& header) {
  std::ostringstream os;
  os << "toric " << header["version"].get<std::string>() << "  GF(" << header["field"]["q"]
     << ")  config " << header["config_hash"].get<std::string>() << "\n";
  return os.str();
}

/// Flat key/value summary rendered in the requested format.
std::string render_summary(const Job& job, const json& header, const json& body) {
  if (job.format == "json") {
    json j{{"header", header}};
    j.update(body);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << (job.format == "csv" ? csv_header(header) + "key,value\n" : text_header(header));
  for (const auto& [k, v] : body.items()) {
    if (v.is_array() || v.is_object()) continue;
    const std::string val = v.is_string() ? v.get<std::string>() : v.dump();
    if (job.format == "csv") os << k << "," << val << "\n";
    else os << k << ": " << val << "\n";
  }
  return os.str();
}

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(job.out);
  if (!o) throw Failure{1, "cannot write " + job.out};
  o << text;
}

int cmd_enumerate(const Job& job) {
  const auto c = resolve_input(job);
  const auto f = c.field.make();
  const EnumerationOptions eo{job.budget_enum, job.threads};
  const auto X = enumerate_projective(c.config, f, eo);
  const auto K = kernel_of_theta(c.config, f, eo);
  const auto total = toricset_detail::checked_power(f.q() - 1, c.config.n(), ~0ull);
  const auto header = output_header(c.field, c.config);
  json body{{"command", "enumerate"},
            {"name", c.name},
            {"n", c.config.n()},
            {"s", c.config.s()},
            {"q", f.q()},
            {"cardinality", X.size()},
            {"kernel_size", K.size()},
            {"units_to_n", total},
            {"product_check", X.size() * K.size() == total}};
  if (c.graph) {
    if (const auto e = expected_length(*c.graph, f.q())) body["graph_length_formula"] = *e;
  }
  if (job.points) {
    std::ostringstream pts;
    if (job.format == "json") {
      json arr = json::array();
      for (std::size_t i = 0; i < X.size(); ++i) {
        json row = json::array();
        for (Code x : X.point(i)) row.push_back(f.discrete_log(x));
        arr.push_back(row);
      }
      body["point_logs"] = arr;
    } else {
      write_point_logs(pts, X);
      emit(job, render_summary(job, header, body) + (job.format == "csv" ? "" : "points (discrete logs):\n") +
                    pts.str());
      return body["product_check"].get<bool>() ? 0 : 1;
    }
  }
  emit(job, render_summary(job, header, body));
  return body["product_check"].get<bool>() ? 0 : 1;
}

int cmd_ideal(const Job& job) {
  const auto c = resolve_input(job);
  const auto f = c.field.make();
  const auto I = compute_ideal(job, c, f);
  const bool certified = saturation_equality_criterion(c.config, f.q());
  const auto minimal = minimal_generators(I.generators());
  const auto header = output_header(c.field, c.config);
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(to_string(g));
  json body{{"command", "ideal"},
            {"name", c.name},
            {"route", to_string(I.route())},
            {"saturation_certified", certified},
            {"basis_size", I.generators().size()},
            {"minimal_generators", minimal.count()},
            {"generators", gens}};
  if (I.route() == IdealRoute::Saturation && !certified)
    std::cerr << "warning: saturation route without certification; result may be a proper subideal\n";
  std::string text = render_summary(job, header, body);
  if (job.format == "csv") {
    text += "index,generator\n";
    for (std::size_t i = 0; i < gens.size(); ++i) text += std::to_string(i + 1) + "," + gens[i].get<std::string>() + "\n";
  } else if (job.format == "text") {
    for (const auto& g : gens) text += "  " + g.get<std::string>() + "\n";
  }
  emit(job, text);
  return 0;
}

int cmd_params(const Job& job) {
  const auto c = resolve_input(job);
  const auto f = c.field.make();
  const auto [lo, hi] = parse_degrees(job.degree);
  const auto X = enumerate_projective(c.config, f, {job.budget_enum, job.threads});
  const PointLogs logs(X);
  std::optional<VanishingIdealResult> ideal;
  auto get_ideal = [&]() -> const VanishingIdealResult& {
    if (!ideal) ideal = compute_ideal(job, c, f);
    return *ideal;
  };
  std::optional<std::uint64_t> graph_n;
  if (c.graph) {
    const auto cls = classify(*c.graph);
    if (cls.connected() && !cls.bipartite() && c.graph->n() >= 3) graph_n = c.graph->n();
  }
  std::optional<unsigned> torus_dim;
  if (c.config == PointConfiguration::torus(c.config.s()) && (c.config.s() == 2 || c.config.s() == 3))
    torus_dim = static_cast<unsigned>(c.config.s() - 1);

  json rows = json::array();
  for (std::uint32_t d = lo; d <= hi; ++d) {
    json row{{"d", d}, {"m", X.size()}};
    std::uint64_t k;
    try {
      k = hilbert_function_rank(X, d, {job.budget_rank}, &logs);
      row["k_route"] = "rank";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      try {
        k = hilbert_function_gb(get_ideal(), d);
        row["k_route"] = "gb";
      } catch (const Error& e2) {
        if (e2.code() != ErrorCode::ResourceExceeded) throw;
        row["k_route"] = "unknown";
        rows.push_back(row);
        continue;
      }
    }
    row["k"] = k;
    if (d == 0) {
      row["singleton"] = X.size();
      row["delta"] = X.size();
      row["delta_lower"] = row["delta_upper"] = X.size();
      row["provenance"] = "constant";
      rows.push_back(row);
      continue;
    }
    CodeOptions co;
    co.distance.budget = job.budget_distance;
    co.matrix_budget = job.budget_rank;
    co.graph_vertices = f.q() >= 3 ? graph_n : std::nullopt;
    co.torus_dim = f.q() >= 3 ? torus_dim : std::nullopt;
    co.dimension = k;
    const auto cost = minimum_distance_cost(f.q(), k, X.size());
    co.exact = std::min(cost.codewords, cost.supports) <= job.budget_distance;
    static const VanishingIdealResult unused;
    const auto p = code_parameters(X, co.exact ? get_ideal() : unused, d, co);
    row["singleton"] = p.singleton;
    if (p.graph) row["graph_bound"] = *p.graph;
    if (p.formula) row["torus_formula"] = *p.formula;
    if (p.exact) row["delta"] = *p.exact;
    row["delta_lower"] = p.lower;
    row["delta_upper"] = p.upper;
    row["provenance"] = p.provenance;
    if (p.exact) row["mds"] = *p.exact == p.singleton;
    rows.push_back(row);
  }

  const auto header = output_header(c.field, c.config);
  const char* columns[] = {"d", "m", "k", "k_route", "singleton", "graph_bound", "torus_formula",
                           "delta", "delta_lower", "delta_upper", "provenance", "mds"};
  std::ostringstream os;
  if (job.format == "json") {
    json j{{"header", header}, {"command", "params"}, {"name", c.name}, {"rows", rows}};
    os << j.dump(2) << "\n";
  } else {
    const bool csv = job.format == "csv";
    os << (csv ? csv_header(header) : text_header(header));
    bool first = true;
    for (const char* col : columns) {
      os << (first ? "" : csv ? "," : "\t") << col;
      first = false;
    }
    os << "\n";
    for (const auto& row : rows) {
      first = true;
      for (const char* col : columns) {
        os << (first ? "" : csv ? "," : "\t");
        first = false;
        if (!row.contains(col)) {
          os << (csv ? "" : "-");
          continue;
        }
        const auto& v = row[col];
        os << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      os << "\n";
    }
  }
  emit(job, os.str());
  for (const auto& row : rows)
    if (row["k_route"] == "unknown") return 1;
  return 0;
}

int cmd_verify(const Job& job) {
  SuiteOptions opt;
  opt.seed = job.seed;
  opt.threads = job.threads;
  if (!job.fault.empty()) {
    if (job.fault != "gf-tables") throw Failure{2, "unknown fault '" + job.fault + "'"};
    opt.inject_gf_fault = true;
  }
  if (!job.config.empty()) opt.configs = {load_config(job.config)};
  const auto report = run_invariant_suite(opt);
  std::ostringstream os;
  if (job.format == "json") {
    json j{{"header", {{"tool", "toric"}, {"version", kToolVersion}, {"seed", job.seed}}}};
    j.update(json(report.to_json()));
    os << j.dump(2) << "\n";
  } else if (job.format == "csv") {
    os << "# tool=toric version=" << kToolVersion << " seed=" << job.seed << "\n";
    os << "check,passed,detail\n";
    for (const auto& c : report.checks)
      os << c.name << "," << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
  } else {
    os << "toric " << kToolVersion << "  verify  seed " << job.seed << "\n";
    for (const auto& c : report.checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
    os << (report.passed() ? "all checks passed" : "some checks failed") << "\n";
  }
  emit(job, os.str());
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric: algebraic toric sets, vanishing ideals and evaluation codes"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);
  Job job;

  auto common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("--field", job.field, "field as p or p,u (overrides the config)");
      sub->add_option("--config", job.config, "configuration JSON file");
      sub->add_option("--graph", job.graph, "graph file (JSON or 'i j' lines); uses the incidence configuration");
    }
    sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", job.out, "write output here instead of stdout");
    sub->add_option("--threads", job.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--seed", job.seed, "seed for sampled checks");
    sub->add_option("--budget-enum", job.budget_enum, "max monomial evaluations")->check(CLI::PositiveNumber);
    sub->add_option("--budget-rank", job.budget_rank, "max matrix entries touched")->check(CLI::PositiveNumber);
    sub->add_option("--budget-distance", job.budget_distance, "max distance search operations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-basis", job.budget_basis, "max Groebner basis size")->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enumerate", "enumerate X and the kernel of theta");
  common(en, true);
  en->add_flag("--points", job.points, "also print the points as discrete logs");

  auto* id = app.add_subcommand("ideal", "compute I(X)");
  common(id, true);
  id->add_option("--route", job.route, "elim, sat or auto")->check(CLI::IsMember({"elim", "sat", "auto"}));

  auto* pa = app.add_subcommand("params", "Hilbert function and code parameters per degree");
  common(pa, true);
  pa->add_option("--degree", job.degree, "D or D1..D2")->required();
  pa->add_option("--route", job.route, "ideal route when a basis is needed")
      ->check(CLI::IsMember({"elim", "sat", "auto"}));

  auto* ve = app.add_subcommand("verify", "run the invariant suite");
  common(ve, false);
  ve->add_option("--config", job.config, "run the suite on this configuration only");
  ve->add_option("--inject-fault", job.fault, "corrupt a component (gf-tables)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*en) return cmd_enumerate(job);
    if (*id) return cmd_ideal(job);
    if (*pa) return cmd_params(job);
    return cmd_verify(job);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
}
