#pragma once

// JSON and text formats for configurations, graphs, point sets and output
// headers.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/gf.hpp"
#include "toric/graphs.hpp"
#include "toric/toricset.hpp"

namespace toric {

inline constexpr const char* kToolVersion = "0.1.0";

struct FieldSpec {
  std::uint32_t p = 0, u = 1;
  std::uint64_t q() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < u; ++i) r *= p;
    return r;
  }
  FiniteField make() const { return FiniteField::make(p, u); }
  bool operator==(const FieldSpec&) const = default;
};

/// A configuration file: field, exponent vectors and (optionally) the graph
/// the vectors come from.
struct ConfigFile {
  std::string name;
  FieldSpec field;
  PointConfiguration config;
  std::optional<Graph> graph;
};

namespace io_detail {

[[noreturn]] inline void parse_fail(const std::string& what) {
  fail(ErrorCode::ParseError, what);
}

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(origin + ": " + e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph graph_from_json(const nlohmann::json& j, const std::string& origin) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) parse_fail(origin + ": edge must have two endpoints");
      const auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
      if (a < 1 || b < 1) parse_fail(origin + ": vertices are 1-indexed");
      edges.push_back({static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)});
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(origin + ": " + e.what());
  } catch (const Error& e) {
    parse_fail(origin + ": " + e.what());
  }
}

}  // namespace io_detail

inline FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec f;
  const auto comma = text.find(',');
  try {
    f.p = static_cast<std::uint32_t>(std::stoul(text.substr(0, comma)));
    f.u = comma == std::string::npos ? 1 : static_cast<std::uint32_t>(std::stoul(text.substr(comma + 1)));
  } catch (const std::exception&) {
    io_detail::parse_fail("field must be 'p' or 'p,u', got '" + text + "'");
  }
  return f;
}

inline ConfigFile parse_config(const std::string& text, const std::string& origin = "config") {
  const auto j = io_detail::parse_json(text, origin);
  ConfigFile c;
  try {
    c.name = j.value("name", std::string());
    const auto& fj = j.at("field");
    c.field.p = fj.at("p").get<std::uint32_t>();
    c.field.u = fj.value("u", 1u);
    if (j.contains("graph")) {
      c.graph = io_detail::graph_from_json(j.at("graph"), origin);
      c.config = incidence_configuration(*c.graph);
      if (j.contains("exponents") &&
          PointConfiguration(j.at("exponents").get<std::vector<IntVec>>()) != c.config)
        io_detail::parse_fail(origin + ": exponents disagree with the graph");
    } else {
      c.config = PointConfiguration(j.at("exponents").get<std::vector<IntVec>>());
    }
  } catch (const nlohmann::json::exception& e) {
    io_detail::parse_fail(origin + ": " + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    io_detail::parse_fail(origin + ": " + e.what());
  }
  return c;
}

inline ConfigFile load_config(const std::string& path) {
  return parse_config(io_detail::slurp(path), path);
}

/// JSON {"n": int, "edges": [[i,j],...]} (1-indexed) or lines "i j".
inline Graph parse_graph(const std::string& text, const std::string& origin = "graph") {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return io_detail::graph_from_json(io_detail::parse_json(text, origin), origin);
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::int64_t a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || a < 1 || b < 1)
      io_detail::parse_fail(origin + ":" + std::to_string(lineno) + ": expected 'i j' with i, j >= 1");
    std::string rest;
    if (ls >> rest) io_detail::parse_fail(origin + ":" + std::to_string(lineno) + ": trailing text");
    edges.push_back({static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(a, b)));
  }
  try {
    return Graph(n, edges);
  } catch (const Error& e) {
    io_detail::parse_fail(origin + ": " + e.what());
  }
}

inline Graph load_graph(const std::string& path) {
  return parse_graph(io_detail::slurp(path), path);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return {{"n", g.n()}, {"edges", edges}};
}

inline nlohmann::json config_to_json(const ConfigFile& c) {
  nlohmann::json j;
  if (!c.name.empty()) j["name"] = c.name;
  j["field"] = {{"p", c.field.p}, {"u", c.field.u}};
  j["exponents"] = c.config.vectors();
  if (c.graph) j["graph"] = graph_to_json(*c.graph);
  return j;
}

/// 64-bit FNV-1a of "n;v_1;...;v_s" with comma-separated entries.
inline std::uint64_t config_hash(const PointConfiguration& c) {
  std::string text = std::to_string(c.n());
  for (const auto& v : c.vectors()) {
    text += ';';
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) text += ',';
      text += std::to_string(v[j]);
    }
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

inline nlohmann::json output_header(const FieldSpec& f, const PointConfiguration& c) {
  return {{"tool", "toric"},
          {"version", kToolVersion},
          {"field", {{"p", f.p}, {"u", f.u}, {"q", f.q()}}},
          {"config_hash", hex64(config_hash(c))}};
}

/// One line per point: discrete logs of the coordinates.
inline void write_point_logs(std::ostream& os, const PointSet& X) {
  const FiniteField& f = X.field();
  for (std::size_t j = 0; j < X.size(); ++j) {
    auto p = X.point(j);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ' ';
      if (p[i] == 0) os << "ZERO";
      else os << f.discrete_log(p[i]);
    }
    os << '\n';
  }
}

}  // namespace toric
