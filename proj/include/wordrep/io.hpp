#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graph.hpp"
#include "mu_line.hpp"
#include "orientation.hpp"
#include "search.hpp"
#include "words.hpp"

namespace wordrep {

// --- edge-list text format -------------------------------------------------
//
//   vertices: a b c
//   # comment
//   a b
//   b c

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& l : g.labels()) os << ' ' << l;
  os << '\n';
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.front() != "vertices:")
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": expected a 'vertices:' header");
      vertices.assign(tokens.begin() + 1, tokens.end());
      have_header = true;
      continue;
    }
    if (tokens.size() != 2)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    edges.emplace_back(tokens[0], tokens[1]);
  }
  if (!have_header) throw std::invalid_argument("edge list: missing 'vertices:' header");
  return build_graph(std::move(vertices), edges);
}

// --- JSON ------------------------------------------------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: each edge must be a 2-array");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return build_graph(std::move(vertices), edges);
}

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  if (cert.verdict == Certificate::Verdict::representable) {
    j["verdict"] = "representable";
    auto arcs = nlohmann::json::array();
    for (const auto& [t, h] : cert.witness->arc_labels()) arcs.push_back({t, h});
    j["witness"] = {{"arcs", std::move(arcs)}};
  } else {
    j["verdict"] = "non_representable";
    j["exhaustion"] = {{"branches_explored", cert.exhaustion->branches_explored},
                       {"symmetry_note", cert.exhaustion->symmetry_note},
                       {"workers", cert.exhaustion->workers}};
  }
  return j;
}

inline nlohmann::json remark_report_to_json(const RemarkReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  nlohmann::json clauses = nlohmann::json::object();
  for (const auto& c : report.clauses) {
    nlohmann::json entry = {{"description", c.description}, {"pass", c.pass}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    clauses[c.id] = std::move(entry);
  }
  j["clauses"] = std::move(clauses);
  j["all_pass"] = report.all_pass();
  return j;
}

// --- DOT -------------------------------------------------------------------

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& l : g.labels()) os << "  \"" << l << "\";\n";
  for (auto [u, v] : g.edges())
    os << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Orientation& d, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& l : d.base().labels()) os << "  \"" << l << "\";\n";
  for (const auto& [t, h] : d.arc_labels())
    os << "  \"" << t << "\" -> \"" << h << "\";\n";
  os << "}\n";
  return os.str();
}

// --- misc ------------------------------------------------------------------

/// One "u -> v" line per arc, in canonical edge order.
inline std::string orientation_to_text(const Orientation& d) {
  std::ostringstream os;
  for (const auto& [t, h] : d.arc_labels()) os << t << " -> " << h << '\n';
  return os.str();
}

inline Word parse_word(std::string_view text, WordView view = WordView::linear) {
  std::istringstream is{std::string(text)};
  Word w;
  w.view = view;
  std::string tok;
  while (is >> tok) w.letters.push_back(tok);
  return w;
}

inline std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i];
  }
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

/// Sniffs JSON ({...}) vs edge-list text.
inline Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(nlohmann::json::parse(text));
    break;
  }
  return parse_edge_list(text);
}

}  // namespace wordrep
