#include "topoforge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "topoforge/error.hpp"

namespace topoforge {

std::string to_edge_list(const RegularGraph& g) {
  std::ostringstream os;
  os << g.n << ' ' << g.k << ' ' << (g.ring ? 1 : 0) << '\n';
  for (const auto& [u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

RegularGraph parse_edge_list(const std::string& text, std::string name) {
  std::istringstream is(text);
  int n, k, r;
  if (!(is >> n >> k >> r) || (r != 0 && r != 1))
    throw Error(errc::parse_error, "bad edge-list header, expected 'N k R'");
  std::vector<Edge> edges;
  int u, v;
  while (is >> u >> v) edges.emplace_back(u, v);
  if (!is.eof()) throw Error(errc::parse_error, "trailing garbage in edge list");
  return build_graph(n, k, std::move(edges), r == 1, std::move(name));
}

std::string to_json(const RegularGraph& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["n"] = g.n;
  j["k"] = g.k;
  j["ring"] = g.ring;
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

RegularGraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return build_graph(j.at("n").get<int>(), j.at("k").get<int>(), std::move(edges),
                       j.at("ring").get<bool>(), j.value("name", ""));
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, std::string("bad graph document: ") + e.what());
  }
}

std::string to_dot(const RegularGraph& g) {
  std::ostringstream os;
  os << "graph \"" << g.name << "\" {\n  layout=circo;\n  node [shape=circle];\n";
  for (const auto& [u, v] : g.edges) {
    os << "  " << u << " -- " << v;
    if (g.ring && g.is_ring_edge(u, v)) os << " [style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

RegularGraph read_graph_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  if (path.extension() == ".json") return parse_json(text);
  return parse_edge_list(text, path.stem().string());
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(errc::parse_error, "cannot open for writing: " + path.string());
  os << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(errc::parse_error, "cannot open: " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace topoforge
