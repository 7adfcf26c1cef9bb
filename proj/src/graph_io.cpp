#include "coverlab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coverlab/error.hpp"
#include "json.hpp"

namespace coverlab {

namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const std::string& as_label(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string label");
  return v.get_ref<const std::string&>();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("graph file is not valid JSON at " + position(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw InputError("graph file: top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "edges") throw InputError("graph file: unknown field \"" + key + "\"");
  if (!doc.contains("vertices")) throw InputError("graph file: missing field \"vertices\"");
  if (!doc.contains("edges")) throw InputError("graph file: missing field \"edges\"");

  const json& vs = doc["vertices"];
  if (!vs.is_array()) throw InputError("vertices: expected an array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    labels.push_back(as_label(vs[i], where));
    if (!seen.insert(labels.back()).second) throw InputError(where + ": duplicate vertex '" + labels.back() + "'");
  }

  const json& es = doc["edges"];
  if (!es.is_array()) throw InputError("edges: expected an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw InputError(where + ": expected a 2-element list");
    for (int k = 0; k < 2; ++k) {
      const std::string end = as_label(es[i][k], where + "[" + std::to_string(k) + "]");
      if (!seen.count(end)) throw InputError(where + "[" + std::to_string(k) + "]: unknown vertex '" + end + "'");
    }
    edges.emplace_back(es[i][0].get<std::string>(), es[i][1].get<std::string>());
    if (edges.back().first == edges.back().second) throw InputError(where + ": loop at '" + edges.back().first + "'");
  }
  return Graph::from_edge_list(std::move(labels), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

}  // namespace coverlab
