#include "phigroup/powergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace phigroup {

PowerGraph PowerGraph::build(const FiniteGroup& g) {
  PowerGraph pg(g);
  const std::size_t n = g.order();

  // Each <x> is listed once as the powers x, x^2, ..., e.
  std::vector<std::vector<Element>> powers(n);
  std::size_t total = 0;
  for (Element x = 0; x < n; ++x) {
    auto& list = powers[x];
    list.reserve(g.element_order(x));
    for (Element y = x;; y = g.mul(y, x)) {
      list.push_back(y);
      if (y == g.identity()) break;
    }
    total += list.size() - 1;
  }

  pg.directed_.reserve(total);
  for (Element x = 0; x < n; ++x)
    for (Element y : powers[x])
      if (y != x) pg.directed_.emplace_back(x, y);
  std::sort(pg.directed_.begin(), pg.directed_.end());

  for (const auto& [x, y] : pg.directed_)
    if (x < y && pg.has_directed_edge(y, x)) pg.undirected_.emplace_back(x, y);

  pg.degree_.assign(n, 0);
  for (const auto& [x, y] : pg.undirected_) {
    ++pg.degree_[x];
    ++pg.degree_[y];
  }

  // Mutual edges must coincide with pairs generating the same cyclic subgroup.
  std::vector<std::vector<Element>> sorted_powers(n);
  for (Element x = 0; x < n; ++x) {
    sorted_powers[x] = powers[x];
    std::sort(sorted_powers[x].begin(), sorted_powers[x].end());
  }
  std::size_t same_generated = 0;
  for (const auto& [x, y] : pg.directed_)
    if (x < y && sorted_powers[x] == sorted_powers[y]) {
      ++same_generated;
      if (!std::binary_search(pg.undirected_.begin(), pg.undirected_.end(), Edge{x, y}))
        throw std::logic_error("power graph: elements generating the same subgroup are not mutually adjacent");
    }
  if (same_generated != pg.undirected_.size())
    throw std::logic_error("power graph: a mutual edge joins elements generating different subgroups");

  const std::uint64_t phi = phi_of_group(g);
  if (2 * pg.undirected_.size() + n != phi)
    throw std::logic_error("power graph: undirected edge count differs from (phi(G) - |G|)/2");
  return pg;
}

std::size_t PowerGraph::undirected_degree(Element g) const {
  group_.require_valid(g);
  return degree_[g];
}

bool PowerGraph::has_directed_edge(Element from, Element to) const {
  return std::binary_search(directed_.begin(), directed_.end(), Edge{from, to});
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const PowerGraph& pg) {
  const FiniteGroup& g = pg.group();
  std::ostringstream os;
  os << "digraph \"" << dot_escape(g.name()) << "\" {\n";
  for (Element x = 0; x < g.order(); ++x) os << "  " << x << " [label=\"" << dot_escape(g.label(x)) << "\"];\n";
  for (const auto& [x, y] : pg.directed_edges()) os << "  " << x << " -> " << y << ";\n";
  os << "}\n";
  return os.str();
}

PowerGraphData to_data(const PowerGraph& pg) {
  return {pg.group().name(), pg.group().order(),
          {pg.directed_edges().begin(), pg.directed_edges().end()},
          {pg.undirected_edges().begin(), pg.undirected_edges().end()}};
}

std::string export_json(const PowerGraph& pg) {
  const PowerGraphData data = to_data(pg);
  nlohmann::ordered_json j;
  j["group"] = data.group;
  j["n"] = data.n;
  j["directed"] = data.directed;
  j["undirected"] = data.undirected;
  return j.dump() + "\n";
}

PowerGraphData parse_power_graph_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    PowerGraphData data;
    data.group = j.at("group").get<std::string>();
    data.n = j.at("n").get<std::size_t>();
    data.directed = j.at("directed").get<std::vector<Edge>>();
    data.undirected = j.at("undirected").get<std::vector<Edge>>();
    for (const auto* edges : {&data.directed, &data.undirected})
      for (auto [a, b] : *edges)
        if (a == b || a >= data.n || b >= data.n)
          throw std::invalid_argument("power graph json: bad edge " + std::to_string(a) + " " + std::to_string(b));
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("power graph json: ") + e.what());
  }
}

}  // namespace phigroup
