#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "phigroup/constructions.hpp"
#include "phigroup/group.hpp"
#include "phigroup/numtheory.hpp"
#include "phigroup/powergraph.hpp"

using namespace phigroup;

namespace {

// edges straight from the definition: h in <g>, h != g
std::set<Edge> brute_directed(const FiniteGroup& g) {
  std::set<Edge> out;
  for (Element x = 0; x < g.order(); ++x)
    for (auto y : oracle::powers(g, x))
      if (y != x) out.emplace(x, y);
  return out;
}

std::size_t count_lines(const std::string& text, const std::string& line) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(line, pos)) != std::string::npos) {
    ++count;
    pos += line.size();
  }
  return count;
}

}  // namespace

TEST_SUITE("powergraph") {

TEST_CASE("small examples") {
  auto triv = PowerGraph::build(cyclic(1));
  CHECK(triv.directed_edge_count() == 0);
  CHECK(triv.undirected_edge_count() == 0);
  auto c6 = PowerGraph::build(cyclic(6));
  CHECK(c6.undirected_edge_count() == 2);
  CHECK(c6.undirected_degree(0) == 0);
  CHECK(c6.undirected_degree(1) == 1);
  auto c5 = PowerGraph::build(cyclic(5));
  CHECK(c5.undirected_edge_count() == 6);
  for (Element g = 1; g < 5; ++g) CHECK(c5.undirected_degree(g) == 3);
  CHECK(PowerGraph::build(abelian(std::vector<std::uint64_t>{2, 2})).undirected_edge_count() == 0);
  CHECK_THROWS(c6.undirected_degree(6));
  CHECK(c6.has_directed_edge(1, 2));
  CHECK_FALSE(c6.has_directed_edge(2, 1));
  CHECK_FALSE(c6.has_directed_edge(1, 1));
}

TEST_CASE("exports") {
  auto triv = export_dot(PowerGraph::build(cyclic(1)));
  CHECK(count_lines(triv, "->") == 0);
  CHECK(count_lines(triv, "[label=") == 1);
  auto c2 = export_dot(PowerGraph::build(cyclic(2)));
  CHECK(count_lines(c2, "->") == 1);
  CHECK(count_lines(c2, "  1 -> 0;\n") == 1);
  auto c6 = parse_power_graph_json(export_json(PowerGraph::build(cyclic(6))));
  CHECK(c6.undirected.size() == 2);
  CHECK(c6.n == 6);
  CHECK(c6.group == "C6");
}

TEST_CASE("json round trip over the catalog") {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (const auto& g : catalog(n)) {
      auto pg = PowerGraph::build(g);
      CHECK(parse_power_graph_json(export_json(pg)) == to_data(pg));
    }
  CHECK_THROWS(parse_power_graph_json("[]"));
  CHECK_THROWS(parse_power_graph_json(R"({"group":"x","n":2,"directed":[[0,0]],"undirected":[]})"));
}

TEST_CASE("definition, mutual edges and degree law up to order 200") {
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (const auto& g : catalog(n)) {
      CAPTURE(g.name());
      auto pg = PowerGraph::build(g);
      std::size_t sum_orders = 0;
      for (Element x = 0; x < n; ++x) sum_orders += g.element_order(x) - 1;
      CHECK(pg.directed_edge_count() == sum_orders);
      CHECK(2 * pg.undirected_edge_count() + n == phi_of_group(g));
      for (Element x = 0; x < n; ++x) CHECK(pg.undirected_degree(x) + 1 == totient(g.element_order(x)));
      if (n > 60) continue;
      const auto want = brute_directed(g);
      CHECK(std::set<Edge>(pg.directed_edges().begin(), pg.directed_edges().end()) == want);
      std::set<Edge> mutual;
      for (auto [a, b] : want)
        if (a < b && oracle::powers(g, a) == oracle::powers(g, b)) mutual.emplace(a, b);
      CHECK(std::set<Edge>(pg.undirected_edges().begin(), pg.undirected_edges().end()) == mutual);
    }
}

TEST_CASE("deterministic output") {
  auto g = symmetric(4);
  CHECK(export_dot(PowerGraph::build(g)) == export_dot(PowerGraph::build(g)));
  CHECK(export_json(PowerGraph::build(g)) == export_json(PowerGraph::build(g)));
}

}
