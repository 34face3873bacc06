#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phigroup/group.hpp"

namespace phigroup {

using Edge = std::pair<Element, Element>;

/// Directed power graph: (g, h) is an edge iff h lies in <g> and h != g.
/// The undirected edges are the mutually directed pairs {g, h} with g < h;
/// they are always derived from the directed set.
class PowerGraph {
 public:
  /// Builds the graph and checks that mutual edges are exactly the pairs of
  /// distinct elements generating the same cyclic subgroup, and that the
  /// undirected edge count is (phi(G) - |G|) / 2. A mismatch throws
  /// std::logic_error.
  static PowerGraph build(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }

  /// Sorted lexicographically.
  std::span<const Edge> directed_edges() const noexcept { return directed_; }
  /// Pairs (g, h) with g < h, sorted.
  std::span<const Edge> undirected_edges() const noexcept { return undirected_; }

  std::size_t directed_edge_count() const noexcept { return directed_.size(); }
  std::size_t undirected_edge_count() const noexcept { return undirected_.size(); }
  /// Number of undirected edges at g; equals phi(o(g)) - 1.
  std::size_t undirected_degree(Element g) const;

  bool has_directed_edge(Element from, Element to) const;

 private:
  explicit PowerGraph(FiniteGroup g) : group_(std::move(g)) {}

  FiniteGroup group_;
  std::vector<Edge> directed_;
  std::vector<Edge> undirected_;
  std::vector<std::size_t> degree_;
};

/// Graphviz digraph: a node line per element, then one "a -> b;" line per
/// directed edge.
std::string export_dot(const PowerGraph& pg);

/// `{"group": str, "n": int, "directed": [[int,int]], "undirected": [[int,int]]}`
/// with pairs in ascending order.
std::string export_json(const PowerGraph& pg);

struct PowerGraphData {
  std::string group;
  std::size_t n = 0;
  std::vector<Edge> directed;
  std::vector<Edge> undirected;

  friend bool operator==(const PowerGraphData&, const PowerGraphData&) = default;
};

PowerGraphData to_data(const PowerGraph& pg);
PowerGraphData parse_power_graph_json(std::string_view text);

}  // namespace phigroup
