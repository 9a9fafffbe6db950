#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gss/bitvec.hpp"

namespace gss {

using VertexSet = BitVec;

// Simple undirected graph on vertices 0..n-1, adjacency kept as n bit-rows.
// No self-loops; the adjacency relation stays symmetric by construction.
// Immutable in practice once built, so values are safe to share across
// threads.
class Graph {
 public:
  explicit Graph(int n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be at least 1");
    n_ = n;
    adj_.assign(static_cast<size_t>(n), BitVec(n));
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<size_t>(u)].get(v);
  }

  // Adds the undirected edge {u,v}; re-adding an existing edge is a no-op.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
  }

  const BitVec& neighbours(int u) const {
    check_vertex(u);
    return adj_[static_cast<size_t>(u)];
  }

  int edge_count() const;

  // Edges as (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Graph: vertex index out of range");
  }

  int n_ = 0;
  std::vector<BitVec> adj_;
};

VertexSet neighbourhood(const Graph& g, int u);

// Vertices with an odd number of neighbours inside d; equivalently the
// XOR-fold of the adjacency rows of d's members.
VertexSet odd_neighbourhood(const Graph& g, const VertexSet& d);

Graph complement_graph(const Graph& g);

struct GraphParseError : std::runtime_error {
  GraphParseError(int line_number, const std::string& what)
      : std::runtime_error("graph parse error at line " + std::to_string(line_number) +
                           ": " + what),
        line(line_number) {}
  int line;
};

// Edge-list format: the first non-comment, non-empty line is the vertex
// count n; every further non-empty line is "u v" with 0 <= u,v < n and
// u != v. Lines starting with '#' are comments. Duplicate edges collapse;
// self-loops are rejected.
Graph parse_graph(std::string_view text);

// FNV-1a 64 of the canonical listing (vertex count, then edges sorted with
// u < v), as a 16-digit lowercase hex string. Ties share files to the graph
// they were produced from.
std::string graph_hash(const Graph& g);

}  // namespace gss
