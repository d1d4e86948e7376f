#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpcnd/vertex_group.hpp"

namespace gpcnd {

/// A finite simple graph (no loops, no repeated edges) whose vertices carry
/// vertex groups. Vertices are numbered 0..V-1; that order also breaks ties
/// in the canonical normal form, so it is part of the group presentation.
/// Immutable after construction.
class GraphSpec {
 public:
  GraphSpec(std::vector<VertexGroup> groups,
            const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(groups_.size()); }
  const VertexGroup& group(int v) const;
  const std::vector<VertexGroup>& groups() const { return groups_; }

  /// Edges normalized to (min,max) and sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  /// u in st(v) = lk(v) ∪ {v}.
  bool in_star(int u, int v) const { return u == v || adjacent(u, v); }
  std::vector<int> star(int v) const;

  bool edgeless() const { return edges_.empty(); }
  bool complete() const;

  std::string describe() const;

 private:
  void check_vertex(int v) const;

  std::vector<VertexGroup> groups_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;  // row-major V*V adjacency
};

}  // namespace gpcnd
