#include "gpcnd/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpcnd {

GraphSpec::GraphSpec(std::vector<VertexGroup> groups,
                     const std::vector<std::pair<int, int>>& edges)
    : groups_(std::move(groups)) {
  const int n = vertex_count();
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loop edge");
    if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

void GraphSpec::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("vertex id out of range");
  }
}

const VertexGroup& GraphSpec::group(int v) const {
  check_vertex(v);
  return groups_[static_cast<std::size_t>(v)];
}

bool GraphSpec::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u) * vertex_count() + v] != 0;
}

std::vector<int> GraphSpec::star(int v) const {
  check_vertex(v);
  std::vector<int> s;
  for (int u = 0; u < vertex_count(); ++u) {
    if (u == v || adjacent(u, v)) s.push_back(u);
  }
  return s;
}

bool GraphSpec::complete() const {
  const std::size_t n = groups_.size();
  return edges_.size() == n * (n - 1) / 2;
}

std::string GraphSpec::describe() const {
  std::string s = "vertices[";
  for (int v = 0; v < vertex_count(); ++v) {
    if (v) s += ", ";
    s += std::to_string(v) + ":" + groups_[v].describe();
  }
  s += "] edges[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
  }
  s += "]";
  return s;
}

}  // namespace gpcnd
