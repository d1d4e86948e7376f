#pragma once

#include <cstddef>
#include <vector>

#include "gpcnd/word.hpp"

namespace gpcnd {

/// Cayley ball in the word metric over the union of the vertex groups'
/// generating sets. Elements are canonical forms, deduplicated, sorted by
/// (word length, canonical text); word_length[i] is the metric radius of
/// elements[i]. Untruncated balls contain the identity and are closed under
/// inverse.
struct Ball {
  int radius = 0;
  std::size_t cap = 0;
  bool truncated = false;
  std::vector<NormalForm> elements;
  std::vector<int> word_length;

  std::size_t size() const { return elements.size(); }
  /// Indices of the elements at each word length 0..radius.
  std::vector<std::vector<std::size_t>> spheres() const;
};

/// Breadth-first closure of {e} under right multiplication by every vertex
/// group generator, stopping at the radius or at the element cap, whichever
/// comes first. Hitting the cap sets `truncated` and is not an error.
Ball enumerate_ball(const GraphSpec& graph, int radius, std::size_t cap);

}  // namespace gpcnd
