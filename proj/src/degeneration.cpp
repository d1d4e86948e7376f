#include "gpcnd/degeneration.hpp"

#include <stdexcept>

namespace gpcnd {

std::vector<Syllable> free_product_normal_form(const GraphSpec& graph,
                                               const SyllableWord& w) {
  std::vector<Syllable> stack;
  for (const Syllable& s : w) {
    const VertexGroup& vg = graph.group(s.vertex);
    if (!vg.contains(s.element)) {
      throw std::invalid_argument("syllable element not in vertex group");
    }
    if (vg.is_identity(s.element)) continue;
    if (!stack.empty() && stack.back().vertex == s.vertex) {
      // Adjacent stack entries always have distinct vertices, so a merge
      // never cascades: either the product replaces the top or the top
      // disappears.
      VertexElement merged = vg.multiply(stack.back().element, s.element);
      stack.pop_back();
      if (!vg.is_identity(merged)) {
        stack.push_back(Syllable{s.vertex, std::move(merged)});
      }
    } else {
      stack.push_back(s);
    }
  }
  return stack;
}

std::vector<VertexElement> direct_product_tuple(const GraphSpec& graph,
                                                const NormalForm& g) {
  std::vector<VertexElement> tuple(
      static_cast<std::size_t>(graph.vertex_count()));
  std::vector<bool> seen(tuple.size(), false);
  for (const Syllable& s : g.syllables) {
    const auto v = static_cast<std::size_t>(s.vertex);
    if (seen[v]) {
      throw std::invalid_argument(
          "direct_product_tuple: repeated vertex in form");
    }
    seen[v] = true;
    tuple[v] = s.element;
  }
  return tuple;
}

}  // namespace gpcnd
