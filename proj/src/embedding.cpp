#include "gpcnd/embedding.hpp"

#include <stdexcept>

namespace gpcnd {

AbstractVector embed(const GraphSpec& graph, const NormalForm& g) {
  AbstractVector vec;
  NormalForm prefix;  // canonical form of g_1 ... g_{i-1}
  for (const Syllable& s : g.syllables) {
    CosetKey key{coset_representative(graph, prefix, s.vertex), s.vertex};
    auto [it, inserted] = vec.entries.emplace(key, s.element);
    if (!inserted) {
      // Reduced forms place distinct syllables in distinct summands; a
      // collision means the word was not reduced or the coset map broke.
      throw std::logic_error("embedding summand collision for syllable at v" +
                             std::to_string(s.vertex));
    }
    prefix = multiply(graph, prefix, NormalForm{{s}});
  }
  return vec;
}

double vec_inner(const GraphSpec& graph, const AbstractVector& x,
                 const AbstractVector& y) {
  double sum = 0.0;
  auto ix = x.entries.begin();
  auto iy = y.entries.begin();
  while (ix != x.entries.end() && iy != y.entries.end()) {
    if (ix->first < iy->first) {
      ++ix;
    } else if (iy->first < ix->first) {
      ++iy;
    } else {
      sum += graph.group(ix->first.vertex).inner(ix->second, iy->second);
      ++ix;
      ++iy;
    }
  }
  return sum;
}

double embedding_kernel(const GraphSpec& graph, const NormalForm& g,
                        const NormalForm& h) {
  AbstractVector x = embed(graph, g);
  AbstractVector y = embed(graph, h);
  return vec_inner(graph, x, x) - 2.0 * vec_inner(graph, x, y) +
         vec_inner(graph, y, y);
}

double phi_tilde(const GraphSpec& graph, const NormalForm& g) {
  double sum = 0.0;
  for (const Syllable& s : g.syllables) {
    sum += graph.group(s.vertex).phi(s.element);
  }
  return sum;
}

double phi_gamma(const GraphSpec& graph, const NormalForm& g) {
  return static_cast<double>(reduced_length(g)) + phi_tilde(graph, g);
}

}  // namespace gpcnd
