#include "gpcnd/ball.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gpcnd {

std::vector<std::vector<std::size_t>> Ball::spheres() const {
  std::vector<std::vector<std::size_t>> by_radius(
      static_cast<std::size_t>(radius) + 1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    by_radius[static_cast<std::size_t>(word_length[i])].push_back(i);
  }
  return by_radius;
}

Ball enumerate_ball(const GraphSpec& graph, int radius, std::size_t cap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (cap < 1) throw std::invalid_argument("ball cap must be >= 1");

  std::vector<Syllable> generator_syllables;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (const VertexElement& g : graph.group(v).generators()) {
      generator_syllables.push_back(Syllable{v, g});
    }
  }

  Ball ball;
  ball.radius = radius;
  ball.cap = cap;

  std::map<NormalForm, int> depth;
  depth.emplace(NormalForm{}, 0);
  std::vector<NormalForm> frontier{NormalForm{}};

  for (int r = 1; r <= radius && !frontier.empty() && !ball.truncated; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : frontier) {
      for (const Syllable& s : generator_syllables) {
        NormalForm h = multiply(graph, g, NormalForm{{s}});
        if (depth.count(h)) continue;
        if (depth.size() >= cap) {
          ball.truncated = true;
          break;
        }
        depth.emplace(h, r);
        next.push_back(std::move(h));
      }
      if (ball.truncated) break;
    }
    frontier = std::move(next);
  }

  ball.elements.reserve(depth.size());
  ball.word_length.reserve(depth.size());
  std::vector<std::pair<int, NormalForm>> ordered;
  ordered.reserve(depth.size());
  for (auto& [g, d] : depth) ordered.emplace_back(d, g);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return format_word(graph, a.second) <
                            format_word(graph, b.second);
                   });
  for (auto& [d, g] : ordered) {
    ball.elements.push_back(std::move(g));
    ball.word_length.push_back(d);
  }
  return ball;
}

}  // namespace gpcnd
