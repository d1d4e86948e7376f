// Test-only oracle: decides element equality in a graph product of finite
// cyclic groups by exhaustive closure under the three raw word operations
// (shuffle, drop identity, merge same-vertex neighbors). Never calls the
// production normalizer; agreement between the two routes is what the tests
// assert.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpcnd/word.hpp"

namespace gpcnd::testing {

using RawLetter = std::pair<int, std::int64_t>;  // (vertex, residue)
using RawWord = std::vector<RawLetter>;

inline SyllableWord to_syllables(const RawWord& w) {
  SyllableWord s;
  s.reserve(w.size());
  for (auto [v, r] : w) s.push_back(Syllable{v, VertexElement{r, {}}});
  return s;
}

class RewritingOracle {
 public:
  explicit RewritingOracle(const GraphSpec& graph) : graph_(graph) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (graph.group(v).kind() != GroupKind::CyclicFinite) {
        throw std::logic_error("rewriting oracle needs finite cyclic groups");
      }
      orders_.push_back(graph.group(v).param());
    }
  }

  // Shortlex-least word reachable from w. Words reaching a common state
  // represent the same element, so the value is memoized across the whole
  // closure once computed.
  RawWord canonical(const RawWord& w) {
    if (auto hit = memo_.find(w); hit != memo_.end()) return hit->second;
    std::set<RawWord> visited{w};
    std::deque<RawWord> queue{w};
    std::optional<RawWord> canon;
    while (!queue.empty()) {
      const RawWord cur = queue.front();
      queue.pop_front();
      if (auto hit = memo_.find(cur); hit != memo_.end()) {
        canon = hit->second;
        break;
      }
      for (RawWord& next : moves(cur)) {
        if (visited.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (!canon) {
      canon = *std::min_element(visited.begin(), visited.end(), shortlex_less);
    }
    for (const RawWord& seen : visited) memo_.emplace(seen, *canon);
    return *canon;
  }

  static bool shortlex_less(const RawWord& a, const RawWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

 private:
  std::vector<RawWord> moves(const RawWord& w) const {
    std::vector<RawWord> result;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].second == 0) {  // (b) drop an identity letter
        RawWord next = w;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        result.push_back(std::move(next));
        continue;
      }
      if (i + 1 >= w.size()) continue;
      if (w[i].first == w[i + 1].first) {  // (c) merge neighbors in one G_v
        const std::int64_t order = orders_[static_cast<std::size_t>(w[i].first)];
        RawWord next = w;
        const std::int64_t merged = (w[i].second + w[i + 1].second) % order;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (merged == 0) {
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          next[i].second = merged;
        }
        result.push_back(std::move(next));
      } else if (graph_.adjacent(w[i].first, w[i + 1].first)) {  // (a) shuffle
        RawWord next = w;
        std::swap(next[i], next[i + 1]);
        result.push_back(std::move(next));
      }
    }
    return result;
  }

  const GraphSpec& graph_;
  std::vector<std::int64_t> orders_;
  std::map<RawWord, RawWord> memo_;
};

/// Enumerates every identity-free word of length <= max_len and verifies
/// that normalize() induces exactly the same equality relation as the
/// oracle: equal oracle canonicals <=> byte-identical normal forms.
inline bool oracle_agreement(const GraphSpec& graph, int max_len,
                             std::string* message = nullptr) {
  RewritingOracle oracle(graph);
  std::vector<RawLetter> alphabet;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (std::int64_t r = 1; r < graph.group(v).param(); ++r) {
      alphabet.push_back({v, r});
    }
  }

  std::map<RawWord, NormalForm> canon_to_nf;
  std::map<NormalForm, RawWord> nf_to_canon;

  auto fail = [&](const RawWord& w, const char* why) {
    if (message) {
      *message = why;
      *message += " for word";
      for (auto [v, r] : w) {
        *message += " (" + std::to_string(v) + "," + std::to_string(r) + ")";
      }
    }
    return false;
  };

  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> odometer(static_cast<std::size_t>(len), 0);
    while (true) {
      RawWord word;
      word.reserve(odometer.size());
      for (std::size_t d : odometer) word.push_back(alphabet[d]);

      const RawWord canon = oracle.canonical(word);
      const NormalForm nf = normalize(graph, to_syllables(word));
      if (static_cast<int>(nf.syllables.size()) !=
          static_cast<int>(canon.size())) {
        return fail(word, "reduced length disagrees with oracle");
      }
      if (auto [it, inserted] = canon_to_nf.emplace(canon, nf);
          !inserted && it->second != nf) {
        return fail(word, "equal elements got different normal forms");
      }
      if (auto [it, inserted] = nf_to_canon.emplace(nf, canon);
          !inserted && it->second != canon) {
        return fail(word, "different elements share a normal form");
      }

      std::size_t pos = odometer.size();
      while (pos > 0 && ++odometer[pos - 1] == alphabet.size()) {
        odometer[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    if (len == 0 && alphabet.empty()) break;
  }
  return true;
}

}  // namespace gpcnd::testing
