#include "gpcnd/word.hpp"

#include <cassert>
#include <cstddef>

namespace gpcnd {

namespace {

// Right-multiply the canonical word `w` by one non-identity syllable,
// keeping it canonical.
//
// Scanning right to left, every syllable whose vertex commutes with
// s.vertex can be crossed. The first same-vertex syllable reached that way
// is the unique merge partner (a reduced word cannot hold two of them in
// one commuting window). If the merge vanishes, the stripped word is
// re-folded from scratch: the deletion may let letters to its right move
// further left, and the refold restores the canonical order. Without a
// merge the syllable goes to the leftmost window position sitting before a
// larger vertex id, which keeps the word the lexicographically least of its
// shuffle class: placing it before any smaller id would raise the sequence
// at that index, placing it later would leave the larger id in front.
void push_syllable(const GraphSpec& graph, std::vector<Syllable>& w,
                   const Syllable& s) {
  const VertexGroup& vg = graph.group(s.vertex);
  if (vg.is_identity(s.element)) return;

  std::ptrdiff_t blocker = static_cast<std::ptrdiff_t>(w.size()) - 1;
  for (; blocker >= 0; --blocker) {
    const Syllable& cur = w[static_cast<std::size_t>(blocker)];
    if (cur.vertex == s.vertex) {
      VertexElement merged = vg.multiply(cur.element, s.element);
      if (vg.is_identity(merged)) {
        w.erase(w.begin() + blocker);
        std::vector<Syllable> rest;
        rest.swap(w);
        for (const Syllable& t : rest) push_syllable(graph, w, t);
      } else {
        w[static_cast<std::size_t>(blocker)].element = std::move(merged);
      }
      return;
    }
    if (!graph.adjacent(cur.vertex, s.vertex)) break;
  }

  std::size_t pos = w.size();
  for (std::size_t p = static_cast<std::size_t>(blocker + 1); p < w.size();
       ++p) {
    if (w[p].vertex > s.vertex) {
      pos = p;
      break;
    }
  }
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), s);
}

void validate_syllable(const GraphSpec& graph, const Syllable& s) {
  if (s.vertex < 0 || s.vertex >= graph.vertex_count()) {
    throw std::invalid_argument("syllable vertex id out of range");
  }
  if (!graph.group(s.vertex).contains(s.element)) {
    throw std::invalid_argument("syllable element not in vertex group " +
                                graph.group(s.vertex).describe());
  }
}

}  // namespace

SyllableWord shuffle(const GraphSpec& graph, const SyllableWord& w,
                     std::size_t i) {
  if (w.size() < 2 || i >= w.size() - 1) {
    throw std::out_of_range("shuffle position out of range");
  }
  const int u = w[i].vertex;
  const int v = w[i + 1].vertex;
  if (u == v) {
    throw std::invalid_argument(
        "not commuting: same-vertex neighbors merge, they do not shuffle");
  }
  if (!graph.adjacent(u, v)) {
    throw std::invalid_argument("not commuting: no edge between vertices " +
                                std::to_string(u) + " and " + std::to_string(v));
  }
  SyllableWord r = w;
  std::swap(r[i], r[i + 1]);
  return r;
}

NormalForm normalize(const GraphSpec& graph, const SyllableWord& w) {
  NormalForm nf;
  for (const Syllable& s : w) {
    validate_syllable(graph, s);
    push_syllable(graph, nf.syllables, s);
  }
  return nf;
}

NormalForm multiply(const GraphSpec& graph, const NormalForm& g,
                    const NormalForm& h) {
  NormalForm r = g;
  for (const Syllable& s : h.syllables) {
    push_syllable(graph, r.syllables, s);
  }
  return r;
}

NormalForm inverse(const GraphSpec& graph, const NormalForm& g) {
  NormalForm r;
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) {
    Syllable s{it->vertex, graph.group(it->vertex).inverse(it->element)};
    push_syllable(graph, r.syllables, s);
  }
  return r;
}

int reduced_length(const NormalForm& g) { return g.length(); }

bool is_reduced(const GraphSpec& graph, const SyllableWord& w) {
  for (const Syllable& s : w) {
    validate_syllable(graph, s);
    if (graph.group(s.vertex).is_identity(s.element)) return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i].vertex != w[j].vertex) continue;
      bool separated = false;
      for (std::size_t q = i + 1; q < j && !separated; ++q) {
        separated = !graph.in_star(w[q].vertex, w[i].vertex);
      }
      if (!separated) return false;
    }
  }
  return true;
}

NormalForm coset_representative(const GraphSpec& graph, const NormalForm& g,
                                int v) {
  if (v < 0 || v >= graph.vertex_count()) {
    throw std::out_of_range("vertex id out of range");
  }
  NormalForm rep = g;
  for (bool stripped = true; stripped;) {
    stripped = false;
    // Rightmost strippable syllable: vertex in st(v), commuting with
    // everything to its right (so it can be shuffled to the end and
    // absorbed into G(st(v))).
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(rep.syllables.size()) - 1;
         i >= 0; --i) {
      const auto idx = static_cast<std::size_t>(i);
      if (!graph.in_star(rep.syllables[idx].vertex, v)) continue;
      bool movable = true;
      for (std::size_t j = idx + 1; j < rep.syllables.size() && movable; ++j) {
        movable = graph.adjacent(rep.syllables[idx].vertex,
                                 rep.syllables[j].vertex);
      }
      if (!movable) continue;
      SyllableWord rest(rep.syllables.begin(), rep.syllables.end());
      rest.erase(rest.begin() + i);
      rep = normalize(graph, rest);
      stripped = true;
      break;
    }
  }
#ifndef NDEBUG
  // Debug verification: g = rep * k with k in G(st(v)).
  NormalForm k = multiply(graph, inverse(graph, rep), g);
  for (const Syllable& s : k.syllables) {
    assert(graph.in_star(s.vertex, v) && "coset remainder left st(v)");
  }
#endif
  return rep;
}

WordParseError::WordParseError(const std::string& msg, std::size_t position)
    : std::invalid_argument(msg + " (at position " + std::to_string(position) +
                            ")"),
      position_(position) {}

SyllableWord parse_word(const GraphSpec& graph, std::string_view text) {
  SyllableWord word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);

    std::size_t lo = 0, hi = piece.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(piece[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(piece[hi - 1]))) --hi;
    std::string_view tok = piece.substr(lo, hi - lo);
    const std::size_t tok_pos = start + lo;

    if (!tok.empty()) {
      if (tok[0] != 'v') {
        throw WordParseError("expected syllable of the form v<id>:<element>",
                             tok_pos);
      }
      std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw WordParseError("missing ':' in syllable", tok_pos);
      }
      int vertex = 0;
      bool have_digit = false;
      for (std::size_t i = 1; i < colon; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
          throw WordParseError("bad vertex id", tok_pos);
        }
        vertex = vertex * 10 + (tok[i] - '0');
        have_digit = true;
      }
      if (!have_digit) throw WordParseError("bad vertex id", tok_pos);
      if (vertex >= graph.vertex_count()) {
        throw WordParseError("vertex id " + std::to_string(vertex) +
                                 " not in graph",
                             tok_pos);
      }
      VertexElement element;
      try {
        element = graph.group(vertex).parse_element(tok.substr(colon + 1));
      } catch (const std::invalid_argument& e) {
        throw WordParseError(e.what(), tok_pos + colon + 1);
      }
      word.push_back(Syllable{vertex, std::move(element)});
    } else if (end < text.size()) {
      // Empty piece before a separator ("a;;b" or leading ';').
      throw WordParseError("empty syllable", tok_pos);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return word;
}

std::string format_word(const GraphSpec& graph,
                        const std::vector<Syllable>& syllables) {
  std::string s;
  for (const Syllable& syl : syllables) {
    if (!s.empty()) s += "; ";
    s += "v" + std::to_string(syl.vertex) + ":" +
         graph.group(syl.vertex).format_element(syl.element);
  }
  return s;
}

std::string format_word(const GraphSpec& graph, const NormalForm& g) {
  return format_word(graph, g.syllables);
}

}  // namespace gpcnd
