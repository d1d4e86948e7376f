#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpcnd/graph.hpp"

namespace gpcnd {

/// A letter of a word over the graph product: one nontrivial element of one
/// vertex group. Stored words never contain identity syllables; raw input
/// words may, and normalization drops them.
struct Syllable {
  int vertex = 0;
  VertexElement element;

  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

/// Possibly unreduced input word.
using SyllableWord = std::vector<Syllable>;

/// Canonical reduced word. Two NormalForms compare equal iff they represent
/// the same group element; the syllable count is the reduced length l_r.
/// Construct via normalize/multiply/inverse, never by hand.
struct NormalForm {
  std::vector<Syllable> syllables;

  int length() const { return static_cast<int>(syllables.size()); }
  bool is_identity() const { return syllables.empty(); }

  bool operator==(const NormalForm&) const = default;
  auto operator<=>(const NormalForm&) const = default;
};

/// Transpose positions i, i+1. Requires [vertex(i), vertex(i+1)] in E;
/// same-vertex neighbors are a merge, not a shuffle, and are rejected.
SyllableWord shuffle(const GraphSpec& graph, const SyllableWord& w,
                     std::size_t i);

/// Full rewrite to the canonical reduced form: drops identity syllables,
/// merges same-vertex syllables that can be brought together across
/// commuting letters, and orders the result as the lexicographically least
/// word of its shuffle class (vertex ids break ties). Idempotent; the
/// result length is l_r of the element.
NormalForm normalize(const GraphSpec& graph, const SyllableWord& w);

NormalForm multiply(const GraphSpec& graph, const NormalForm& g,
                    const NormalForm& h);
NormalForm inverse(const GraphSpec& graph, const NormalForm& g);

/// Syllable count of the canonical form (an invariant of the element).
int reduced_length(const NormalForm& g);

/// The separation criterion: every same-vertex pair of syllables has some
/// syllable between them whose vertex lies outside their star, and no
/// identity syllables appear.
bool is_reduced(const GraphSpec& graph, const SyllableWord& w);

/// Canonical minimal representative of the coset g·G(st(v)): repeatedly
/// strip any syllable whose vertex lies in st(v) and which commutes with
/// everything to its right, renormalizing between strips. Depends only on
/// the coset, not on g itself.
NormalForm coset_representative(const GraphSpec& graph, const NormalForm& g,
                                int v);

/// Parse error carrying the byte offset of the offending token.
class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Text form "v0:3; v2:x1 x2^-1": semicolon-separated syllables, each a
/// vertex id and an element in that group's element syntax. The empty
/// string is the identity.
SyllableWord parse_word(const GraphSpec& graph, std::string_view text);
std::string format_word(const GraphSpec& graph,
                        const std::vector<Syllable>& syllables);
std::string format_word(const GraphSpec& graph, const NormalForm& g);

}  // namespace gpcnd
