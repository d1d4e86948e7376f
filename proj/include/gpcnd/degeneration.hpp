#pragma once

#include <vector>

#include "gpcnd/word.hpp"

namespace gpcnd {

/// Free-product normal form computed without any reordering: a single
/// left-to-right pass merging adjacent same-vertex syllables and dropping
/// identities. On an edgeless graph this is an independent route to the
/// normal form and the reduced length, used to cross-check the rewriting
/// engine.
std::vector<Syllable> free_product_normal_form(const GraphSpec& graph,
                                               const SyllableWord& w);

/// Per-vertex component tuple of an element of a complete-graph product
/// (the direct product case): entry v is the product of the syllables at
/// vertex v. Rejects forms with a repeated vertex.
std::vector<VertexElement> direct_product_tuple(const GraphSpec& graph,
                                                const NormalForm& g);

}  // namespace gpcnd
