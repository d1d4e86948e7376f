#pragma once

#include <compare>
#include <map>

#include "gpcnd/word.hpp"

namespace gpcnd {

/// Index of one orthogonal summand of the glued Hilbert space: the coset
/// g1..g_{i-1}·G(st(v)) is named by its canonical minimal representative.
struct CosetKey {
  NormalForm prefix_rep;
  int vertex = 0;

  bool operator==(const CosetKey&) const = default;
  auto operator<=>(const CosetKey&) const = default;
};

/// Finitely supported coordinate vector of the embedding: at most one entry
/// per coset summand, never holding an identity element. Inner products are
/// evaluated per-summand through the vertex groups' polarization form, so
/// no basis for the summands is ever materialized.
struct AbstractVector {
  std::map<CosetKey, VertexElement> entries;

  bool empty() const { return entries.empty(); }
};

/// The embedding R: syllable i of the canonical form contributes its element
/// at the key (representative of prefix·G(st(v_i)), v_i); the identity maps
/// to the zero vector. Any two reduced forms of the same element give the
/// same vector. A key collision would break the orthogonality bookkeeping
/// and is reported as a consistency failure (std::logic_error).
AbstractVector embed(const GraphSpec& graph, const NormalForm& g);

/// Sum over keys present in both vectors of the per-summand inner product;
/// keys on one side only contribute nothing to the cross term.
double vec_inner(const GraphSpec& graph, const AbstractVector& x,
                 const AbstractVector& y);

/// ||R(g) - R(h)||^2.
double embedding_kernel(const GraphSpec& graph, const NormalForm& g,
                        const NormalForm& h);

/// Sum of the vertex groups' phi over the syllables of the canonical form.
double phi_tilde(const GraphSpec& graph, const NormalForm& g);

/// reduced_length(g) + phi_tilde(g): the glued proper CND candidate.
double phi_gamma(const GraphSpec& graph, const NormalForm& g);

}  // namespace gpcnd
