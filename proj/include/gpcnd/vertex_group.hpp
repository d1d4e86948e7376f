#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gpcnd {

enum class GroupKind { CyclicFinite, Integers, FreeGroup };

/// Element payload. Cyclic and integer groups use `scalar` (a residue in
/// [0,n) or a signed integer); free groups use `letters`, a freely reduced
/// sequence of signed 1-based generator indices (+k = x_k, -k = x_k^-1).
/// The unused field stays at its default so comparison is structural.
struct VertexElement {
  std::int64_t scalar = 0;
  std::vector<std::int32_t> letters;

  bool operator==(const VertexElement&) const = default;
  auto operator<=>(const VertexElement&) const = default;
};

/// One vertex group together with its length-like function phi.
///
/// Three families are supported: Z/n with the discrete metric (phi = 1 off
/// the identity), Z with phi(n) = |n|, and the free group F_k with phi =
/// freely reduced word length. All three phi are symmetric, vanish exactly
/// at the identity, and take integer values, so downstream comparisons can
/// be exact.
class VertexGroup {
 public:
  static VertexGroup cyclic(int order);
  static VertexGroup integers();
  static VertexGroup free_group(int rank);

  GroupKind kind() const { return kind_; }
  /// Order n for cyclic groups, rank k for free groups, 0 for Z.
  int param() const { return param_; }

  VertexElement identity() const { return {}; }
  bool is_identity(const VertexElement& a) const;

  /// True iff `a` satisfies this group's encoding invariant.
  bool contains(const VertexElement& a) const;

  VertexElement multiply(const VertexElement& a, const VertexElement& b) const;
  VertexElement inverse(const VertexElement& a) const;

  /// The conditionally negative definite function carried by the group.
  /// Integer-valued; phi(e) = 0 and phi(a) = phi(a^-1).
  double phi(const VertexElement& a) const;

  /// Symmetric finite generating set: {1, n-1} / {+1, -1} / {x_i^{±1}}.
  std::vector<VertexElement> generators() const;

  /// <R(a), R(b)> recovered from phi by polarization,
  /// (phi(a) + phi(b) - phi(b^-1 a)) / 2, with R(e) = 0.
  double inner(const VertexElement& a, const VertexElement& b) const;

  /// Inverse of format_element. Throws std::invalid_argument on bad syntax
  /// or an element outside the group.
  VertexElement parse_element(std::string_view text) const;
  std::string format_element(const VertexElement& a) const;

  /// "cyclic(3)", "integers", "free(2)" -- also the config-file spelling.
  std::string describe() const;

  bool operator==(const VertexGroup&) const = default;

 private:
  VertexGroup(GroupKind kind, int param) : kind_(kind), param_(param) {}
  void require_member(const VertexElement& a) const;

  GroupKind kind_;
  int param_;
};

}  // namespace gpcnd
