#include "gpcnd/vertex_group.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gpcnd {

namespace {

// Append one signed generator letter with free cancellation at the seam.
void push_letter(std::vector<std::int32_t>& word, std::int32_t letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

}  // namespace

VertexGroup VertexGroup::cyclic(int order) {
  if (order < 2) throw std::invalid_argument("cyclic group order must be >= 2");
  return VertexGroup(GroupKind::CyclicFinite, order);
}

VertexGroup VertexGroup::integers() {
  return VertexGroup(GroupKind::Integers, 0);
}

VertexGroup VertexGroup::free_group(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  return VertexGroup(GroupKind::FreeGroup, rank);
}

bool VertexGroup::is_identity(const VertexElement& a) const {
  return kind_ == GroupKind::FreeGroup ? a.letters.empty() : a.scalar == 0;
}

bool VertexGroup::contains(const VertexElement& a) const {
  switch (kind_) {
    case GroupKind::CyclicFinite:
      return a.letters.empty() && a.scalar >= 0 && a.scalar < param_;
    case GroupKind::Integers:
      return a.letters.empty();
    case GroupKind::FreeGroup:
      if (a.scalar != 0) return false;
      for (std::size_t i = 0; i < a.letters.size(); ++i) {
        std::int32_t x = a.letters[i];
        if (x == 0 || std::abs(x) > param_) return false;
        if (i > 0 && a.letters[i - 1] == -x) return false;  // not freely reduced
      }
      return true;
  }
  return false;
}

void VertexGroup::require_member(const VertexElement& a) const {
  if (!contains(a)) {
    throw std::invalid_argument("element does not belong to " + describe());
  }
}

VertexElement VertexGroup::multiply(const VertexElement& a,
                                    const VertexElement& b) const {
  require_member(a);
  require_member(b);
  VertexElement r;
  switch (kind_) {
    case GroupKind::CyclicFinite:
      r.scalar = (a.scalar + b.scalar) % param_;
      break;
    case GroupKind::Integers:
      r.scalar = a.scalar + b.scalar;
      break;
    case GroupKind::FreeGroup:
      r.letters = a.letters;
      for (std::int32_t x : b.letters) push_letter(r.letters, x);
      break;
  }
  return r;
}

VertexElement VertexGroup::inverse(const VertexElement& a) const {
  require_member(a);
  VertexElement r;
  switch (kind_) {
    case GroupKind::CyclicFinite:
      r.scalar = a.scalar == 0 ? 0 : param_ - a.scalar;
      break;
    case GroupKind::Integers:
      r.scalar = -a.scalar;
      break;
    case GroupKind::FreeGroup:
      r.letters.reserve(a.letters.size());
      for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
        r.letters.push_back(-*it);
      }
      break;
  }
  return r;
}

double VertexGroup::phi(const VertexElement& a) const {
  require_member(a);
  switch (kind_) {
    case GroupKind::CyclicFinite:
      return a.scalar == 0 ? 0.0 : 1.0;  // discrete metric
    case GroupKind::Integers:
      return static_cast<double>(a.scalar < 0 ? -a.scalar : a.scalar);
    case GroupKind::FreeGroup:
      return static_cast<double>(a.letters.size());
  }
  return 0.0;
}

std::vector<VertexElement> VertexGroup::generators() const {
  std::vector<VertexElement> gens;
  switch (kind_) {
    case GroupKind::CyclicFinite:
      gens.push_back({1, {}});
      if (param_ > 2) gens.push_back({param_ - 1, {}});
      break;
    case GroupKind::Integers:
      gens.push_back({1, {}});
      gens.push_back({-1, {}});
      break;
    case GroupKind::FreeGroup:
      for (std::int32_t i = 1; i <= param_; ++i) {
        gens.push_back({0, {i}});
        gens.push_back({0, {-i}});
      }
      break;
  }
  return gens;
}

double VertexGroup::inner(const VertexElement& a, const VertexElement& b) const {
  // Polarization of ||R(a) - R(b)||^2 = phi(b^-1 a) with R(e) = 0.
  return (phi(a) + phi(b) - phi(multiply(inverse(b), a))) / 2.0;
}

VertexElement VertexGroup::parse_element(std::string_view text) const {
  auto fail = [&](const std::string& why) -> VertexElement {
    throw std::invalid_argument("bad " + describe() + " element '" +
                                std::string(text) + "': " + why);
  };

  if (kind_ == GroupKind::CyclicFinite || kind_ == GroupKind::Integers) {
    std::string s(text);
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      return fail("expected an integer");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) return fail("trailing characters");
    if (kind_ == GroupKind::CyclicFinite && (value < 0 || value >= param_)) {
      return fail("residue out of range [0," + std::to_string(param_) + ")");
    }
    return VertexElement{value, {}};
  }

  // Free group: whitespace-separated letters "x3" / "x3^-1".
  VertexElement r;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inverse_letter = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverse_letter = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 'x') return fail("expected x<k> or x<k>^-1");
    int index = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
        return fail("expected x<k> or x<k>^-1");
      }
      index = index * 10 + (tok[i] - '0');
      if (index > param_) break;
    }
    if (index < 1 || index > param_) {
      return fail("generator index out of range [1," + std::to_string(param_) + "]");
    }
    push_letter(r.letters, inverse_letter ? -index : index);
  }
  return r;
}

std::string VertexGroup::format_element(const VertexElement& a) const {
  require_member(a);
  if (kind_ != GroupKind::FreeGroup) return std::to_string(a.scalar);
  std::string s;
  for (std::int32_t x : a.letters) {
    if (!s.empty()) s += ' ';
    s += 'x';
    s += std::to_string(x < 0 ? -x : x);
    if (x < 0) s += "^-1";
  }
  return s;
}

std::string VertexGroup::describe() const {
  switch (kind_) {
    case GroupKind::CyclicFinite:
      return "cyclic(" + std::to_string(param_) + ")";
    case GroupKind::Integers:
      return "integers";
    case GroupKind::FreeGroup:
      return "free(" + std::to_string(param_) + ")";
  }
  return "?";
}

}  // namespace gpcnd
