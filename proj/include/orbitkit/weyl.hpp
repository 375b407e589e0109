#pragma once

#include <cstddef>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/rootsys.hpp"

namespace orbitkit {

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Sequence of generator indices; the first entry is applied first.
using Word = std::vector<std::size_t>;

struct WeylElement {
  RationalMatrix matrix;
  Word word;  // a shortest word in the simple reflections of the standard order
};

/// Weyl group realized as the reflection group of the root system, acting on
/// ambient coordinates. Non-owning reference to the RootSystem.
struct WeylGroup {
  const RootSystem* rs = nullptr;
  RootOrder order;                        // supplies the simple roots
  std::vector<RationalMatrix> generators;  // s_alpha for alpha in order.simple
  std::vector<WeylElement> elements;       // sorted lexicographically by matrix entries

  std::size_t size() const noexcept { return elements.size(); }
};

struct WeylOrbit {
  Vec base;
  std::vector<Vec> points;  // sorted lexicographically
  std::size_t stabilizer_order = 0;
};

/// s_alpha(v) = v - 2 (v, alpha)/(alpha, alpha) alpha as an exact matrix.
RationalMatrix reflection(const Vec& alpha, const RootSystem& rs);

/// Applies s_alpha to v without building the matrix.
Vec reflect(const Vec& v, std::size_t root, const RootSystem& rs);

/// Breadth-first closure of the simple reflections. Throws CapExceeded once
/// more than `cap` distinct elements have been found.
WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

WeylOrbit weyl_orbit(const Vec& lambda, const WeylGroup& w);

struct DominantResult {
  Vec weight;
  Word word;  // indices into order.simple
};

/// The unique dominant point of the orbit of lambda, reached by repeatedly
/// reflecting in a simple root that pairs negatively.
DominantResult dominant_representative(const Vec& lambda, const RootOrder& order, const WeylGroup& w);

/// Applies a word of simple reflections of `order` to v.
Vec apply_word(const Vec& v, const Word& word, const RootOrder& order);

}  // namespace orbitkit
