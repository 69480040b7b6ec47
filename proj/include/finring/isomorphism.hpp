#pragma once

#include <optional>
#include <vector>

#include "finring/ring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

namespace detail {

inline Element apply_map(const FiniteRing& b, const std::vector<Element>& images, const Element& x,
                         std::size_t upto) {
  Element acc = b.zero();
  for (std::size_t i = 0; i < upto; ++i)
    if (x[i] != 0) acc = b.add(acc, b.int_mul(x[i], images[i]));
  return acc;
}

}  // namespace detail

/// Ring isomorphism a -> b by backtracking over generator images with matching
/// additive orders. Returns the images of a's generators. Intended for small rings.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t k = a.rank();
  std::vector<std::vector<Element>> candidates(k);
  const std::vector<Element> belems = b.elements();
  for (std::size_t i = 0; i < k; ++i) {
    const Coord want = a.additive_order(a.generator(i));
    for (const Element& y : belems)
      if (b.additive_order(y) == want) candidates[i].push_back(y);
    if (candidates[i].empty()) return std::nullopt;
  }
  // Product g_i g_j can be checked once every generator in its support is assigned.
  auto support_end = [&](std::size_t i, std::size_t j) {
    std::size_t last = 0;
    for (std::size_t l = 0; l < k; ++l)
      if (a.product(i, j)[l] != 0) last = l + 1;
    return last;
  };
  std::vector<Element> images(k);
  std::optional<std::vector<Element>> found;
  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i <= depth; ++i)
      for (std::size_t j = i; j <= depth; ++j) {
        if (i != depth && j != depth && support_end(i, j) <= depth) continue;
        if (support_end(i, j) > depth + 1) continue;
        if (detail::apply_map(b, images, a.product(i, j), depth + 1) != b.mul(images[i], images[j])) return false;
      }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == k) {
      if (detail::apply_map(b, images, a.one(), k) != b.one()) return;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
          if (detail::apply_map(b, images, a.product(i, j), k) != b.mul(images[i], images[j])) return;
      if (subgroup_generated(b, images).order() != b.order()) return;
      found = images;
      return;
    }
    for (const Element& y : candidates[depth]) {
      images[depth] = y;
      if (consistent(depth)) self(self, depth + 1);
      if (found) return;
    }
  };
  recurse(recurse, 0);
  return found;
}

inline bool isomorphic(const FiniteRing& a, const FiniteRing& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace finring
