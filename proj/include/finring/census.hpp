#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "finring/structures.hpp"

namespace finring {

namespace detail {

// Breadth-first closure census: start from `bottom`, extend each member by one
// coset representative at a time, deduplicate on the canonical basis.
template <class Extend>
std::vector<AdditiveSubgroup> closure_census(const FiniteRing& r, AdditiveSubgroup bottom, Extend&& extend) {
  const std::vector<Element> all = r.elements();
  std::set<AdditiveSubgroup> seen{bottom};
  std::deque<AdditiveSubgroup> frontier{std::move(bottom)};
  while (!frontier.empty()) {
    AdditiveSubgroup s = std::move(frontier.front());
    frontier.pop_front();
    if (s.order() == r.order()) continue;
    // Extensions by a and by a + s coincide, so one representative per coset.
    for (const Element& a : all) {
      if (s.reduce(a) != a || s.contains(a)) continue;
      AdditiveSubgroup next = extend(s, a);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<AdditiveSubgroup> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.order() < y.order(); });
  return out;
}

}  // namespace detail

/// Every unital subring of r, by breadth-first one-element extension from the
/// prime subring. Complete because each subring is the closure of finitely
/// many elements, reachable through a chain of one-element extensions.
/// Sorted by order, then canonical basis.
inline std::vector<Subring> enumerate_all_subrings(const FiniteRing& r, std::uint64_t bound = kDefaultOracleBound) {
  r.require_scan(bound, "subring census");
  auto groups = detail::closure_census(r, prime_subring(r).group, [&](const AdditiveSubgroup& s, const Element& a) {
    std::vector<Element> gens = s.basis();
    gens.push_back(a);
    return subring_generated_by(r, gens).group;
  });
  std::vector<Subring> out;
  for (auto& g : groups) out.push_back(Subring{std::move(g), true});
  return out;
}

/// Every ideal of r, same scheme starting from the zero ideal.
inline std::vector<Ideal> enumerate_all_ideals(const FiniteRing& r, std::uint64_t bound = kDefaultOracleBound) {
  r.require_scan(bound, "ideal census");
  auto groups = detail::closure_census(r, zero_ideal(r).group, [&](const AdditiveSubgroup& s, const Element& a) {
    std::vector<Element> gens = s.basis();
    gens.push_back(a);
    return ideal_generated(r, gens).group;
  });
  std::vector<Ideal> out;
  for (auto& g : groups) out.push_back(Ideal{std::move(g)});
  return out;
}

/// Indices of the members of `groups` selected by `keep` that are maximal
/// (under inclusion) among the selected members.
template <class T, class Keep>
std::vector<std::size_t> maximal_among(const std::vector<T>& items, Keep&& keep) {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep(items[i])) selected.push_back(i);
  std::vector<std::size_t> out;
  for (std::size_t i : selected) {
    bool maximal = true;
    for (std::size_t j : selected)
      if (j != i && items[j].order() > items[i].order() && items[i].group.is_subgroup_of(items[j].group)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

/// Maximal proper subrings from a census.
inline std::vector<Subring> maximal_subrings_from_census(const FiniteRing& r, const std::vector<Subring>& census) {
  std::vector<Subring> out;
  for (std::size_t i : maximal_among(census, [&](const Subring& s) { return s.order() != r.order(); }))
    out.push_back(census[i]);
  return out;
}

}  // namespace finring
