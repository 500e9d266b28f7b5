#pragma once

// Naive reference implementations used to cross-check the library.

#include <algorithm>
#include <set>
#include <vector>

#include "tomseq/perm.hpp"

namespace oracle {

using tomseq::Group;
using tomseq::Permutation;

/// Every subgroup of g: grow a set of subgroups by adjoining single elements
/// until nothing new appears. Uses only closure().
inline std::set<Group> subgroups_by_growth(const Group& g) {
  std::set<Group> found{Group(g.degree())};
  std::vector<Group> frontier{Group(g.degree())};
  while (!frontier.empty()) {
    std::vector<Group> next;
    for (const auto& h : frontier)
      for (const auto& x : g.elements()) {
        if (h.contains(x)) continue;
        std::vector<Permutation> gens = h.generators();
        gens.push_back(x);
        Group k = tomseq::closure(gens, g.degree());
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return found;
}

inline bool is_normal(const Group& n, const Group& g) {
  for (const auto& x : g.elements())
    for (const auto& s : n.generators())
      if (!n.contains(tomseq::conjugate(s, x))) return false;
  return true;
}

/// Maximal proper subgroups among `subs` (all subgroups of g).
inline std::vector<Group> maximal_among(const std::set<Group>& subs, const Group& g) {
  std::vector<Group> out;
  for (const auto& h : subs) {
    if (h.order() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.order() > h.order() && k.order() < g.order() && tomseq::is_subgroup(h, k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Supersolvable iff every maximal subgroup has prime index.
inline bool supersolvable_by_maximal_indices(const Group& g) {
  const auto subs = subgroups_by_growth(g);
  for (const auto& m : maximal_among(subs, g))
    if (!is_prime(g.order() / m.order())) return false;
  return true;
}

/// Solvable iff trivial, or some normal subgroup of prime index is solvable.
inline bool solvable_by_prime_index_chain(const Group& g) {
  if (g.order() == 1) return true;
  for (const auto& n : subgroups_by_growth(g))
    if (n.order() < g.order() && is_prime(g.order() / n.order()) && is_normal(n, g))
      return solvable_by_prime_index_chain(n);
  return false;
}

}  // namespace oracle
