#ifndef SYMPOW_DECOMPOSITION_HPP
#define SYMPOW_DECOMPOSITION_HPP

#include "sympow/ideal.hpp"
#include "sympow/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace sympow {

struct DecompositionReport {
  std::vector<PrimeSupport> minimal_primes;
  std::vector<PrimeSupport> associated_primes;
  std::vector<MonomialIdeal> irreducible_components;
  int big_height = 0;
};

namespace detail {

// All minimal transversals of a hypergraph given as support masks. Branching
// on the first uncovered edge reaches every minimal transversal; non-minimal
// leaves are filtered afterwards.
inline void transversal_dfs(const std::vector<std::uint64_t>& edges, std::uint64_t partial,
                            std::set<std::uint64_t>& found) {
  const std::uint64_t* uncovered = nullptr;
  for (const std::uint64_t& e : edges)
    if ((e & partial) == 0) {
      uncovered = &e;
      break;
    }
  if (!uncovered) {
    found.insert(partial);
    return;
  }
  std::uint64_t e = *uncovered;
  while (e) {
    std::uint64_t v = e & (~e + 1);
    transversal_dfs(edges, partial | v, found);
    e &= e - 1;
  }
}

inline std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges) {
  std::set<std::uint64_t> found;
  transversal_dfs(edges, 0, found);
  std::vector<std::uint64_t> masks(found.begin(), found.end());
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t m : masks) {
    bool dominated = false;
    for (std::uint64_t k : minimal)
      if ((k & ~m) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

inline bool is_irreducible(const MonomialIdeal& I) {
  return std::all_of(I.gens.begin(), I.gens.end(), [](const Monomial& g) {
    return __builtin_popcountll(support_mask(g)) <= 1;
  });
}

inline void split_components(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
  for (const Monomial& g : I.gens) {
    std::uint64_t supp = support_mask(g);
    if (__builtin_popcountll(supp) < 2) continue;
    // g = u * v with coprime u, v splits I = (I + <u>) cap (I + <v>).
    int j = __builtin_ctzll(supp);
    Monomial u(g.size()), v = g;
    u.e[j] = g.e[j];
    v.e[j] = 0;
    for (const Monomial& piece : {u, v}) {
      std::vector<Monomial> gens = I.gens;
      gens.push_back(piece);
      split_components(normalize(I.vars, std::move(gens)), out);
    }
    return;
  }
  out.push_back(I);
}

} // namespace detail

/// Irredundant irreducible decomposition by recursive coprime-generator
/// splitting. The intersection of the returned components equals I.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("irreducible_decomposition: ideal must be proper and nonzero");
  std::vector<MonomialIdeal> components;
  detail::split_components(I, components);
  std::sort(components.begin(), components.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });
  components.erase(std::unique(components.begin(), components.end()), components.end());

  // Greedy irredundancy: drop any component containing the intersection of the
  // rest. Order-dependent in general, deterministic here by canonical order.
  std::vector<bool> removed(components.size(), false);
  for (std::size_t i = 0; i < components.size(); ++i) {
    MonomialIdeal rest = unit_ideal(I.vars);
    bool first = true;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j == i || removed[j]) continue;
      rest = first ? components[j] : intersect(rest, components[j]);
      first = false;
    }
    if (first) continue; // last remaining component
    bool contains_rest = std::all_of(rest.gens.begin(), rest.gens.end(), [&](const Monomial& g) {
      return monomial_in_ideal(g, components[i]);
    });
    if (contains_rest) removed[i] = true;
  }
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!removed[i]) kept.push_back(components[i]);
  return kept;
}

/// Associated primes: radical supports of the irredundant irreducible
/// components. Components sharing a radical collapse to one prime.
inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
  std::set<std::uint64_t> masks;
  for (const MonomialIdeal& C : irreducible_decomposition(I))
    masks.insert(support_mask(pi(C)));
  std::vector<PrimeSupport> primes;
  for (std::uint64_t m : masks) primes.push_back(support_from_mask(m));
  std::sort(primes.begin(), primes.end());
  return primes;
}

/// Minimal primes. Squarefree fast path: minimal vertex covers of the
/// generator supports. Non-squarefree input is routed through the associated
/// primes and filtered to inclusion-minimal elements.
inline std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("minimal_primes: ideal must be proper and nonzero");
  std::vector<std::uint64_t> masks;
  if (I.is_squarefree()) {
    std::vector<std::uint64_t> edges;
    edges.reserve(I.gens.size());
    for (const Monomial& g : I.gens) edges.push_back(support_mask(g));
    masks = detail::minimal_transversals(edges);
  } else {
    std::vector<std::uint64_t> all;
    for (const PrimeSupport& p : associated_primes(I)) all.push_back(support_mask(p));
    for (std::uint64_t m : all) {
      bool minimal = true;
      for (std::uint64_t k : all)
        if (k != m && (k & ~m) == 0) {
          minimal = false;
          break;
        }
      if (minimal) masks.push_back(m);
    }
  }
  std::vector<PrimeSupport> primes;
  primes.reserve(masks.size());
  for (std::uint64_t m : masks) primes.push_back(support_from_mask(m));
  std::sort(primes.begin(), primes.end());
  return primes;
}

/// Big height: maximum height of an associated prime. For squarefree ideals
/// this equals the maximum minimal-prime height.
inline int big_height(const MonomialIdeal& I) {
  int h = 0;
  if (I.is_squarefree()) {
    for (const PrimeSupport& p : minimal_primes(I)) h = std::max<int>(h, (int)p.height());
  } else {
    for (const PrimeSupport& p : associated_primes(I)) h = std::max<int>(h, (int)p.height());
  }
  return h;
}

inline DecompositionReport decompose(const MonomialIdeal& I) {
  DecompositionReport rep;
  rep.irreducible_components = irreducible_decomposition(I);
  std::set<std::uint64_t> ass_masks;
  for (const MonomialIdeal& C : rep.irreducible_components)
    ass_masks.insert(support_mask(pi(C)));
  for (std::uint64_t m : ass_masks) rep.associated_primes.push_back(support_from_mask(m));
  std::sort(rep.associated_primes.begin(), rep.associated_primes.end());
  for (const PrimeSupport& p : rep.associated_primes) {
    bool minimal = true;
    for (const PrimeSupport& q : rep.associated_primes)
      if (!(q == p) && (support_mask(q) & ~support_mask(p)) == 0) {
        minimal = false;
        break;
      }
    if (minimal) rep.minimal_primes.push_back(p);
    rep.big_height = std::max<int>(rep.big_height, (int)p.height());
  }
  return rep;
}

} // namespace sympow

#endif
