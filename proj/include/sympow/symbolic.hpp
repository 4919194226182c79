#ifndef SYMPOW_SYMBOLIC_HPP
#define SYMPOW_SYMBOLIC_HPP

#include "sympow/decomposition.hpp"
#include "sympow/ideal.hpp"
#include "sympow/linprog.hpp"
#include "sympow/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sympow {

/// How symbolic powers are formed: the squarefree fast path intersects
/// powers of the minimal primes; the general paths contract the ordinary
/// power at each associated (or minimal) prime; user mode takes the prime
/// list from caller-supplied components.
enum class SymbolicMode { Squarefree, Ass, MinPrimes, Components };

struct SymbolicScheme {
  SymbolicMode mode = SymbolicMode::Squarefree;
  std::vector<PrimeSupport> components; // only read in Components mode
};

/// Squarefree ideals default to the fast path, everything else to the
/// associated-primes definition.
inline SymbolicScheme scheme_for(const MonomialIdeal& I) {
  SymbolicScheme s;
  s.mode = I.is_squarefree() ? SymbolicMode::Squarefree : SymbolicMode::Ass;
  return s;
}

namespace detail {

inline std::vector<PrimeSupport> scheme_primes(const MonomialIdeal& I,
                                               const SymbolicScheme& scheme) {
  switch (scheme.mode) {
    case SymbolicMode::Squarefree:
      if (!I.is_squarefree())
        throw std::invalid_argument("symbolic_power: squarefree mode on non-squarefree input");
      return minimal_primes(I);
    case SymbolicMode::Ass:
      return associated_primes(I);
    case SymbolicMode::MinPrimes:
      return minimal_primes(I);
    case SymbolicMode::Components: {
      std::set<PrimeSupport> have(scheme.components.begin(), scheme.components.end());
      for (const PrimeSupport& p : associated_primes(I))
        if (!have.count(p))
          throw std::invalid_argument(
              "symbolic_power: supplied components do not cover the associated primes");
      return scheme.components;
    }
  }
  throw std::logic_error("symbolic_power: unknown mode");
}

/// First symbolic power from the prime list alone: squarefree generators are
/// the minimal transversals of the primes.
inline MonomialIdeal squarefree_symbolic_base(const std::vector<std::string>& vars,
                                              const std::vector<std::uint64_t>& masks) {
  std::vector<Monomial> gens;
  for (std::uint64_t t : minimal_transversals(masks)) {
    Monomial m(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (t >> v & 1) m.e[v] = 1;
    gens.push_back(std::move(m));
  }
  return normalize(vars, std::move(gens));
}

/// One level up the symbolic filtration. A generator of the previous level
/// misses the next level on exactly the primes whose exponent sum is still
/// short, each by one unit, so its minimal completions add one unit per
/// prime: the minimal transversals of the short primes. Every minimal
/// generator of the next level dominates such a completion, hence the
/// minimalized candidate set is the next generating set.
inline MonomialIdeal squarefree_symbolic_step(const MonomialIdeal& prev,
                                              const std::vector<std::uint64_t>& masks,
                                              long next) {
  std::vector<Monomial> cand;
  std::size_t compact_at = kDefaultGeneratorCap / 4;
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> completions;
  for (const Monomial& g : prev.gens) {
    std::vector<std::uint64_t> shorted;
    for (std::uint64_t p : masks) {
      long long acc = 0;
      for (std::uint64_t rest = p; rest;) {
        std::uint64_t v = rest & (~rest + 1);
        acc += g.e[static_cast<std::size_t>(__builtin_ctzll(v))];
        rest ^= v;
      }
      if (acc < next) shorted.push_back(p);
    }
    if (shorted.empty()) {
      cand.push_back(g);
      continue;
    }
    auto it = completions.find(shorted);
    if (it == completions.end())
      it = completions.emplace(shorted, minimal_transversals(shorted)).first;
    for (std::uint64_t t : it->second) {
      Monomial m = g;
      for (std::size_t v = 0; v < m.size(); ++v)
        if (t >> v & 1) ++m.e[v];
      cand.push_back(std::move(m));
    }
    // Dominated candidates never resurface, so compacting mid-stream is safe
    // and keeps the buffer bounded by the cap.
    if (cand.size() >= compact_at) {
      minimalize(cand);
      check_cap(cand.size(), kDefaultGeneratorCap, "symbolic step");
      compact_at = std::max(cand.size() * 2, kDefaultGeneratorCap / 4);
    }
  }
  return normalize(prev.vars, std::move(cand));
}

inline MonomialIdeal squarefree_symbolic(const MonomialIdeal& I,
                                         const std::vector<PrimeSupport>& primes, long s) {
  std::vector<std::uint64_t> masks;
  masks.reserve(primes.size());
  for (const PrimeSupport& p : primes) masks.push_back(support_mask(p));
  MonomialIdeal S = squarefree_symbolic_base(I.vars, masks);
  for (long t = 2; t <= s; ++t) S = squarefree_symbolic_step(S, masks, t);
  return S;
}

} // namespace detail

/// s-th symbolic power under the given scheme, minimally generated.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, long s,
                                    const SymbolicScheme& scheme) {
  if (s < 0) throw std::invalid_argument("symbolic_power: negative power");
  if (s == 0) return unit_ideal(I.vars);
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("symbolic_power: ideal must be nonzero and proper");
  std::vector<PrimeSupport> primes = detail::scheme_primes(I, scheme);
  if (scheme.mode == SymbolicMode::Squarefree)
    return detail::squarefree_symbolic(I, primes, s);
  MonomialIdeal Is = power(I, s);
  std::vector<MonomialIdeal> parts;
  parts.reserve(primes.size());
  for (const PrimeSupport& p : primes) parts.push_back(localize_contract(Is, p));
  return intersect_many(parts);
}

inline MonomialIdeal symbolic_power(const MonomialIdeal& I, long s) {
  return symbolic_power(I, s, scheme_for(I));
}

/// Squarefree-only membership: the monomial's exponent sum over each minimal
/// prime must reach s. No generators are materialized.
inline bool symbolic_membership(const Monomial& m, const MonomialIdeal& I, long s) {
  if (!I.is_squarefree())
    throw std::invalid_argument("symbolic_membership: requires a squarefree ideal");
  for (const PrimeSupport& p : minimal_primes(I)) {
    long long acc = 0;
    for (int v : p.vars) acc += m.e[static_cast<std::size_t>(v)];
    if (acc < s) return false;
  }
  return true;
}

/// Value of the weight on the ideal: min over generators.
inline Int nu(const MonomialIdeal& I, const Halfspace& w) {
  return weight_order(w.normal, I);
}

namespace detail {

// Minimum of w . a over nonnegative integer vectors with prime-sum
// constraints, by depth-first search pruned against the best cost so far and
// the residual feasibility of each constraint. Coordinates never need to
// exceed s in a minimizer.
class SymbolicWeightSearch {
public:
  SymbolicWeightSearch(const std::vector<PrimeSupport>& primes,
                       const std::vector<Int>& w, long s, std::size_t ell)
      : w_(w), s_(s), ell_(ell) {
    for (const PrimeSupport& p : primes) {
      masks_.push_back(support_mask(p));
      resid_.push_back(s);
    }
  }

  Int run(Int upper_start) {
    best_ = upper_start; // a known-feasible cost, so the search only improves it
    dfs(0, Int(0));
    return best_;
  }

private:
  void dfs(std::size_t var, Int cost) {
    if (cost >= best_) return;
    bool done = true;
    for (std::size_t f = 0; f < resid_.size(); ++f) {
      if (resid_[f] <= 0) continue;
      done = false;
      // Remaining coordinates of this prime can contribute at most s each.
      long long cap = 0;
      Int cheapest(-1);
      for (std::size_t j = var; j < ell_; ++j)
        if (masks_[f] >> j & 1) {
          cap += s_;
          if (cheapest < 0 || w_[j] < cheapest) cheapest = w_[j];
        }
      if (cap < resid_[f]) return;
      // Each missing unit costs at least the cheapest remaining weight.
      Int need = cost + cheapest * resid_[f];
      if (need >= best_) return;
    }
    if (done) {
      best_ = cost;
      return;
    }
    for (long v = static_cast<long>(s_); v >= 0; --v) {
      if (v > 0 && cost + w_[var] * v >= best_) continue;
      for (std::size_t f = 0; f < resid_.size(); ++f)
        if (masks_[f] >> var & 1) resid_[f] -= v;
      dfs(var + 1, cost + w_[var] * v);
      for (std::size_t f = 0; f < resid_.size(); ++f)
        if (masks_[f] >> var & 1) resid_[f] += v;
    }
  }

  std::vector<Int> w_;
  std::vector<std::uint64_t> masks_;
  std::vector<long long> resid_;
  Int best_;
  long s_;
  std::size_t ell_;
};

} // namespace detail

/// Weight value on the s-th symbolic power of a squarefree ideal, computed
/// as an integer program over the prime-sum constraints rather than by
/// materializing generators.
inline Int nu_symbolic(const MonomialIdeal& I, const Halfspace& w, long s) {
  if (s == 0) return 0;
  if (!I.is_squarefree())
    return weight_order(w.normal, symbolic_power(I, s, scheme_for(I)));
  std::vector<PrimeSupport> primes = minimal_primes(I);
  Int trivial = Int(s) * weight_order(w.normal, I); // a = s * exp(g) is feasible
  detail::SymbolicWeightSearch search(primes, w.normal, s, I.ell());
  return search.run(trivial + 1);
}

/// Limit value of the weight on the symbolic filtration. Exact for
/// squarefree input (a linear program) and for a caller-supplied generating
/// degree n of the symbolic filtration; otherwise a flagged upper bound
/// taken along the first sample_cap symbolic powers.
struct NuHatResult {
  Rat value;
  bool exact = true;
};

inline NuHatResult nu_hat(const MonomialIdeal& I, const Halfspace& w,
                          const SymbolicScheme& scheme, long generating_degree = 0,
                          long sample_cap = 8) {
  if (nu(I, w) == 0)
    throw std::invalid_argument("nu_hat: weight vanishes on the ideal");
  if (scheme.mode == SymbolicMode::Squarefree || I.is_squarefree()) {
    std::vector<PrimeSupport> primes = minimal_primes(I);
    LinearProgram lp;
    const std::size_t ell = I.ell();
    lp.objective.resize(ell);
    for (std::size_t j = 0; j < ell; ++j) lp.objective[j] = Rat(w.normal[j]);
    for (std::size_t j = 0; j < ell; ++j) {
      QHalfspace h;
      h.normal.assign(ell, Rat(0));
      h.normal[j] = 1;
      h.offset = 0;
      lp.constraints.push_back(std::move(h));
    }
    for (const PrimeSupport& p : primes) {
      QHalfspace h;
      h.normal.assign(ell, Rat(0));
      for (int v : p.vars) h.normal[static_cast<std::size_t>(v)] = 1;
      h.offset = 1;
      lp.constraints.push_back(std::move(h));
    }
    LpResult res = lp_minimize(lp);
    if (res.status != LpStatus::Optimal)
      throw std::logic_error("nu_hat: bounded program did not solve");
    return {res.value, true};
  }
  if (generating_degree > 0) {
    Rat best(0);
    bool first = true;
    for (long m = 1; m <= generating_degree; ++m) {
      Rat v = Rat(weight_order(w.normal, symbolic_power(I, m, scheme))) / m;
      if (first || v < best) best = v;
      first = false;
    }
    return {best, true};
  }
  Rat best(0);
  bool first = true;
  for (long m = 1; m <= sample_cap; ++m) {
    Rat v = Rat(weight_order(w.normal, symbolic_power(I, m, scheme))) / m;
    if (first || v < best) best = v;
    first = false;
  }
  return {best, false};
}

/// Limit of (least degree in the s-th symbolic power)/s: the all-ones case.
inline NuHatResult waldschmidt(const MonomialIdeal& I, const SymbolicScheme& scheme,
                               long generating_degree = 0, long sample_cap = 8) {
  Halfspace ones;
  ones.normal.assign(I.ell(), Int(1));
  ones.offset = 0;
  return nu_hat(I, ones, scheme, generating_degree, sample_cap);
}

inline NuHatResult waldschmidt(const MonomialIdeal& I) {
  return waldschmidt(I, scheme_for(I));
}

/// If the c-th symbolic power multiplies out to every tested multiple, the
/// limit is pinned at nu(I^(c))/c; otherwise nothing is returned.
inline std::optional<Rat> c_shortcut_nu_hat(const MonomialIdeal& I, const Halfspace& w,
                                            const SymbolicScheme& scheme, long c,
                                            long tests = 3) {
  MonomialIdeal Sc = symbolic_power(I, c, scheme);
  for (long n = 2; n <= tests; ++n)
    if (power(Sc, n) != symbolic_power(I, c * n, scheme)) return std::nullopt;
  return Rat(weight_order(w.normal, Sc)) / c;
}

/// Whether squaring the i-th symbolic power reaches the 2i-th, for
/// i = 1..c_max; a failing index carries a generator witnessing the gap.
struct PowerSquareCheck {
  long i = 0;
  bool equal = true;
  std::optional<Monomial> witness; // generator of I^(2i) missing from (I^(i))^2
};

inline std::vector<PowerSquareCheck> noetherian_power_test(const MonomialIdeal& I,
                                                           const SymbolicScheme& scheme,
                                                           long c_max) {
  if (c_max < 1) throw std::invalid_argument("noetherian_power_test: c_max must be positive");
  std::vector<PowerSquareCheck> out;
  for (long i = 1; i <= c_max; ++i) {
    PowerSquareCheck chk;
    chk.i = i;
    MonomialIdeal sq = power(symbolic_power(I, i, scheme), 2);
    MonomialIdeal s2 = symbolic_power(I, 2 * i, scheme);
    chk.equal = sq == s2;
    if (!chk.equal)
      for (const Monomial& g : s2.gens)
        if (!monomial_in_ideal(g, sq)) {
          chk.witness = g;
          break;
        }
    out.push_back(std::move(chk));
  }
  return out;
}

} // namespace sympow

#endif
