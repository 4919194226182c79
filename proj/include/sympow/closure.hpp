#ifndef SYMPOW_CLOSURE_HPP
#define SYMPOW_CLOSURE_HPP

#include "sympow/ideal.hpp"
#include "sympow/polyhedron.hpp"
#include "sympow/staircase.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace sympow {

/// Generation degree of the closure filtration together with how it was
/// established: verified means the regeneration window closed, otherwise the
/// value is the search cap and later powers are assumed, not checked.
struct ReesDegree {
  long degree = 1;
  bool verified = true;
};

struct ClosureProfile {
  MonomialIdeal source;
  ReesDegree rees_degree;
  long b_value = 0;          // least k with closure(I^{r+k}) inside I^r for all r
  long briancon_skoda_cap = 0; // ell - 1, unconditional upper bound for b
};

struct KStatistics {
  std::vector<std::pair<long, long>> values; // (r, K_r)
  Rat k_estimate;                            // max K_r / r over the window
  Rat k_bound;                               // 1 + b/2
};

namespace detail {

inline long long to_ll(const Int& v) {
  if (v > Int(1) << 60 || v < -(Int(1) << 60))
    throw resource_error("closure: coefficient overflow");
  return static_cast<long long>(v);
}

} // namespace detail

/// One level up the closure filtration. A generator of the previous level
/// falls short of the next level by at most one offset on each facet, so its
/// minimal completions solve a residual system whose right-hand sides stay
/// small. Every minimal generator of the next level dominates such a
/// completion, hence the minimalized candidate set is the next generating
/// set.
inline MonomialIdeal closure_step(const MonomialIdeal& prev, const NewtonPolyhedron& np,
                                  long next) {
  std::vector<std::vector<long long>> rows;
  std::vector<long long> targets;
  rows.reserve(np.facets.size());
  targets.reserve(np.facets.size());
  for (const Halfspace& h : np.facets) {
    std::vector<long long> row(prev.ell());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = detail::to_ll(h.normal[j]);
    rows.push_back(std::move(row));
    targets.push_back(detail::to_ll(Int(next) * h.offset));
  }
  std::vector<Monomial> cand;
  std::size_t compact_at = kDefaultGeneratorCap / 4;
  std::map<std::vector<long long>, std::vector<std::vector<int>>> completions;
  for (const Monomial& g : prev.gens) {
    std::vector<long long> need(rows.size());
    bool short_somewhere = false;
    for (std::size_t f = 0; f < rows.size(); ++f) {
      long long have = 0;
      for (std::size_t j = 0; j < rows[f].size(); ++j) have += rows[f][j] * g.e[j];
      need[f] = std::max(targets[f] - have, 0LL);
      short_somewhere = short_somewhere || need[f] > 0;
    }
    if (!short_somewhere) {
      cand.push_back(g);
      continue;
    }
    auto it = completions.find(need);
    if (it == completions.end()) {
      StaircaseSystem sys;
      sys.nvars = prev.ell();
      sys.rows = rows;
      sys.rhs = need;
      it = completions.emplace(std::move(need), minimal_solutions(sys)).first;
    }
    for (const std::vector<int>& t : it->second) {
      Monomial m = g;
      for (std::size_t j = 0; j < m.size(); ++j) m.e[j] += t[j];
      cand.push_back(std::move(m));
    }
    // Dominated candidates never resurface, so compacting mid-stream is safe
    // and keeps the buffer bounded by the cap.
    if (cand.size() >= compact_at) {
      detail::minimalize(cand);
      detail::check_cap(cand.size(), kDefaultGeneratorCap, "closure step");
      compact_at = std::max(cand.size() * 2, kDefaultGeneratorCap / 4);
    }
  }
  return normalize(prev.vars, std::move(cand));
}

/// Minimal monomial generators of the closure of I^r: the minimal lattice
/// points of the r-scaled Newton polyhedron, built level by level.
inline MonomialIdeal closure_power(const MonomialIdeal& I, const NewtonPolyhedron& np,
                                   long r) {
  if (r < 0) throw std::invalid_argument("closure_power: negative power");
  if (r == 0) return unit_ideal(I.vars);
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("closure_power: ideal must be nonzero and proper");
  StaircaseSystem sys;
  sys.nvars = I.ell();
  for (const Halfspace& h : np.facets) {
    std::vector<long long> row(sys.nvars);
    for (std::size_t j = 0; j < sys.nvars; ++j) row[j] = detail::to_ll(h.normal[j]);
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(detail::to_ll(h.offset));
  }
  std::vector<Monomial> gens;
  for (const std::vector<int>& a : minimal_solutions(sys)) gens.push_back(Monomial{a});
  MonomialIdeal cur = normalize(I.vars, std::move(gens));
  for (long m = 2; m <= r; ++m) cur = closure_step(cur, np, m);
  return cur;
}

inline MonomialIdeal closure_power(const MonomialIdeal& I, long r) {
  if (r == 0) return unit_ideal(I.vars);
  return closure_power(I, newton_polyhedron(I), r);
}

/// Facet-only membership test for the closure of I^r.
inline bool in_closure(const Monomial& m, const NewtonPolyhedron& np, long r) {
  return in_closure_power(m, np, r);
}

inline bool in_closure(const Monomial& m, const MonomialIdeal& I, long r) {
  return in_closure_power(m, newton_polyhedron(I), r);
}

/// Smallest d <= cap such that every closure power in the window
/// (d, cap + d] is regenerated by products of lower closure powers. When no
/// d passes, the cap itself is returned flagged unverified. closure_at(m)
/// must yield the closure of I^m; callers with a cache pass it here so the
/// cascade is computed once.
template <class ClosureFn>
inline ReesDegree rees_generation_degree_with(const MonomialIdeal& I, long cap,
                                              ClosureFn closure_at) {
  if (cap < 1) throw std::invalid_argument("rees_generation_degree: cap must be positive");
  for (long d = 1; d <= cap; ++d) {
    bool ok = true;
    for (long m = d + 1; m <= cap + d && ok; ++m) {
      MonomialIdeal regen = zero_ideal(I.vars);
      for (long i = 1; i <= m / 2; ++i)
        regen = sum(regen, multiply(closure_at(i), closure_at(m - i)));
      ok = regen == closure_at(m);
    }
    if (ok) return ReesDegree{d, true};
  }
  return ReesDegree{cap, false};
}

namespace detail {

/// Lazily materialized cascade of closure powers of one ideal.
class ClosureLadder {
public:
  explicit ClosureLadder(const MonomialIdeal& I)
      : I_(I), np_(newton_polyhedron(I)), cl_(1, unit_ideal(I.vars)) {}

  const MonomialIdeal& operator()(long m) {
    while (static_cast<long>(cl_.size()) <= m) {
      long next = static_cast<long>(cl_.size());
      cl_.push_back(next == 1 ? closure_power(I_, np_, 1)
                              : closure_step(cl_.back(), np_, next));
    }
    return cl_[static_cast<std::size_t>(m)];
  }

private:
  const MonomialIdeal& I_;
  NewtonPolyhedron np_;
  std::vector<MonomialIdeal> cl_;
};

} // namespace detail

inline ReesDegree rees_generation_degree(const MonomialIdeal& I, long cap) {
  detail::ClosureLadder ladder(I);
  return rees_generation_degree_with(I, cap, [&](long m) -> const MonomialIdeal& {
    return ladder(m);
  });
}

inline long default_rees_cap(const MonomialIdeal& I) {
  return std::max<long>(1, static_cast<long>(I.ell()) - 1);
}

/// Least k with closure(I^j) inside I^{j-k} across the verification window
/// [k+1, k+d]; the generation degree d lets the finite window stand in for
/// all powers. Falls back to the Briancon-Skoda cap when nothing smaller
/// closes the window.
template <class ClosureFn>
inline ClosureProfile b_of_with(const MonomialIdeal& I, long rees_cap, ClosureFn closure_at) {
  ClosureProfile p;
  p.source = I;
  p.briancon_skoda_cap = std::max<long>(0, static_cast<long>(I.ell()) - 1);
  p.rees_degree = rees_generation_degree_with(I, rees_cap, closure_at);
  const long d = p.rees_degree.degree;
  for (long k = 0; k < p.briancon_skoda_cap; ++k) {
    bool ok = true;
    for (long j = k + 1; j <= k + d && ok; ++j)
      ok = ideal_containment(closure_at(j), I, j - k).contained;
    if (ok) {
      p.b_value = k;
      return p;
    }
  }
  p.b_value = p.briancon_skoda_cap;
  return p;
}

inline ClosureProfile b_of(const MonomialIdeal& I, long rees_cap) {
  detail::ClosureLadder ladder(I);
  return b_of_with(I, rees_cap, [&](long m) -> const MonomialIdeal& { return ladder(m); });
}

inline ClosureProfile b_of(const MonomialIdeal& I) {
  return b_of(I, default_rees_cap(I));
}

/// K_r = least s with closure(I^s) inside I^r, swept for r = 1..r_max.
template <class ClosureFn>
inline KStatistics K_statistics_with(const MonomialIdeal& I, long r_max,
                                     const ClosureProfile& profile, ClosureFn closure_at) {
  if (r_max < 1) throw std::invalid_argument("K_statistics: r_max must be positive");
  KStatistics ks;
  ks.k_estimate = Rat(0);
  for (long r = 1; r <= r_max; ++r) {
    long K = -1;
    for (long s = r; s <= r + static_cast<long>(I.ell()) + 1; ++s) {
      if (ideal_containment(closure_at(s), I, r).contained) {
        K = s;
        break;
      }
    }
    if (K < 0) throw resource_error("K_statistics: search exceeded the Briancon-Skoda cap");
    ks.values.emplace_back(r, K);
    Rat ratio = make_rat(K, r);
    if (ratio > ks.k_estimate) ks.k_estimate = ratio;
  }
  ks.k_bound = Rat(1) + Rat(profile.b_value) / 2;
  return ks;
}

inline KStatistics K_statistics(const MonomialIdeal& I, long r_max,
                                const ClosureProfile& profile) {
  detail::ClosureLadder ladder(I);
  return K_statistics_with(I, r_max, profile,
                           [&](long m) -> const MonomialIdeal& { return ladder(m); });
}

inline KStatistics K_statistics(const MonomialIdeal& I, long r_max) {
  return K_statistics(I, r_max, b_of(I));
}

} // namespace sympow

#endif
