#ifndef SYMPOW_RESURGENCE_HPP
#define SYMPOW_RESURGENCE_HPP

#include "sympow/closure.hpp"
#include "sympow/decomposition.hpp"
#include "sympow/parallel.hpp"
#include "sympow/polyhedron.hpp"
#include "sympow/symbolic.hpp"
#include "sympow/workspace.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sympow {

/// One Rees valuation with its value on the ideal, its limit value on the
/// symbolic filtration, and their ratio.
struct ValuationProfile {
  Halfspace weight;
  Int nu_value;
  Rat nu_hat_value;
  Rat ratio;
  bool nu_hat_exact = true;
  bool center_minimal = false;
};

/// max ratio over the Rees valuations; exact when every limit value is,
/// otherwise a certified enclosure (ratios computed from upper bounds on
/// the limit give a lower bound; the big height caps the top).
struct AsymptoticResult {
  Rat lower;
  Rat upper;
  bool exact = true;
  std::vector<ValuationProfile> profiles;
};

struct ResurgenceOptions {
  long search_cap = 20;       // largest r probed for a witness
  long rees_cap = 0;          // generation-degree search cap; 0 means ell-1
  long generating_degree = 0; // user-supplied symbolic generating degree
  int threads = 1;
};

enum class ResurgenceStatus { Exact, Interval, Capped };

struct ResurgenceResult {
  Rat rho_hat;
  Rat lower;
  Rat upper;
  ResurgenceStatus status = ResurgenceStatus::Exact;
  std::optional<std::pair<long, long>> witness; // (s0, r0) with s0/r0 > rho_hat
  Rat N;                                        // search radius derived from the witness
  long b = 0;
  long h = 0;
  ReesDegree rees_degree;
  std::vector<std::pair<long, long>> noncontainments; // all (s, r) found noncontained
  std::vector<std::pair<long, long>> candidates;      // box pairs that could beat the witness
  std::vector<std::pair<long, long>> maximizers;      // pairs attaining the reported lower end
  std::string cap_note;                               // set when status is Capped
};

namespace detail {

inline long strict_floor_long(const Rat& q) {
  Int f = floor_rat(q);
  if (is_integer(q)) f -= 1;
  return f.convert_to<long>();
}

inline long effective_rees_cap(const MonomialIdeal& I, long requested) {
  return requested > 0 ? requested : default_rees_cap(I);
}

} // namespace detail

/// Does the s-th symbolic power sit inside the r-th ordinary power?
inline ContainmentCheck symbolic_in_power(Workspace& ws, const MonomialIdeal& I,
                                          const SymbolicScheme& scheme, long s, long r) {
  return ideal_containment(ws.symbolic_of(I, s, scheme), I, r);
}

inline AsymptoticResult asymptotic_resurgence(Workspace& ws, const MonomialIdeal& I,
                                              const SymbolicScheme& scheme,
                                              long generating_degree = 0) {
  NewtonPolyhedron np = ws.polyhedron_of(I);
  std::set<PrimeSupport> minimal(([&] {
    std::vector<PrimeSupport> mp = minimal_primes(I);
    return std::set<PrimeSupport>(mp.begin(), mp.end());
  })());
  AsymptoticResult out;
  out.lower = Rat(1);
  for (const Halfspace& w : np.facets) {
    ValuationProfile vp;
    vp.weight = w;
    vp.nu_value = w.offset;
    NuHatResult nh = nu_hat(I, w, scheme, generating_degree);
    vp.nu_hat_value = nh.value;
    vp.nu_hat_exact = nh.exact;
    vp.ratio = Rat(vp.nu_value) / vp.nu_hat_value;
    vp.center_minimal = minimal.count(weight_center(w)) > 0;
    out.exact = out.exact && vp.nu_hat_exact;
    if (vp.ratio > out.lower) out.lower = vp.ratio;
    out.profiles.push_back(std::move(vp));
  }
  out.upper = out.exact ? out.lower : Rat(big_height(I));
  return out;
}

/// Largest s with the s-th symbolic power not inside the r-th ordinary
/// power; finite because the big-height multiple always lands inside.
inline long lambda_value(Workspace& ws, const MonomialIdeal& I, const SymbolicScheme& scheme,
                         long r, long h) {
  long lo = r - 1, hi = h * r - 1;
  if (hi < lo) return lo;
  // Noncontainment is downward closed in s, so binary search applies.
  while (lo < hi) {
    long mid = lo + (hi - lo + 1) / 2;
    if (!symbolic_in_power(ws, I, scheme, mid, r).contained)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

inline ResurgenceResult resurgence(Workspace& ws, const MonomialIdeal& I,
                                   const SymbolicScheme& scheme,
                                   const ResurgenceOptions& opt = {}) {
  ResurgenceResult res;
  ClosureProfile profile = ws.profile_of(I, detail::effective_rees_cap(I, opt.rees_cap));
  res.b = profile.b_value;
  res.h = big_height(I);
  res.rees_degree = profile.rees_degree;
  AsymptoticResult asym = asymptotic_resurgence(ws, I, scheme, opt.generating_degree);
  if (!asym.exact)
    throw std::invalid_argument(
        "resurgence: needs an exact asymptotic value; use a squarefree ideal or supply a "
        "generating degree");
  res.rho_hat = asym.lower;
  res.N = Rat(0);

  if (res.b == 0) {
    // Every closure power of I already sits in the matching ordinary power,
    // so no witness pair can exist and the two invariants coincide.
    res.lower = res.upper = res.rho_hat;
    res.status = ResurgenceStatus::Exact;
    return res;
  }

  const Rat& rh = res.rho_hat;
  auto band_top = [&](long r) { return detail::strict_floor_long(Rat(r + res.b) * rh); };
  auto proof_bound_ok = [&](long s, long r) { return Rat(s) < Rat(r + res.b) * rh; };

  std::optional<std::pair<long, long>> witness;
  std::vector<std::pair<long, long>> found;
  try {
    for (long r = 2; r <= opt.search_cap && !witness; ++r) {
      long s_lo = floor_rat(rh * r).convert_to<long>() + 1; // first integer above rho_hat * r
      for (long s = band_top(r); s >= s_lo; --s) {
        if (!symbolic_in_power(ws, I, scheme, s, r).contained) {
          witness = std::make_pair(s, r);
          found.emplace_back(s, r);
          break;
        }
      }
    }
  } catch (const resource_error& e) {
    res.status = ResurgenceStatus::Capped;
    res.cap_note = std::string("witness search hit a resource cap: ") + e.what();
    res.lower = res.rho_hat;
    res.upper = Rat(res.h);
    return res;
  }

  if (witness) {
    res.witness = witness;
    Rat sigma = make_rat(witness->first, witness->second);
    if (!(sigma > rh))
      throw std::logic_error("resurgence: witness ratio does not exceed the asymptotic value");
    res.N = Rat(res.b) * rh / (sigma - rh);
    // Box pairs at or below the witness ratio cannot raise the maximum, so
    // only the candidates above it are ever tested.
    for (long r = 2; Rat(r) < res.N; ++r)
      for (long s = r + 1; s <= band_top(r); ++s)
        if (!(witness->first == s && witness->second == r) && make_rat(s, r) > sigma)
          res.candidates.emplace_back(s, r);
    std::vector<char> contained(res.candidates.size(), 1);
    try {
      parallel_for_index(res.candidates.size(), opt.threads, [&](std::size_t i) {
        contained[i] = symbolic_in_power(ws, I, scheme, res.candidates[i].first,
                                         res.candidates[i].second)
                           .contained
                           ? 1
                           : 0;
      });
    } catch (const resource_error& e) {
      res.status = ResurgenceStatus::Capped;
      res.cap_note = std::string("box enumeration hit a resource cap: ") + e.what();
      res.lower = sigma;
      res.upper = Rat(res.h);
      res.noncontainments = found;
      res.maximizers.push_back(*witness);
      return res;
    }
    for (std::size_t i = 0; i < res.candidates.size(); ++i)
      if (!contained[i]) found.push_back(res.candidates[i]);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    Rat best = sigma;
    for (const auto& [s, r] : found) {
      if (!proof_bound_ok(s, r))
        throw std::logic_error("resurgence: a noncontainment escaped the pruning bound");
      best = std::max(best, make_rat(s, r));
    }
    for (const auto& [s, r] : found)
      if (make_rat(s, r) == best) res.maximizers.emplace_back(s, r);
    res.noncontainments = std::move(found);
    res.lower = res.upper = best;
    res.status = ResurgenceStatus::Exact;
    return res;
  }

  // No witness below the cap: certify an interval instead. Any witness with
  // r beyond the cap would have ratio below (1 + b/r) * rho_hat.
  std::vector<long> lambdas(static_cast<std::size_t>(opt.search_cap), 0);
  try {
    parallel_for_index(lambdas.size(), opt.threads, [&](std::size_t i) {
      lambdas[i] = lambda_value(ws, I, scheme, static_cast<long>(i) + 1, res.h);
    });
  } catch (const resource_error& e) {
    res.status = ResurgenceStatus::Capped;
    res.cap_note = std::string("lambda sweep hit a resource cap: ") + e.what();
    res.lower = res.rho_hat;
    res.upper = Rat(res.h);
    return res;
  }
  Rat lam_max(0);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    long r = static_cast<long>(i) + 1;
    if (lambdas[i] >= 1) {
      if (!proof_bound_ok(lambdas[i], r))
        throw std::logic_error("resurgence: a noncontainment escaped the pruning bound");
      res.noncontainments.emplace_back(lambdas[i], r);
      lam_max = std::max(lam_max, make_rat(lambdas[i], r));
    }
  }
  res.lower = std::max(rh, lam_max);
  res.upper = std::max(lam_max, Rat(opt.search_cap + 1 + res.b) / (opt.search_cap + 1) * rh);
  for (const auto& [s, r] : res.noncontainments)
    if (make_rat(s, r) == res.lower) res.maximizers.emplace_back(s, r);
  res.status = ResurgenceStatus::Interval;
  return res;
}

/// gamma_i = largest r with the i-th symbolic power inside the r-th
/// ordinary power; the reciprocal of min gamma_i / i bounds the resurgence
/// from above when i runs to a generating degree of the symbolic filtration.
struct GammaReport {
  std::vector<std::pair<long, long>> gamma; // (i, gamma_i)
  Rat v;                                    // min gamma_i / i
  Rat bound;                                // 1 / v
};

inline long gamma_value(Workspace& ws, const MonomialIdeal& I, const SymbolicScheme& scheme,
                        long i) {
  long g = 1; // the first symbolic power always contains the i-th
  while (g < i && symbolic_in_power(ws, I, scheme, i, g + 1).contained) ++g;
  return g;
}

inline GammaReport gamma_bound(Workspace& ws, const MonomialIdeal& I,
                               const SymbolicScheme& scheme, long n) {
  if (n < 1) throw std::invalid_argument("gamma_bound: n must be positive");
  GammaReport rep;
  bool first = true;
  for (long i = 1; i <= n; ++i) {
    long g = gamma_value(ws, I, scheme, i);
    rep.gamma.emplace_back(i, g);
    Rat q = make_rat(g, i);
    if (first || q < rep.v) rep.v = q;
    first = false;
  }
  rep.bound = Rat(1) / rep.v;
  return rep;
}

/// Upper bound (s+h)/r on the asymptotic value, valid once the (s+1)-th
/// symbolic power is verified inside the closure of the r-th power.
inline Rat rho_hat_from_containment(Workspace& ws, const MonomialIdeal& I,
                                    const SymbolicScheme& scheme, long s, long r) {
  if (r < 1) throw std::invalid_argument("rho_hat_from_containment: r must be positive");
  long h = big_height(I);
  NewtonPolyhedron np = ws.polyhedron_of(I);
  MonomialIdeal S = ws.symbolic_of(I, s + 1, scheme);
  for (const Monomial& g : S.gens)
    if (!in_closure_power(g, np, r))
      throw hypothesis_error("symbolic generator escapes the closure power",
                             to_string(g, I.vars));
  return make_rat(s + h, r);
}

/// Smallest r <= r_max whose (rh-h)-th symbolic power sits inside the
/// closure of the r-th power; existence certifies resurgence below h.
inline std::optional<long> expected_resurgence_certificate(Workspace& ws,
                                                           const MonomialIdeal& I,
                                                           long r_max) {
  if (!I.is_squarefree())
    throw std::invalid_argument("expected_resurgence_certificate: requires a squarefree ideal");
  SymbolicScheme scheme; // squarefree fast path
  long h = big_height(I);
  NewtonPolyhedron np = ws.polyhedron_of(I);
  AsymptoticResult asym = asymptotic_resurgence(ws, I, scheme);
  for (long r = 1; r <= r_max; ++r) {
    long s = r * h - h;
    if (s <= 0) continue;
    // Scaling certificate: when s is at least r * rho_hat, every real point
    // of the symbolic region clears the scaled polyhedron, so the integer
    // generators do too and nothing needs materializing.
    if (Rat(s) >= Rat(r) * asym.lower) return r;
    MonomialIdeal S = ws.symbolic_of(I, s, scheme);
    bool ok = true;
    for (const Monomial& g : S.gens)
      if (!in_closure_power(g, np, r)) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return std::nullopt;
}

namespace detail {

inline bool in_product_with_closure(const Monomial& m, const MonomialIdeal& J,
                                    const NewtonPolyhedron& np, long r) {
  for (const Monomial& g : J.gens)
    if (divides(g, m) && in_closure_power(quotient(m, g), np, r)) return true;
  return false;
}

inline MonomialIdeal embedded_center_intersection(Workspace& ws, const MonomialIdeal& I) {
  NewtonPolyhedron np = ws.polyhedron_of(I);
  std::vector<PrimeSupport> mp = minimal_primes(I);
  std::set<PrimeSupport> minimal(mp.begin(), mp.end());
  std::vector<MonomialIdeal> parts;
  std::set<PrimeSupport> seen;
  for (const Halfspace& w : np.facets) {
    PrimeSupport c = weight_center(w);
    if (minimal.count(c) || seen.count(c)) continue;
    seen.insert(c);
    parts.push_back(prime_to_ideal(c, I.vars));
  }
  if (parts.empty()) return unit_ideal(I.vars);
  return intersect_many(parts);
}

} // namespace detail

/// Strict upper bound (s+h)/r on the asymptotic value via the embedded-
/// center ideal J; when J is the unit ideal every Rees center is minimal
/// and the asymptotic value is exactly one.
struct StrictBoundResult {
  Rat value;
  bool strict = true;        // value strictly exceeds the asymptotic value
  bool rho_hat_is_one = false;
  MonomialIdeal embedded_ideal;
};

inline StrictBoundResult strict_bound(Workspace& ws, const MonomialIdeal& I,
                                      const SymbolicScheme& scheme, long s, long r) {
  if (r < 1) throw std::invalid_argument("strict_bound: r must be positive");
  StrictBoundResult out;
  out.embedded_ideal = detail::embedded_center_intersection(ws, I);
  if (out.embedded_ideal.is_unit()) {
    out.value = Rat(1);
    out.strict = false;
    out.rho_hat_is_one = true;
    return out;
  }
  long h = big_height(I);
  NewtonPolyhedron np = ws.polyhedron_of(I);
  MonomialIdeal S = ws.symbolic_of(I, s + 1, scheme);
  for (const Monomial& g : S.gens)
    if (!detail::in_product_with_closure(g, out.embedded_ideal, np, r))
      throw hypothesis_error("symbolic generator escapes the embedded-center product",
                             to_string(g, I.vars));
  out.value = make_rat(s + h, r);
  return out;
}

/// lambda_r table with the per-r enclosure of the asymptotic value and the
/// tightest envelope over the swept range.
struct LambdaBracket {
  long r = 0;
  long lambda = 0;
  Rat lower; // lambda_r / (r + b), strictly below the asymptotic value
  Rat upper; // (lambda_r + h) / r, at or above it
};

struct LambdaReport {
  std::vector<LambdaBracket> rows;
  Rat env_lower;
  Rat env_upper;
  long b = 0;
  long h = 0;
};

inline LambdaReport lambda_brackets(Workspace& ws, const MonomialIdeal& I,
                                    const SymbolicScheme& scheme, const std::vector<long>& rs,
                                    long rees_cap = 0, int threads = 1) {
  if (rs.empty()) throw std::invalid_argument("lambda_brackets: empty range");
  LambdaReport rep;
  rep.b = ws.profile_of(I, detail::effective_rees_cap(I, rees_cap)).b_value;
  rep.h = big_height(I);
  rep.rows.resize(rs.size());
  parallel_for_index(rs.size(), threads, [&](std::size_t i) {
    LambdaBracket row;
    row.r = rs[i];
    if (row.r < 1) throw std::invalid_argument("lambda_brackets: r must be positive");
    row.lambda = lambda_value(ws, I, scheme, row.r, rep.h);
    row.lower = make_rat(row.lambda, row.r + rep.b);
    row.upper = make_rat(row.lambda + rep.h, row.r);
    rep.rows[i] = row;
  });
  bool first = true;
  for (const LambdaBracket& row : rep.rows) {
    if (first) {
      rep.env_lower = row.lower;
      rep.env_upper = row.upper;
      first = false;
    } else {
      rep.env_lower = std::max(rep.env_lower, row.lower);
      rep.env_upper = std::min(rep.env_upper, row.upper);
    }
  }
  return rep;
}

/// Consistency audit of the containment-implied lower bounds on the limit
/// values: hypothesis first, then one row per Rees valuation.
struct ChudnovskyRow {
  Halfspace weight;
  Rat implied;  // r (nu + C) / (s + h)
  Rat computed; // the valuation's limit value (or its upper bound)
  bool computed_exact = true;
  bool consistent = true;
};

struct ChudnovskyReport {
  std::vector<ChudnovskyRow> rows;
  bool all_consistent = true;
  MonomialIdeal embedded_ideal;
};

inline ChudnovskyReport chudnovsky_type_bound(Workspace& ws, const MonomialIdeal& I,
                                              const SymbolicScheme& scheme, long s, long r,
                                              long C) {
  if (r < 1 || C < 0)
    throw std::invalid_argument("chudnovsky_type_bound: need r >= 1 and C >= 0");
  ChudnovskyReport rep;
  rep.embedded_ideal = detail::embedded_center_intersection(ws, I);
  long h = big_height(I);
  NewtonPolyhedron np = ws.polyhedron_of(I);
  MonomialIdeal JC = ws.power_of(rep.embedded_ideal, r * C);
  MonomialIdeal S = ws.symbolic_of(I, s + 1, scheme);
  for (const Monomial& g : S.gens)
    if (!detail::in_product_with_closure(g, JC, np, r))
      throw hypothesis_error("symbolic generator escapes the weighted product",
                             to_string(g, I.vars));
  for (const Halfspace& w : np.facets) {
    ChudnovskyRow row;
    row.weight = w;
    row.implied = Rat(r) * Rat(w.offset + C) / (s + h);
    NuHatResult nh = nu_hat(I, w, scheme);
    row.computed = nh.value;
    row.computed_exact = nh.exact;
    row.consistent = row.implied <= row.computed;
    rep.all_consistent = rep.all_consistent && row.consistent;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace sympow

#endif
