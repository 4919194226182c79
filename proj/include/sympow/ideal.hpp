#ifndef SYMPOW_IDEAL_HPP
#define SYMPOW_IDEAL_HPP

#include "sympow/common.hpp"
#include "sympow/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sympow {

/// A monomial ideal given by its minimal generating set over a fixed ambient
/// ring. Canonical form: generators minimal under divisibility and sorted
/// lexicographically, so equal ideals compare equal as values.
/// The empty generator list is the zero ideal; {1} is the unit ideal.
struct MonomialIdeal {
  std::vector<std::string> vars;
  std::vector<Monomial> gens;

  std::size_t ell() const { return vars.size(); }
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars == b.vars && a.gens == b.gens;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : m.e) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

// Removes divisibility-redundant monomials in place. Candidates are scanned in
// increasing degree, so every kept monomial is tested only against kept ones of
// no larger degree; the support-mask check rejects most pairs in one word op.
inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  std::vector<std::uint64_t> kept_mask;
  kept.reserve(gens.size());
  for (const Monomial& m : gens) {
    const std::uint64_t mm = support_mask(m);
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if ((kept_mask[j] & ~mm) != 0) continue;
      if (divides(kept[j], m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(m);
      kept_mask.push_back(mm);
    }
  }
  gens = std::move(kept);
}

inline void check_cap(std::size_t count, std::size_t cap, const char* where) {
  if (count > cap)
    throw resource_error(std::string(where) + ": intermediate generator count " +
                         std::to_string(count) + " exceeds cap " + std::to_string(cap));
}

} // namespace detail

/// Minimal generating set from an arbitrary list of monomials, canonically
/// ordered. The unit monomial swallows everything; duplicates are dropped.
inline MonomialIdeal normalize(std::vector<std::string> vars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.size() != vars.size())
      throw std::invalid_argument("normalize: exponent vector length mismatch");
  detail::minimalize(gens);
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal{std::move(vars), std::move(gens)};
}

inline MonomialIdeal zero_ideal(std::vector<std::string> vars) {
  return MonomialIdeal{std::move(vars), {}};
}

inline MonomialIdeal unit_ideal(std::vector<std::string> vars) {
  Monomial one(vars.size());
  return MonomialIdeal{std::move(vars), {one}};
}

inline void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars != b.vars)
    throw std::invalid_argument("operands live in different ambient rings");
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return normalize(a.vars, std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                              std::size_t cap = kDefaultGeneratorCap) {
  require_same_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return zero_ideal(a.vars);
  detail::check_cap(a.gens.size() * b.gens.size(), cap, "multiply");
  std::vector<Monomial> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) {
      Monomial p = mul(g, h);
      if (seen.insert(p).second) gens.push_back(std::move(p));
    }
  return normalize(a.vars, std::move(gens));
}

/// I^r by repeated squaring, normalizing after each product. r = 0 is the
/// unit ideal by convention.
inline MonomialIdeal power(const MonomialIdeal& I, int r,
                           std::size_t cap = kDefaultGeneratorCap) {
  if (r < 0) throw std::invalid_argument("power: negative exponent");
  if (r == 0) return unit_ideal(I.vars);
  MonomialIdeal result = unit_ideal(I.vars);
  MonomialIdeal base = I;
  int k = r;
  while (k > 0) {
    if (k & 1) result = multiply(result, base, cap);
    k >>= 1;
    if (k > 0) base = multiply(base, base, cap);
  }
  return result;
}

/// Intersection via pairwise lcms of generators, then minimalization.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                               std::size_t cap = kDefaultGeneratorCap) {
  require_same_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return zero_ideal(a.vars);
  detail::check_cap(a.gens.size() * b.gens.size(), cap, "intersect");
  std::vector<Monomial> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) {
      Monomial p = lcm(g, h);
      if (seen.insert(p).second) gens.push_back(std::move(p));
    }
  return normalize(a.vars, std::move(gens));
}

inline MonomialIdeal intersect_many(const std::vector<MonomialIdeal>& parts,
                                    std::size_t cap = kDefaultGeneratorCap) {
  if (parts.empty()) throw std::invalid_argument("intersect_many: empty input");
  MonomialIdeal acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i], cap);
  return acc;
}

/// I^[r]: the ideal generated by r-th powers of the generators. Minimality of
/// the generating set survives raising to bracket powers.
inline MonomialIdeal bracket_power(const MonomialIdeal& I, int r) {
  if (r < 1) throw std::invalid_argument("bracket_power: r must be positive");
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) gens.push_back(pow(g, r));
  return normalize(I.vars, std::move(gens));
}

/// pi(I): least common multiple of the generators (coordinatewise max).
inline Monomial pi(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("pi: zero ideal has no lcm");
  Monomial m(I.ell());
  for (const Monomial& g : I.gens) m = lcm(m, g);
  return m;
}

inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    Monomial r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r.e[i] = g.e[i] > 0 ? 1 : 0;
    gens.push_back(std::move(r));
  }
  return normalize(I.vars, std::move(gens));
}

inline bool monomial_in_ideal(const Monomial& m, const MonomialIdeal& I) {
  const std::uint64_t mm = support_mask(m);
  for (const Monomial& g : I.gens) {
    if ((support_mask(g) & ~mm) != 0) continue;
    if (divides(g, m)) return true;
  }
  return false;
}

namespace detail {

// Integer feasibility behind m in I^r: nonnegative multiplicities (c_g) with
// sum r and sum of c_g * exp(g) <= exp(m) coordinatewise. Depth-first over the
// generators, multiplicities tried largest first, pruned by the degree budget.
inline bool in_power_dfs(const std::vector<Monomial>& gens, std::size_t idx,
                         Monomial& residual, int residual_deg, int k, int min_deg) {
  if (k == 0) return true;
  if (idx == gens.size()) return false;
  if (residual_deg < k * min_deg) return false;
  const Monomial& g = gens[idx];
  int cmax = k;
  for (std::size_t i = 0; i < g.e.size() && cmax > 0; ++i)
    if (g.e[i] > 0) cmax = std::min(cmax, residual.e[i] / g.e[i]);
  for (int c = cmax; c >= 0; --c) {
    for (std::size_t i = 0; i < g.e.size(); ++i) residual.e[i] -= c * g.e[i];
    bool ok = in_power_dfs(gens, idx + 1, residual, residual_deg - c * g.deg(), k - c,
                           min_deg);
    for (std::size_t i = 0; i < g.e.size(); ++i) residual.e[i] += c * g.e[i];
    if (ok) return true;
  }
  return false;
}

} // namespace detail

/// m in I^r without materializing I^r: branch-and-prune over generator
/// multiplicities. r = 0 is always true.
inline bool monomial_in_power(const Monomial& m, const MonomialIdeal& I, int r) {
  if (r < 0) throw std::invalid_argument("monomial_in_power: negative power");
  if (r == 0) return true;
  if (I.is_zero()) return false;
  if (I.is_unit()) return true;
  int min_deg = I.gens.front().deg();
  for (const Monomial& g : I.gens) min_deg = std::min(min_deg, g.deg());
  if (m.deg() < r * min_deg) return false;
  Monomial residual = m;
  return detail::in_power_dfs(I.gens, 0, residual, m.deg(), r, min_deg);
}

/// Reference path for cross-checks: materialize I^r and test divisibility.
inline bool monomial_in_power_materialized(const Monomial& m, const MonomialIdeal& I,
                                           int r, std::size_t cap = kDefaultGeneratorCap) {
  if (r == 0) return true;
  return monomial_in_ideal(m, power(I, r, cap));
}

struct ContainmentCheck {
  bool contained;
  std::optional<Monomial> witness; // a minimal generator of A outside I^r
};

/// A subseteq I^r, witnessed: every minimal generator of A must lie in I^r.
inline ContainmentCheck ideal_containment(const MonomialIdeal& A, const MonomialIdeal& I,
                                          int r) {
  require_same_ambient(A, I);
  for (const Monomial& g : A.gens)
    if (!monomial_in_power(g, I, r)) return {false, g};
  return {true, std::nullopt};
}

/// I * R_P contracted back: variables outside P are units, so their exponents
/// drop to zero.
inline MonomialIdeal localize_contract(const MonomialIdeal& I, const PrimeSupport& P) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) {
    Monomial h(g.size());
    for (int v : P.vars) h.e[v] = g.e[v];
    gens.push_back(std::move(h));
  }
  return normalize(I.vars, std::move(gens));
}

inline MonomialIdeal prime_to_ideal(const PrimeSupport& P,
                                    const std::vector<std::string>& vars) {
  std::vector<Monomial> gens;
  for (int v : P.vars) {
    Monomial g(vars.size());
    g.e[v] = 1;
    gens.push_back(std::move(g));
  }
  return normalize(vars, std::move(gens));
}

// Stable identity string; used as the workspace cache key.
inline std::string ideal_key(const MonomialIdeal& I) {
  std::string key = std::to_string(I.ell());
  for (const std::string& v : I.vars) {
    key += ':';
    key += v;
  }
  for (const Monomial& g : I.gens) {
    key += '|';
    for (int x : g.e) {
      key += std::to_string(x);
      key += ',';
    }
  }
  return key;
}

} // namespace sympow

#endif
