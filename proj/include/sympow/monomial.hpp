#ifndef SYMPOW_MONOMIAL_HPP
#define SYMPOW_MONOMIAL_HPP

#include "sympow/common.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace sympow {

/// Exponent vector over a fixed ambient variable list. Entries are always >= 0
/// and the length always equals the ambient variable count.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  explicit Monomial(std::size_t n) : e(n, 0) {}

  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  std::size_t size() const { return e.size(); }
  int operator[](std::size_t i) const { return e[i]; }
  int& operator[](std::size_t i) { return e[i]; }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  // Lexicographic order on exponent vectors: the canonical generator order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

// a | b as monomials.
inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

// Quotient a / b; requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial pow(const Monomial& a, int k) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] * k;
  return r;
}

// Bitmask of variables with positive exponent; ambient count is capped well
// below 64 so a single word suffices.
inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i)
    if (m.e[i] > 0) mask |= (std::uint64_t{1} << i);
  return mask;
}

/// Support of a monomial prime: a sorted set of variable indices.
struct PrimeSupport {
  std::vector<int> vars; // strictly increasing

  std::size_t height() const { return vars.size(); }
  bool contains(int v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
  }

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
    return a.vars == b.vars;
  }
  friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
};

inline std::uint64_t support_mask(const PrimeSupport& p) {
  std::uint64_t mask = 0;
  for (int v : p.vars) mask |= (std::uint64_t{1} << v);
  return mask;
}

inline PrimeSupport support_from_mask(std::uint64_t mask) {
  PrimeSupport p;
  for (int i = 0; i < 64; ++i)
    if (mask & (std::uint64_t{1} << i)) p.vars.push_back(i);
  return p;
}

// Renders x^2*y*z^3 style using the given names; "1" for the unit monomial.
inline std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

} // namespace sympow

#endif
