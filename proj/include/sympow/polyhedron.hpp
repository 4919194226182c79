#ifndef SYMPOW_POLYHEDRON_HPP
#define SYMPOW_POLYHEDRON_HPP

#include "sympow/common.hpp"
#include "sympow/ideal.hpp"
#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sympow {

/// Integer halfspace normal . x >= offset with primitive nonnegative normal.
struct Halfspace {
  std::vector<Int> normal;
  Int offset;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// H-representation of conv(exponents) + nonnegative orthant. Facets with
/// offset zero are the orthant walls and are kept apart from the bounded
/// ones, which carry the valuation data.
struct NewtonPolyhedron {
  std::size_t ell = 0;
  std::vector<Halfspace> facets;            // offset >= 1, sorted
  std::vector<Halfspace> coordinate_facets; // offset == 0, sorted
  std::vector<Monomial> vertices;           // generator exponents on ell independent facets
};

namespace detail {

constexpr std::size_t kMaxDdRows = 128;
using TightMask = std::bitset<kMaxDdRows>;

inline void primitive_scale(std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline Int dot_row(const std::vector<Int>& row, const std::vector<Int>& ray) {
  Int s(0);
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * ray[i];
  return s;
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
inline std::size_t int_rank(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

struct DdRay {
  std::vector<Int> z; // (w, gamma) meaning inequality w.x >= -gamma
  TightMask tight;    // processed rows this ray satisfies with equality
};

// Double description over the cone {z : M z >= 0} where the rows of M are
// (exp(g), 1) per generator and (e_j, 0) per variable. Extreme rays with
// nonzero w part are exactly the facets of the Newton polyhedron.
inline std::vector<DdRay> dd_extreme_rays(const MonomialIdeal& I) {
  const std::size_t ell = I.ell();
  const std::size_t m = I.gens.size();
  const std::size_t dim = ell + 1;
  std::vector<std::vector<Int>> rows;
  rows.reserve(m + ell);
  // Row 0 is the first generator, rows 1..ell the orthant directions; those
  // dim rows are unimodular, so the initial rays are the inverse columns.
  rows.push_back({});
  rows[0].assign(dim, Int(0));
  for (std::size_t j = 0; j < ell; ++j) rows[0][j] = I.gens[0].e[j];
  rows[0][ell] = 1;
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Int> r(dim, Int(0));
    r[j] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t g = 1; g < m; ++g) {
    std::vector<Int> r(dim, Int(0));
    for (std::size_t j = 0; j < ell; ++j) r[j] = I.gens[g].e[j];
    r[ell] = 1;
    rows.push_back(std::move(r));
  }
  if (rows.size() > kMaxDdRows)
    throw resource_error("newton_polyhedron: too many generators for hull");

  std::vector<DdRay> rays;
  {
    DdRay t; // trivial inequality 0.x >= -1
    t.z.assign(dim, Int(0));
    t.z[ell] = 1;
    for (std::size_t k = 1; k <= ell; ++k) t.tight.set(k);
    rays.push_back(std::move(t));
  }
  for (std::size_t j = 0; j < ell; ++j) {
    DdRay r; // inequality x_j >= v1_j, extreme over the basis rows
    r.z.assign(dim, Int(0));
    r.z[j] = 1;
    r.z[ell] = -I.gens[0].e[j];
    r.tight.set(0);
    for (std::size_t k = 1; k <= ell; ++k)
      if (k != j + 1) r.tight.set(k);
    rays.push_back(std::move(r));
  }

  for (std::size_t rowi = dim; rowi < rows.size(); ++rowi) {
    const std::vector<Int>& row = rows[rowi];
    std::vector<DdRay> keep;
    std::vector<std::size_t> pos, neg;
    std::vector<Int> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot_row(row, rays[k].z);
      if (val[k] > 0)
        pos.push_back(k);
      else if (val[k] < 0)
        neg.push_back(k);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      DdRay r = rays[k];
      if (val[k] == 0) r.tight.set(rowi);
      keep.push_back(std::move(r));
    }
    for (std::size_t pi : pos) {
      for (std::size_t ni : neg) {
        TightMask common = rays[pi].tight & rays[ni].tight;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size(); ++t) {
          if (t == pi || t == ni) continue;
          if ((common & ~rays[t].tight).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        DdRay nr;
        nr.z.assign(dim, Int(0));
        // val[pi] * neg_ray - val[ni] * pos_ray lands on the new hyperplane.
        for (std::size_t j = 0; j < dim; ++j)
          nr.z[j] = val[pi] * rays[ni].z[j] - val[ni] * rays[pi].z[j];
        primitive_scale(nr.z);
        nr.tight = common;
        nr.tight.set(rowi);
        keep.push_back(std::move(nr));
        if (keep.size() > 100000)
          throw resource_error("newton_polyhedron: facet cap exceeded");
      }
    }
    rays = std::move(keep);
  }
  return rays;
}

} // namespace detail

/// Exact H-representation of the Newton polyhedron of a nonzero proper ideal.
inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("newton_polyhedron: ideal must be nonzero and proper");
  const std::size_t ell = I.ell();
  if (ell > kMaxAmbientVars)
    throw resource_error("newton_polyhedron: ambient dimension cap exceeded");
  if (I.gens.size() > kMaxGenerators)
    throw resource_error("newton_polyhedron: generator cap exceeded");

  NewtonPolyhedron np;
  np.ell = ell;
  for (const detail::DdRay& r : detail::dd_extreme_rays(I)) {
    bool zero_w = true;
    for (std::size_t j = 0; j < ell; ++j)
      if (r.z[j] != 0) {
        zero_w = false;
        break;
      }
    if (zero_w) continue; // trivial inequality
    Halfspace h;
    h.normal.assign(r.z.begin(), r.z.begin() + static_cast<long>(ell));
    h.offset = -r.z[ell];
    if (h.offset == 0)
      np.coordinate_facets.push_back(std::move(h));
    else
      np.facets.push_back(std::move(h));
  }
  std::sort(np.facets.begin(), np.facets.end());
  std::sort(np.coordinate_facets.begin(), np.coordinate_facets.end());

  // A generator exponent is a vertex when its tight facets span full rank.
  for (const Monomial& g : I.gens) {
    std::vector<std::vector<Rat>> tight;
    auto visit = [&](const Halfspace& h) {
      Int v(0);
      for (std::size_t j = 0; j < ell; ++j) v += h.normal[j] * g.e[j];
      if (v == h.offset) {
        std::vector<Rat> row(ell);
        for (std::size_t j = 0; j < ell; ++j) row[j] = Rat(h.normal[j]);
        tight.push_back(std::move(row));
      }
    };
    for (const Halfspace& h : np.facets) visit(h);
    for (const Halfspace& h : np.coordinate_facets) visit(h);
    if (detail::int_rank(std::move(tight)) == ell) np.vertices.push_back(g);
  }
  std::sort(np.vertices.begin(), np.vertices.end());
  return np;
}

/// Monomial valuation value of one exponent vector under weight w.
inline Int weight_value(const std::vector<Int>& w, const Monomial& m) {
  Int s(0);
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * m.e[j];
  return s;
}

/// min over generators of w . exp(g), the weight's order on the ideal.
inline Int weight_order(const std::vector<Int>& w, const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("weight_order: zero ideal");
  Int best = weight_value(w, I.gens[0]);
  for (std::size_t i = 1; i < I.gens.size(); ++i)
    best = std::min(best, weight_value(w, I.gens[i]));
  return best;
}

/// The bounded facets of the Newton polyhedron, each read as the monomial
/// valuation it induces; the offset is the valuation's value on the ideal.
inline std::vector<Halfspace> rees_valuations(const MonomialIdeal& I) {
  return newton_polyhedron(I).facets;
}

inline std::vector<Halfspace> rees_valuations(const NewtonPolyhedron& np) {
  return np.facets;
}

/// Support of a weight vector as a prime, the valuation's center.
inline PrimeSupport weight_center(const Halfspace& h) {
  PrimeSupport p;
  for (std::size_t j = 0; j < h.normal.size(); ++j)
    if (h.normal[j] != 0) p.vars.push_back(static_cast<int>(j));
  return p;
}

/// Membership in the closure of the r-th power: every bounded facet scaled
/// by r must pass; orthant walls hold automatically.
inline bool in_closure_power(const Monomial& m, const NewtonPolyhedron& np, long r) {
  if (r < 0) throw std::invalid_argument("in_closure_power: negative power");
  if (r == 0) return true;
  for (const Halfspace& h : np.facets)
    if (weight_value(h.normal, m) < Int(r) * h.offset) return false;
  return true;
}

} // namespace sympow

#endif
