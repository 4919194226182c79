#ifndef SYMPOW_LINPROG_HPP
#define SYMPOW_LINPROG_HPP

#include "sympow/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sympow {

/// One linear constraint normal . x >= offset with rational data. Variables
/// are free; add explicit coordinate constraints where x >= 0 is intended.
struct QHalfspace {
  std::vector<Rat> normal;
  Rat offset;
};

struct LinearProgram {
  std::vector<Rat> objective; // minimize objective . x
  std::vector<QHalfspace> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rat value;
  std::vector<Rat> argmin;
  std::vector<Rat> dual; // one multiplier per constraint; zero on redundant rows
};

namespace detail {

// Dense exact simplex tableau. Columns: n "plus" vars, n "minus" vars (free x
// split as u - w), m slacks, m artificials, then the rhs. Bland's rule on both
// phases guarantees termination without cycling.
class SimplexTableau {
public:
  SimplexTableau(const LinearProgram& lp)
      : n_(lp.objective.size()), m_(lp.constraints.size()),
        cols_(2 * n_ + 2 * m_), rows_(m_) {
    sigma_.assign(m_, 1);
    tab_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.assign(m_, 0);
    row_live_.assign(m_, true);
    for (std::size_t i = 0; i < m_; ++i) {
      const QHalfspace& h = lp.constraints[i];
      if (h.normal.size() != n_)
        throw std::invalid_argument("lp_minimize: constraint arity mismatch");
      int sg = h.offset < 0 ? -1 : 1;
      sigma_[i] = sg;
      for (std::size_t j = 0; j < n_; ++j) {
        tab_[i][j] = sg * h.normal[j];
        tab_[i][n_ + j] = -sg * h.normal[j];
      }
      tab_[i][2 * n_ + i] = Rat(-sg); // slack
      tab_[i][2 * n_ + m_ + i] = 1;   // artificial, initial basis
      tab_[i][cols_] = sg * h.offset;
      basis_[i] = art_col(i);
    }
  }

  std::size_t art_col(std::size_t i) const { return 2 * n_ + m_ + i; }
  bool is_artificial(std::size_t col) const { return col >= 2 * n_ + m_; }

  // Minimizes the given column costs over the current basis; artificials are
  // never eligible to enter when allow_artificial is false. Returns false on
  // an unbounded ray.
  bool run(const std::vector<Rat>& cost, bool allow_artificial) {
    for (;;) {
      // Tableau columns already carry B^{-1}, so the reduced cost is the raw
      // cost minus the basic costs applied to the current column.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (is_basic(j)) continue;
        Rat red = cost[j];
        for (std::size_t i = 0; i < rows_; ++i)
          if (row_live_[i] && cost[basis_[i]] != 0) red -= cost[basis_[i]] * tab_[i][j];
        if (red < 0) {
          enter = j; // Bland: first eligible index
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rat best_ratio(0);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!row_live_[i] || tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rat p = tab_[r][c];
    for (Rat& x : tab_[r]) x /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || !row_live_[i] || tab_[i][c] == 0) continue;
      Rat f = tab_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  // After a zero-value phase 1, pivot remaining basic artificials out; a row
  // with no live non-artificial entry is a redundant constraint and retires.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!row_live_[i] || !is_artificial(basis_[i])) continue;
      std::size_t c = cols_;
      for (std::size_t j = 0; j < 2 * n_ + m_; ++j)
        if (tab_[i][j] != 0) {
          c = j;
          break;
        }
      if (c == cols_)
        row_live_[i] = false;
      else
        pivot(i, c);
    }
  }

  std::vector<Rat> multipliers(const std::vector<Rat>& cost) const {
    // Artificial column i holds B^{-1} e_i, so pi = c_B B^{-1} reads off it.
    std::vector<Rat> pi(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!row_live_[i]) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (row_live_[r] && cost[basis_[r]] != 0)
          pi[i] += cost[basis_[r]] * tab_[r][art_col(i)];
    }
    return pi;
  }

  bool is_basic(std::size_t col) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (row_live_[i] && basis_[i] == col) return true;
    return false;
  }

  Rat objective_value(const std::vector<Rat>& cost) const {
    Rat v(0);
    for (std::size_t i = 0; i < rows_; ++i)
      if (row_live_[i]) v += cost[basis_[i]] * tab_[i][cols_];
    return v;
  }

  std::size_t n_, m_, cols_, rows_;
  std::vector<int> sigma_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<bool> row_live_;
};

} // namespace detail

/// Exact simplex over the rationals. Returns the optimal value with one
/// optimal point and the dual multipliers, or reports infeasible/unbounded.
inline LpResult lp_minimize(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  LpResult res;
  if (m == 0) {
    // No constraints: x = 0 is optimal iff the objective is identically zero.
    for (const Rat& c : lp.objective)
      if (c != 0) {
        res.status = LpStatus::Unbounded;
        return res;
      }
    res.value = 0;
    res.argmin.assign(n, Rat(0));
    return res;
  }

  detail::SimplexTableau T(lp);
  std::vector<Rat> phase1_cost(T.cols_, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1_cost[T.art_col(i)] = 1;
  T.run(phase1_cost, true);
  if (T.objective_value(phase1_cost) != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  T.drive_out_artificials();

  std::vector<Rat> cost(T.cols_, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
    cost[n + j] = -lp.objective[j];
  }
  if (!T.run(cost, false)) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.value = T.objective_value(cost);
  res.argmin.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!T.row_live_[i]) continue;
    std::size_t b = T.basis_[i];
    if (b < n)
      res.argmin[b] += T.tab_[i][T.cols_];
    else if (b < 2 * n)
      res.argmin[b - n] -= T.tab_[i][T.cols_];
  }
  std::vector<Rat> pi = T.multipliers(cost);
  res.dual.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (T.row_live_[i]) res.dual[i] = Rat(T.sigma_[i]) * pi[i];
  return res;
}

/// Exact duality audit: multipliers nonnegative, A^T y = c (free primal
/// variables force equality), and y . b equal to the reported value.
inline bool verify_dual_certificate(const LinearProgram& lp, const LpResult& res) {
  if (res.status != LpStatus::Optimal) return false;
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  if (res.dual.size() != m) return false;
  for (const Rat& y : res.dual)
    if (y < 0) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Rat lhs(0);
    for (std::size_t i = 0; i < m; ++i) lhs += res.dual[i] * lp.constraints[i].normal[j];
    if (lhs != lp.objective[j]) return false;
  }
  Rat bound(0);
  for (std::size_t i = 0; i < m; ++i) bound += res.dual[i] * lp.constraints[i].offset;
  return bound == res.value;
}

} // namespace sympow

#endif
