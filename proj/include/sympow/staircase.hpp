#ifndef SYMPOW_STAIRCASE_HPP
#define SYMPOW_STAIRCASE_HPP

#include "sympow/common.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sympow {

/// Integer system rows . a >= rhs, a >= 0, with nonnegative coefficients.
/// Both integral-closure powers and squarefree symbolic powers reduce to
/// enumerating the componentwise-minimal solutions of such a system.
struct StaircaseSystem {
  std::size_t nvars = 0;
  std::vector<std::vector<long long>> rows;
  std::vector<long long> rhs;
};

namespace detail {

inline void minimalize_vectors(std::vector<std::vector<int>>& sols) {
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  std::vector<std::vector<int>> keep;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sols.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true, lt = false;
      for (std::size_t k = 0; k < sols[i].size(); ++k) {
        if (sols[j][k] > sols[i][k]) {
          le = false;
          break;
        }
        if (sols[j][k] < sols[i][k]) lt = true;
      }
      if (le && (lt || j < i)) dominated = true; // ties resolved by index
    }
    if (!dominated) keep.push_back(sols[i]);
  }
  sols = std::move(keep);
}

class StaircaseSolver {
public:
  explicit StaircaseSolver(const StaircaseSystem& sys) : sys_(sys) {
    last_pos_.assign(sys.rows.size(), -1);
    for (std::size_t f = 0; f < sys.rows.size(); ++f)
      for (std::size_t j = 0; j < sys.nvars; ++j)
        if (sys.rows[f][j] > 0) last_pos_[f] = static_cast<int>(j);
  }

  std::vector<std::vector<int>> solve() {
    std::vector<long long> res = sys_.rhs;
    for (long long& r : res) r = std::max(r, 0LL);
    return rec(0, std::move(res));
  }

private:
  std::vector<std::vector<int>> rec(std::size_t var, std::vector<long long> res) {
    bool satisfied = true;
    for (std::size_t f = 0; f < res.size(); ++f) {
      if (res[f] <= 0) continue;
      satisfied = false;
      // No later variable can feed this row: dead branch.
      if (last_pos_[f] < static_cast<int>(var)) return {};
    }
    if (satisfied) return {std::vector<int>(sys_.nvars - var, 0)};

    auto key = std::make_pair(var, res);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    long long vmax = 0;
    for (std::size_t f = 0; f < res.size(); ++f) {
      if (res[f] <= 0 || sys_.rows[f][var] <= 0) continue;
      long long c = sys_.rows[f][var];
      vmax = std::max(vmax, (res[f] + c - 1) / c);
    }

    std::vector<std::vector<int>> merged;
    for (long long v = 0; v <= vmax; ++v) {
      std::vector<long long> child = res;
      if (v > 0)
        for (std::size_t f = 0; f < child.size(); ++f)
          child[f] = std::max(child[f] - v * sys_.rows[f][var], 0LL);
      for (std::vector<int> tail : rec(var + 1, std::move(child))) {
        std::vector<int> sol;
        sol.reserve(sys_.nvars - var);
        sol.push_back(static_cast<int>(v));
        sol.insert(sol.end(), tail.begin(), tail.end());
        merged.push_back(std::move(sol));
      }
      if (merged.size() > kDefaultGeneratorCap)
        throw resource_error("staircase: minimal solution cap exceeded");
    }
    minimalize_vectors(merged);
    memo_.emplace(std::move(key), merged);
    return merged;
  }

  const StaircaseSystem& sys_;
  std::vector<int> last_pos_;
  std::map<std::pair<std::size_t, std::vector<long long>>, std::vector<std::vector<int>>> memo_;
};

} // namespace detail

/// All componentwise-minimal nonnegative integer solutions, in sorted order.
inline std::vector<std::vector<int>> minimal_solutions(const StaircaseSystem& sys) {
  for (const auto& row : sys.rows)
    for (long long c : row)
      if (c < 0) throw std::invalid_argument("minimal_solutions: negative coefficient");
  detail::StaircaseSolver solver(sys);
  std::vector<std::vector<int>> out = solver.solve();
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace sympow

#endif
