#ifndef SYMPOW_WORKSPACE_HPP
#define SYMPOW_WORKSPACE_HPP

#include "sympow/closure.hpp"
#include "sympow/ideal.hpp"
#include "sympow/polyhedron.hpp"
#include "sympow/symbolic.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sympow {

namespace detail {

inline std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

} // namespace detail

/// Compute context: memoizes powers, closure powers, symbolic powers, and
/// polyhedra per ideal, optionally persisting generator sets under a cache
/// directory (SYMPOW_CACHE_DIR) keyed by ideal content and operation.
/// All accessors are serialized by one mutex; results are value copies.
class Workspace {
public:
  Workspace() {
    if (const char* env = std::getenv("SYMPOW_CACHE_DIR"))
      if (*env) cache_dir_ = env;
  }
  explicit Workspace(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

  MonomialIdeal power_of(const MonomialIdeal& I, long r) {
    return cached(I, "pow", r, [&] { return power(I, r); });
  }

  MonomialIdeal closure_of(const MonomialIdeal& I, long r) {
    if (r < 1) return closure_power(I, polyhedron_of(I), r);
    const std::string base = ideal_key(I) + "|cl|";
    if (auto hit = lookup(base + std::to_string(r), I.vars)) return *hit;
    NewtonPolyhedron np = polyhedron_of(I);
    // Extend the filtration from the deepest cached level instead of
    // recomputing it from scratch for every requested power.
    MonomialIdeal cur;
    long from = 0;
    for (long t = r - 1; t >= 1 && from == 0; --t)
      if (auto hit = lookup(base + std::to_string(t), I.vars)) {
        cur = std::move(*hit);
        from = t;
      }
    if (from == 0) {
      cur = closure_power(I, np, 1);
      store(base + "1", cur);
      from = 1;
    }
    for (long t = from + 1; t <= r; ++t) {
      cur = closure_step(cur, np, t);
      store(base + std::to_string(t), cur);
    }
    return cur;
  }

  MonomialIdeal symbolic_of(const MonomialIdeal& I, long s, const SymbolicScheme& scheme) {
    std::string op = "sym";
    switch (scheme.mode) {
      case SymbolicMode::Squarefree: op += "q"; break;
      case SymbolicMode::Ass: op += "a"; break;
      case SymbolicMode::MinPrimes: op += "m"; break;
      case SymbolicMode::Components: {
        op += "c";
        for (const PrimeSupport& p : scheme.components)
          op += "_" + std::to_string(support_mask(p));
        break;
      }
    }
    if (scheme.mode != SymbolicMode::Squarefree || s < 1)
      return cached(I, op, s, [&] { return symbolic_power(I, s, scheme); });
    const std::string base = ideal_key(I) + "|" + op + "|";
    if (auto hit = lookup(base + std::to_string(s), I.vars)) return *hit;
    std::vector<std::uint64_t> masks;
    for (const PrimeSupport& p : detail::scheme_primes(I, scheme))
      masks.push_back(support_mask(p));
    MonomialIdeal cur;
    long from = 0;
    for (long t = s - 1; t >= 1 && from == 0; --t)
      if (auto hit = lookup(base + std::to_string(t), I.vars)) {
        cur = std::move(*hit);
        from = t;
      }
    if (from == 0) {
      cur = detail::squarefree_symbolic_base(I.vars, masks);
      store(base + "1", cur);
      from = 1;
    }
    for (long t = from + 1; t <= s; ++t) {
      cur = detail::squarefree_symbolic_step(cur, masks, t);
      store(base + std::to_string(t), cur);
    }
    return cur;
  }

  NewtonPolyhedron polyhedron_of(const MonomialIdeal& I) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = ideal_key(I);
    auto it = np_.find(key);
    if (it == np_.end()) it = np_.emplace(key, newton_polyhedron(I)).first;
    return it->second;
  }

  ClosureProfile profile_of(const MonomialIdeal& I, long rees_cap) {
    std::string key = ideal_key(I) + "|" + std::to_string(rees_cap);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = profiles_.find(key);
      if (it != profiles_.end()) return it->second;
    }
    // Computed without the lock so the closure cascade lands in the shared
    // ideal cache instead of being rebuilt per consumer.
    ClosureProfile p =
        b_of_with(I, rees_cap, [&](long m) { return closure_of(I, m); });
    std::lock_guard<std::mutex> lock(mu_);
    auto it = profiles_.find(key);
    if (it == profiles_.end()) it = profiles_.emplace(std::move(key), std::move(p)).first;
    return it->second;
  }

private:
  template <class Fn>
  MonomialIdeal cached(const MonomialIdeal& I, const std::string& op, long param, Fn fn) {
    std::string key = ideal_key(I) + "|" + op + "|" + std::to_string(param);
    if (auto hit = lookup(key, I.vars)) return *hit;
    MonomialIdeal value = fn(); // computed outside the lock; recompute races are benign
    store(key, value);
    return value;
  }

  std::optional<MonomialIdeal> lookup(const std::string& key,
                                      const std::vector<std::string>& vars) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ideals_.find(key);
    if (it != ideals_.end()) return it->second;
    if (auto disk = disk_read(key, vars)) {
      ideals_.emplace(key, *disk);
      return disk;
    }
    return std::nullopt;
  }

  void store(const std::string& key, const MonomialIdeal& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (ideals_.count(key)) return; // first write wins, racers recomputed equal values
    ideals_.emplace(key, value);
    disk_write(key, value);
  }

  std::optional<MonomialIdeal> disk_read(const std::string& key,
                                         const std::vector<std::string>& vars) {
    if (cache_dir_.empty()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::size_t ell = 0, count = 0;
    if (!(in >> ell >> count) || ell != vars.size()) return std::nullopt;
    std::vector<Monomial> gens;
    gens.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      Monomial m;
      m.e.resize(ell);
      for (std::size_t j = 0; j < ell; ++j)
        if (!(in >> m.e[j]) || m.e[j] < 0) return std::nullopt;
      gens.push_back(std::move(m));
    }
    MonomialIdeal I;
    I.vars = vars;
    I.gens = std::move(gens); // cache stores normalized generator sets
    return I;
  }

  void disk_write(const std::string& key, const MonomialIdeal& I) {
    if (cache_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;
    std::ostringstream body;
    body << I.ell() << ' ' << I.gens.size() << '\n';
    for (const Monomial& m : I.gens) {
      for (std::size_t j = 0; j < m.e.size(); ++j)
        body << (j ? " " : "") << m.e[j];
      body << '\n';
    }
    std::ofstream out(path_for(key), std::ios::trunc);
    if (out) out << body.str();
  }

  std::string path_for(const std::string& key) const {
    return (std::filesystem::path(cache_dir_) / (detail::hex64(detail::fnv64(key)) + ".gens"))
        .string();
  }

  std::mutex mu_;
  std::string cache_dir_;
  std::map<std::string, MonomialIdeal> ideals_;
  std::map<std::string, NewtonPolyhedron> np_;
  std::map<std::string, ClosureProfile> profiles_;
};

} // namespace sympow

#endif
