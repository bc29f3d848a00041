#pragma once

// Ground-truth engines over an explicit ComponentTree: exact enumeration of
// every intrinsic failure state, and seeded Monte-Carlo sampling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sfcrel/numeric.hpp"
#include "sfcrel/philox.hpp"
#include "sfcrel/tree.hpp"

namespace sfcrel {

inline constexpr std::size_t kDefaultExhaustiveCap = 24;

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t nodes, std::size_t cap)
      : std::runtime_error("exhaustive oracle: " + std::to_string(nodes) +
                           " nodes exceed the cap of " + std::to_string(cap)) {}
};

/// Sum over all 2^nodes intrinsic states of P(state) * [service succeeds].
inline double exhaustive_reliability(const ComponentTree& tree, const ServiceDemand& demand,
                                     std::size_t cap = kDefaultExhaustiveCap) {
  const std::size_t n = tree.size();
  if (n > cap || n >= 63) throw OracleCapExceeded(n, cap);

  FailureState state{std::vector<char>(n, 0)};
  CompensatedSum total;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    double prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool up = (mask >> i) & 1U;
      state.alive[i] = up;
      prob *= up ? tree.nodes[i].p : 1.0 - tree.nodes[i].p;
    }
    if (prob == 0.0) continue;
    if (service_success(tree, state, demand)) total += prob;
  }
  return total.value();
}

struct McEstimate {
  double mean = 0.0;
  double half_width = 0.0;  // 95% normal-approximation confidence half-width
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
  bool contains(double x) const { return x >= lower() && x <= upper(); }
};

namespace detail {

inline std::uint64_t count_successes(const ComponentTree& tree, const ServiceDemand& demand,
                                     const Philox4x32& rng, std::uint64_t first,
                                     std::uint64_t last) {
  const std::size_t n = tree.size();
  FailureState state{std::vector<char>(n, 0)};
  std::vector<char> effective(n, 0);
  std::uint64_t successes = 0;
  for (std::uint64_t trial = first; trial < last; ++trial) {
    for (std::size_t i = 0; i < n; i += 2) {
      const auto u = rng.uniforms(trial, i / 2);
      state.alive[i] = u[0] < tree.nodes[i].p;
      if (i + 1 < n) state.alive[i + 1] = u[1] < tree.nodes[i + 1].p;
    }
    for (const auto& node : tree.nodes) {
      const auto id = static_cast<std::size_t>(node.id);
      effective[id] = state.alive[id] &&
                      (node.parent < 0 || effective[static_cast<std::size_t>(node.parent)]);
    }
    if (service_success(tree, effective, demand)) ++successes;
  }
  return successes;
}

}  // namespace detail

/// Draw for (trial t, node i) is uniform number i of Philox(seed) at counter (t, i/2),
/// so the estimate does not depend on how trials are split across workers.
inline McEstimate monte_carlo_estimate(const ComponentTree& tree, const ServiceDemand& demand,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 0) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_estimate: trials must be >= 1");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  const Philox4x32 rng(seed);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = trials / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk;
    const std::uint64_t last = (w + 1 == workers) ? trials : first + chunk;
    pool.emplace_back([&, w, first, last] {
      partial[w] = detail::count_successes(tree, demand, rng, first, last);
    });
  }
  for (auto& t : pool) t.join();

  McEstimate est;
  est.trials = trials;
  for (auto s : partial) est.successes += s;
  est.mean = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.half_width = 1.96 * std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
  return est;
}

}  // namespace sfcrel
