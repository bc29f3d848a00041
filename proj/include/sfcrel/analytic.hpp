#pragma once

// Closed-form SFC reliability.
//
// The general evaluator walks a list of summation slots in canonical order:
//
//   1. one slot per common root, in the order the scenario lists them;
//   2. shared slots (levels 1 .. depth-Δ of every class, skipping levels that
//      are a common root of that class), classes in input order, top down;
//   3. disjoint slots (the remaining Δ levels of every class), same ordering.
//
// Slots 1-2 form the outer sums. Slots in 3 form the bracket, which is evaluated
// once per outer assignment and raised to the power Ψ, since every VNF type
// draws on the per-type backup budget r independently once the shared failures
// are fixed.
//
// Each slot sums binomial terms P(Λ, f) for f = 0..A, where A is the number of
// acceptable component failures given everything assigned by the enclosing
// slots. A slot whose remaining backup budget is already negative contributes
// an empty sum.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sfcrel/model.hpp"
#include "sfcrel/numeric.hpp"

namespace sfcrel {

struct ReliabilityValue {
  double value = 0.0;
  std::uint64_t term_count = 0;
  std::chrono::nanoseconds eval_time{0};
};

class TermBudgetExceeded : public std::runtime_error {
 public:
  explicit TermBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("term budget of " + std::to_string(budget) +
                           " leaf terms exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultTermBudget = 1'000'000'000ULL;

struct EvalOptions {
  std::uint64_t term_budget = kDefaultTermBudget;
  bool memoize = true;
};

/// Bound value meaning "the assumed failures already exceed r": the sum is empty.
inline constexpr int kEmptySummation = -1;

/// Failure counts fixed by enclosing summations, plus the lookups needed to
/// derive F, Λ and the ACF bounds from them.
class SummationState {
 public:
  explicit SummationState(const Scenario& scenario)
      : scenario_(&scenario),
        depth_(scenario.depth()),
        f_(static_cast<std::size_t>(scenario.class_count() * (depth_ + 1)), 0),
        root_f_(scenario.common_roots.size(), 0),
        root_at_(f_.size(), 0) {
    for (std::size_t rho = 0; rho < scenario.common_roots.size(); ++rho) {
      const auto& root = scenario.common_roots[rho];
      for (int xi : root.classes) root_at_[index(xi, root.level)] = static_cast<int>(rho) + 1;
    }
  }

  const Scenario& scenario() const { return *scenario_; }
  int depth() const { return depth_; }

  /// Common root (1-based) occupying `level` of class `xi`, or 0.
  int root_at(int xi, int level) const { return root_at_[index(xi, level)]; }

  /// Failures at (xi, level). Root levels report the root's failure count.
  int f(int xi, int level) const {
    if (level < 1 || level > depth_) return 0;
    if (int rho = root_at(xi, level)) return root_f(rho);
    return f_[index(xi, level)];
  }
  void set_f(int xi, int level, int value) { f_[index(xi, level)] = value; }

  int root_f(int rho) const { return root_f_[static_cast<std::size_t>(rho - 1)]; }
  void set_root_f(int rho, int value) { root_f_[static_cast<std::size_t>(rho - 1)] = value; }

 private:
  std::size_t index(int xi, int level) const {
    return static_cast<std::size_t>((xi - 1) * (depth_ + 1) + level);
  }

  const Scenario* scenario_;
  int depth_;
  std::vector<int> f_;
  std::vector<int> root_f_;
  std::vector<int> root_at_;
};

/// 0 iff (xi, level) is a common root of xi, whose failure the root slot already sums.
inline int phi_indicator(int xi, int level, std::span<const CommonRoot> roots) {
  for (const auto& root : roots)
    if (root.level == level && root.contains(xi)) return 0;
  return 1;
}

/// F: VNFs of one type in class xi lost through failures at levels 1..level.
inline long long failed_vnf_count(const SummationState& state, int xi, int level) {
  const auto& cls = state.scenario().cls(xi);
  long long total = 0;
  for (int c = 1; c <= level && c <= state.depth(); ++c)
    total += static_cast<long long>(state.f(xi, c)) * cls.vnfs_below(c);
  return total;
}

/// Λ for a common root: 1 unless a failed ancestor root already took it down.
inline int root_availability(const SummationState& state, int rho) {
  const auto& roots = state.scenario().common_roots;
  const auto& root = roots[static_cast<std::size_t>(rho - 1)];
  for (std::size_t other = 0; other < roots.size(); ++other)
    if (is_ancestor_root(roots[other], root) && state.root_f(static_cast<int>(other) + 1) > 0)
      return 0;
  return 1;
}

/// Λ: components of `level` in class xi not taken down by failures above them.
inline long long available_components(const SummationState& state, int xi, int level) {
  if (int rho = state.root_at(xi, level)) return root_availability(state, rho);
  const auto& cls = state.scenario().cls(xi);
  if (level == 1) return cls.n_at(1);
  const long long above = available_components(state, xi, level - 1) - state.f(xi, level - 1);
  return above > 0 ? above * cls.n_at(level) : 0;
}

/// ACF of a common root: 1 iff it is available and its failure, together with
/// the roots already failed, loses at most r VNFs per type. Each class is
/// counted once, at the highest failed root that contains it.
inline int root_acf(const SummationState& state, int rho, const ServiceDemand& demand) {
  if (root_availability(state, rho) == 0) return 0;
  const auto& s = state.scenario();
  std::vector<char> counted(static_cast<std::size_t>(s.class_count()) + 1, 0);
  long long losses = 0;
  for (int other = 1; other <= rho; ++other) {
    const bool failed = other == rho || state.root_f(other) > 0;
    if (!failed) continue;
    const auto& root = s.common_roots[static_cast<std::size_t>(other - 1)];
    for (int xi : root.classes) {
      if (counted[static_cast<std::size_t>(xi)]) continue;
      counted[static_cast<std::size_t>(xi)] = 1;
      losses += s.cls(xi).vnfs_below(root.level);
    }
  }
  return demand.r >= losses ? 1 : 0;
}

namespace detail {
inline int acf_from_budget(long long available, long long budget, long long per_component) {
  if (budget < 0) return kEmptySummation;
  const long long by_budget = budget / per_component;
  return static_cast<int>(available < by_budget ? available : by_budget);
}
}  // namespace detail

/// A for a shared level (level <= depth - Δ_xi). Negative means empty summation.
inline int acf_shared(const SummationState& state, int xi, int level, const ServiceDemand& demand,
                      const Scenario& scenario) {
  long long budget = demand.r - failed_vnf_count(state, xi, level - 1);
  for (int l = 1; l < xi; ++l)
    budget -= failed_vnf_count(state, l, scenario.cls(l).last_shared_level());
  return detail::acf_from_budget(available_components(state, xi, level), budget,
                                 scenario.cls(xi).vnfs_below(level));
}

/// A′ for a disjoint level (level > depth - Δ_xi). Negative means empty summation.
inline int acf_disjoint(const SummationState& state, int xi, int level,
                        const ServiceDemand& demand, const Scenario& scenario) {
  long long budget = demand.r - failed_vnf_count(state, xi, level - 1);
  for (int l = 1; l < xi; ++l) budget -= failed_vnf_count(state, l, scenario.depth());
  for (int l = xi + 1; l <= scenario.class_count(); ++l)
    budget -= failed_vnf_count(state, l, scenario.cls(l).last_shared_level());
  return detail::acf_from_budget(available_components(state, xi, level), budget,
                                 scenario.cls(xi).vnfs_below(level));
}

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

class TermCounter {
 public:
  explicit TermCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_) throw TermBudgetExceeded(budget_);
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

class NestedEvaluator {
 public:
  NestedEvaluator(const Scenario& s, const EvalOptions& options)
      : s_(s), state_(s), options_(options), terms_(options.term_budget) {
    for (std::size_t rho = 0; rho < s.common_roots.size(); ++rho)
      slots_.push_back({SlotKind::root, 0, s.common_roots[rho].level, static_cast<int>(rho) + 1});
    root_slots_ = slots_.size();
    for (int xi = 1; xi <= s.class_count(); ++xi)
      for (int c = 1; c <= s.cls(xi).last_shared_level(); ++c)
        if (phi_indicator(xi, c, s.common_roots)) slots_.push_back({SlotKind::shared, xi, c, 0});
    first_disjoint_ = slots_.size();
    for (int xi = 1; xi <= s.class_count(); ++xi)
      for (int c = s.cls(xi).last_shared_level() + 1; c <= s.depth(); ++c)
        slots_.push_back({SlotKind::disjoint, xi, c, 0});

    // For memo keys: first pending level of every class at each slot index.
    next_level_.assign(slots_.size() + 1,
                       std::vector<int>(static_cast<std::size_t>(s.class_count()) + 1, s.depth() + 1));
    for (std::size_t i = slots_.size(); i-- > 0;) {
      next_level_[i] = next_level_[i + 1];
      if (slots_[i].kind != SlotKind::root)
        next_level_[i][static_cast<std::size_t>(slots_[i].xi)] = slots_[i].level;
    }
  }

  double run() {
    if (first_disjoint_ == 0) return std::pow(sum_from(0), s_.demand.psi);
    return sum_from(0);
  }
  std::uint64_t terms() const { return terms_.count(); }

 private:
  enum class SlotKind { root, shared, disjoint };
  struct Slot {
    SlotKind kind;
    int xi;
    int level;
    int rho;
  };

  double next_value(std::size_t i) {
    if (i == first_disjoint_) return std::pow(sum_from(i), s_.demand.psi);
    return sum_from(i);
  }

  std::vector<int> memo_key(std::size_t i) const {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(2 * s_.class_count() + 1));
    key.push_back(static_cast<int>(i));
    for (int xi = 1; xi <= s_.class_count(); ++xi) {
      const int next = next_level_[i][static_cast<std::size_t>(xi)];
      key.push_back(next <= s_.depth() ? static_cast<int>(available_components(state_, xi, next))
                                       : 0);
      key.push_back(static_cast<int>(failed_vnf_count(state_, xi, next - 1)));
    }
    return key;
  }

  double sum_from(std::size_t i) {
    if (i == slots_.size()) return 1.0;
    const bool cacheable = options_.memoize && i >= root_slots_;
    std::vector<int> key;
    if (cacheable) {
      key = memo_key(i);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const Slot& slot = slots_[i];
    long long available = 0;
    int bound = 0;
    double p = 1.0;
    switch (slot.kind) {
      case SlotKind::root: {
        const auto& root = s_.common_roots[static_cast<std::size_t>(slot.rho - 1)];
        available = root_availability(state_, slot.rho);
        bound = root_acf(state_, slot.rho, s_.demand);
        p = s_.cls(root.classes.front()).p_at(root.level);
        break;
      }
      case SlotKind::shared:
        available = available_components(state_, slot.xi, slot.level);
        bound = acf_shared(state_, slot.xi, slot.level, s_.demand, s_);
        p = s_.cls(slot.xi).p_at(slot.level);
        break;
      case SlotKind::disjoint:
        available = available_components(state_, slot.xi, slot.level);
        bound = acf_disjoint(state_, slot.xi, slot.level, s_.demand, s_);
        p = s_.cls(slot.xi).p_at(slot.level);
        break;
    }

    CompensatedSum acc;
    for (int f = 0; f <= bound; ++f) {
      terms_.tick();
      assign(slot, f);
      acc += binom_pmf(static_cast<int>(available), f, p) * next_value(i + 1);
    }
    assign(slot, 0);

    const double value = acc.value();
    if (cacheable) memo_.emplace(std::move(key), value);
    return value;
  }

  void assign(const Slot& slot, int f) {
    if (slot.kind == SlotKind::root)
      state_.set_root_f(slot.rho, f);
    else
      state_.set_f(slot.xi, slot.level, f);
  }

  const Scenario& s_;
  SummationState state_;
  EvalOptions options_;
  TermCounter terms_;
  std::vector<Slot> slots_;
  std::size_t root_slots_ = 0;
  std::size_t first_disjoint_ = 0;
  std::vector<std::vector<int>> next_level_;
  std::unordered_map<std::vector<int>, double, VectorHash> memo_;
};

template <typename Fn>
ReliabilityValue timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  ReliabilityValue out = fn();
  out.eval_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace detail

/// General reliability with N classes, shared and disjoint levels and common roots.
inline ReliabilityValue reliability_general(const Scenario& scenario,
                                            const EvalOptions& options = {}) {
  require_valid(scenario);
  return detail::timed([&] {
    detail::NestedEvaluator eval(scenario, options);
    const double value = eval.run();
    return ReliabilityValue{value, eval.terms(), {}};
  });
}

/// One reliability class: shared-level sums outside, disjoint-level sums in
/// the bracket raised to Ψ.
inline ReliabilityValue reliability_single_class(const Scenario& scenario,
                                                 const EvalOptions& options = {}) {
  require_valid(scenario);
  if (scenario.class_count() != 1)
    throw std::invalid_argument("reliability_single_class needs exactly one class, got " +
                                std::to_string(scenario.class_count()));
  return detail::timed([&] {
    const auto& cls = scenario.classes.front();
    const int depth = cls.depth();
    const int last_shared = cls.last_shared_level();
    const long long r = scenario.demand.r;
    detail::TermCounter terms(options.term_budget);

    // Nested sums over levels first..last; `lost` counts VNFs of one type already failed.
    auto nested = [&](auto& self, int level, int last, long long available, long long lost,
                      auto&& tail) -> double {
      if (level > last) return tail(available, lost);
      const long long per_component = cls.vnfs_below(level);
      const int bound = detail::acf_from_budget(available, r - lost, per_component);
      CompensatedSum acc;
      for (int f = 0; f <= bound; ++f) {
        terms.tick();
        const long long next = level < depth ? (available - f) * cls.n_at(level + 1) : 0;
        acc += binom_pmf(static_cast<int>(available), f, cls.p_at(level)) *
               self(self, level + 1, last, next, lost + f * per_component, tail);
      }
      return acc.value();
    };
    auto bracket = [&](long long available, long long lost) {
      return nested(nested, last_shared + 1, depth, available, lost,
                    [](long long, long long) { return 1.0; });
    };
    auto outer_tail = [&](long long available, long long lost) {
      return std::pow(bracket(available, lost), scenario.demand.psi);
    };
    const double value = nested(nested, 1, last_shared, cls.n_at(1), 0, outer_tail);
    return ReliabilityValue{value, terms.count(), {}};
  });
}

/// A class seen only through its VM reliability (all higher levels perfect).
struct VmClass {
  int n_sub = 1;
  double p_vm = 1.0;
};

/// Placement-independent reliability: [prod over classes of sum_f P(n, f)]^Ψ,
/// with the per-type failure budget shared across classes in order.
inline ReliabilityValue reliability_placement_independent(const ServiceDemand& demand,
                                                          std::span<const VmClass> classes,
                                                          const EvalOptions& options = {}) {
  int total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (!(c.p_vm >= 0.0 && c.p_vm <= 1.0))
      throw std::invalid_argument("classes[" + std::to_string(i) +
                                  "].p_vm: probability outside [0,1]");
    if (c.n_sub < 1)
      throw std::invalid_argument("classes[" + std::to_string(i) + "].n_sub: must be >= 1");
    total += c.n_sub;
  }
  if (demand.k < 1 || demand.r < 0 || demand.psi < 1 || total != demand.n())
    throw std::invalid_argument("demand does not match the class sizes");

  return detail::timed([&] {
    detail::TermCounter terms(options.term_budget);
    auto rec = [&](auto& self, std::size_t xi, int lost) -> double {
      if (xi == classes.size()) return 1.0;
      const int n = classes[xi].n_sub;
      const int bound = std::min(n, demand.r - lost);
      CompensatedSum acc;
      for (int f = 0; f <= bound; ++f) {
        terms.tick();
        acc += binom_pmf(n, f, classes[xi].p_vm) * self(self, xi + 1, lost + f);
      }
      return acc.value();
    };
    const double value = std::pow(rec(rec, 0, 0), demand.psi);
    return ReliabilityValue{value, terms.count(), {}};
  });
}

/// Same, reading n_ξ and the VM-level reliability from a scenario. Reliabilities
/// of the higher levels are taken to be 1.
inline ReliabilityValue reliability_placement_independent(const Scenario& scenario,
                                                          const EvalOptions& options = {}) {
  require_valid(scenario);
  std::vector<VmClass> vm;
  for (const auto& c : scenario.classes) vm.push_back({c.n_sub, c.p_at(c.depth())});
  return reliability_placement_independent(scenario.demand, vm, options);
}

}  // namespace sfcrel
