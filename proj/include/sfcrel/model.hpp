#pragma once

// Scenario data model: demand, hierarchy, reliability classes and common roots.
//
// Levels are 1-based throughout the public API: level 1 is the top of the
// hierarchy (data center), level depth() is the VM that hosts one VNF.
// Class indices inside CommonRoot are 1-based as well, matching the
// scenario file format.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfcrel {

struct ServiceDemand {
  int k = 1;    // active sub-SFCs
  int r = 0;    // backup sub-SFCs
  int psi = 1;  // VNF types per chain

  int n() const { return k + r; }
};

struct Hierarchy {
  std::vector<std::string> level_names{"DC", "rack", "server", "VM"};

  int depth() const { return static_cast<int>(level_names.size()); }

  static Hierarchy with_depth(int depth) {
    Hierarchy h;
    if (depth == 4) return h;
    h.level_names.clear();
    for (int c = 1; c <= depth; ++c) h.level_names.push_back("L" + std::to_string(c));
    return h;
  }
};

/// (N_r, Δ) pair selecting one of the canonical placements.
struct PlacementPreset {
  int nr = 1;
  int delta = 1;
};

struct ReliabilityClassSpec {
  int n_sub = 1;
  std::vector<int> epsilon;          // replica spread per level, product == n_sub
  int delta = 1;                     // disjoint levels at the bottom of the hierarchy
  std::vector<double> reliabilities; // per-level success probability

  int depth() const { return static_cast<int>(epsilon.size()); }
  int n_at(int level) const { return epsilon[static_cast<std::size_t>(level - 1)]; }
  double p_at(int level) const { return reliabilities[static_cast<std::size_t>(level - 1)]; }
  /// Last level whose components are shared by all VNF types of a sub-SFC.
  int last_shared_level() const { return depth() - delta; }
  bool is_shared(int level) const { return level <= last_shared_level(); }

  /// Replicas hosted by one component of `level` (product of ε below it).
  long long vnfs_below(int level) const {
    long long prod = 1;
    for (int c = level + 1; c <= depth(); ++c) prod *= n_at(c);
    return prod;
  }
  /// Total level-`level` components used for one VNF type.
  long long components_at(int level) const {
    long long prod = 1;
    for (int c = 1; c <= level; ++c) prod *= n_at(c);
    return prod;
  }
};

struct CommonRoot {
  int level = 1;
  std::vector<int> classes;  // 1-based class indices

  bool contains(int class_index) const {
    return std::find(classes.begin(), classes.end(), class_index) != classes.end();
  }
  /// True when every class of `other` also belongs to this root.
  bool covers(const CommonRoot& other) const {
    return std::all_of(other.classes.begin(), other.classes.end(),
                       [&](int x) { return contains(x); });
  }
  bool intersects(const CommonRoot& other) const {
    return std::any_of(other.classes.begin(), other.classes.end(),
                       [&](int x) { return contains(x); });
  }
};

struct Scenario {
  ServiceDemand demand;
  Hierarchy hierarchy;
  std::vector<ReliabilityClassSpec> classes;
  std::vector<CommonRoot> common_roots;

  int depth() const { return hierarchy.depth(); }
  int class_count() const { return static_cast<int>(classes.size()); }
  const ReliabilityClassSpec& cls(int class_index) const {
    return classes[static_cast<std::size_t>(class_index - 1)];
  }
};

/// ρ′ is an ancestor of ρ when it sits strictly higher and joins a superset of classes.
inline bool is_ancestor_root(const CommonRoot& candidate, const CommonRoot& root) {
  return candidate.level < root.level && candidate.covers(root);
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid scenario";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

/// Number of levels at which same-type replicas sit in pairwise distinct
/// components. A single replica is reported as fully heterogeneous.
inline int heterogeneity_degree(const ReliabilityClassSpec& spec) {
  if (spec.n_sub <= 1) return spec.depth();
  int nr = 0;
  for (int c = 1; c <= spec.depth(); ++c)
    if (spec.components_at(c) == spec.n_sub) ++nr;
  return nr;
}

/// Placement strategy tag: "s" groups a sub-SFC together, "v" groups a VNF type.
inline std::string placement_label(const PlacementPreset& preset) {
  if (preset.delta < preset.nr) return "s";
  if (preset.delta == preset.nr) return "v, s";
  return "v";
}

/// Expands (N_r, Δ) into an explicit configuration: all multiplicity goes to
/// the separation level depth - N_r + 1.
inline ReliabilityClassSpec expand_preset(const PlacementPreset& preset, int n_sub,
                                          std::vector<double> reliabilities,
                                          const Hierarchy& hierarchy) {
  const int depth = hierarchy.depth();
  if (depth < 1) throw std::invalid_argument("hierarchy depth must be >= 1");
  if (preset.nr < 1 || preset.nr > depth)
    throw std::invalid_argument("preset.nr must be in [1, " + std::to_string(depth) + "], got " +
                                std::to_string(preset.nr));
  if (preset.delta < 1 || preset.delta > depth)
    throw std::invalid_argument("preset.delta must be in [1, " + std::to_string(depth) +
                                "], got " + std::to_string(preset.delta));
  if (n_sub < 1) throw std::invalid_argument("n_sub must be >= 1");
  if (static_cast<int>(reliabilities.size()) != depth)
    throw std::invalid_argument("reliabilities must have one entry per level");

  ReliabilityClassSpec spec;
  spec.n_sub = n_sub;
  spec.epsilon.assign(static_cast<std::size_t>(depth), 1);
  spec.epsilon[static_cast<std::size_t>(depth - preset.nr)] = n_sub;
  spec.delta = preset.delta;
  spec.reliabilities = std::move(reliabilities);
  return spec;
}

namespace detail {
inline std::string class_field(int xi, const char* field) {
  return "classes[" + std::to_string(xi - 1) + "]." + field;
}
inline std::string root_field(std::size_t rho, const char* field) {
  return "common_roots[" + std::to_string(rho) + "]." + field;
}
}  // namespace detail

/// Checks every model invariant. Returns the list of violations (empty when valid).
inline std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  const int depth = s.depth();
  const auto& d = s.demand;

  if (depth < 1) out.push_back("hierarchy.levels: depth must be >= 1");
  if (d.k < 1) out.push_back("demand.k: must be >= 1");
  if (d.r < 0) out.push_back("demand.r: must be >= 0");
  if (d.psi < 1) out.push_back("demand.psi: must be >= 1");
  if (s.classes.empty()) out.push_back("classes: at least one reliability class is required");
  if (s.class_count() > std::max(d.n(), 1))
    out.push_back("classes: more classes than sub-SFCs (N > n)");

  long long total = 0;
  for (int xi = 1; xi <= s.class_count(); ++xi) {
    const auto& c = s.cls(xi);
    total += c.n_sub;
    if (c.n_sub < 1) out.push_back(detail::class_field(xi, "n_sub") + ": must be >= 1");
    if (c.depth() != depth) {
      out.push_back(detail::class_field(xi, "epsilon") + ": expected " + std::to_string(depth) +
                    " entries");
      continue;
    }
    if (static_cast<int>(c.reliabilities.size()) != depth) {
      out.push_back(detail::class_field(xi, "reliabilities") + ": expected " +
                    std::to_string(depth) + " entries");
      continue;
    }
    bool counts_ok = true;
    for (int lvl = 1; lvl <= depth; ++lvl)
      if (c.n_at(lvl) < 1) {
        out.push_back(detail::class_field(xi, "epsilon") + ": level " + std::to_string(lvl) +
                      " count must be >= 1");
        counts_ok = false;
      }
    if (counts_ok && c.components_at(depth) != c.n_sub)
      out.push_back(detail::class_field(xi, "epsilon") +
                    ": product of level counts must equal n_sub");
    if (c.delta < 1 || c.delta > depth)
      out.push_back(detail::class_field(xi, "delta") + ": must be in [1, " +
                    std::to_string(depth) + "]");
    for (int lvl = 1; lvl <= depth; ++lvl) {
      const double p = c.p_at(lvl);
      if (!(p >= 0.0 && p <= 1.0))
        out.push_back(detail::class_field(xi, "reliabilities") + ": level " +
                      std::to_string(lvl) + " probability outside [0,1]");
    }
  }
  if (!s.classes.empty() && total != d.n())
    out.push_back("classes: class counts do not cover n (sum of n_sub = " +
                  std::to_string(total) + ", k + r = " + std::to_string(d.n()) + ")");
  if (!out.empty()) return out;

  const auto& roots = s.common_roots;
  for (std::size_t rho = 0; rho < roots.size(); ++rho) {
    const auto& root = roots[rho];
    if (root.level == depth) {
      out.push_back(detail::root_field(rho, "level") + ": VM level cannot be a common root");
      continue;
    }
    if (root.level < 1 || root.level > depth) {
      out.push_back(detail::root_field(rho, "level") + ": must be in [1, " +
                    std::to_string(depth - 1) + "]");
      continue;
    }
    std::vector<int> sorted = root.classes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.push_back(detail::root_field(rho, "classes") + ": duplicate class index");
    if (sorted.size() < 2)
      out.push_back(detail::root_field(rho, "classes") + ": a common root joins at least 2 classes");
    bool indices_ok = true;
    for (int xi : root.classes)
      if (xi < 1 || xi > s.class_count()) {
        out.push_back(detail::root_field(rho, "classes") + ": class index " + std::to_string(xi) +
                      " does not exist");
        indices_ok = false;
      }
    if (!indices_ok) continue;

    const double p_root = s.cls(root.classes.front()).p_at(root.level);
    for (int xi : root.classes) {
      const auto& c = s.cls(xi);
      if (!c.is_shared(root.level))
        out.push_back(detail::root_field(rho, "level") + ": level lies in the disjoint zone of class " +
                      std::to_string(xi));
      for (int lvl = 1; lvl <= root.level; ++lvl)
        if (c.n_at(lvl) != 1) {
          out.push_back(detail::root_field(rho, "classes") + ": class " + std::to_string(xi) +
                        " must have a single component at level " + std::to_string(lvl) +
                        " to sit under the root");
          break;
        }
      if (c.p_at(root.level) != p_root)
        out.push_back(detail::root_field(rho, "classes") +
                      ": member classes disagree on the root-level reliability");
    }

    if (root.level > 1) {
      bool has_parent = false;
      for (const auto& other : roots)
        if (other.level == root.level - 1 && other.covers(root)) has_parent = true;
      if (!has_parent)
        out.push_back(detail::root_field(rho, "level") +
                      ": needs an ancestor root at level " + std::to_string(root.level - 1) +
                      " covering its classes");
    }
    for (std::size_t other = 0; other < roots.size(); ++other) {
      if (other == rho || !root.intersects(roots[other])) continue;
      const auto& o = roots[other];
      const bool nested = is_ancestor_root(o, root) || is_ancestor_root(root, o);
      if (!nested && other > rho)
        out.push_back("common_roots: roots " + std::to_string(rho) + " and " +
                      std::to_string(other) + " share classes but are not nested");
      if (is_ancestor_root(o, root) && other > rho)
        out.push_back(detail::root_field(rho, "level") + ": ancestor root " +
                      std::to_string(other) + " must precede it");
    }
  }
  return out;
}

inline void require_valid(const Scenario& s) {
  auto violations = validate_scenario(s);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace sfcrel
