#pragma once

// Explicit component-instance tree used by the exhaustive and Monte-Carlo oracles.
//
// Per class, levels 1..depth-Δ are shared: each component serves one position
// of a sub-SFC for all Ψ VNF types. The remaining Δ levels are replicated once
// per VNF type. A common root replaces the component of its level for every
// member class with one node shared by all of them.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfcrel/model.hpp"

namespace sfcrel {

struct ComponentNode {
  int id = 0;
  int level = 1;
  int xi = 0;        // owning class (1-based), 0 for a common root
  int rho = 0;       // common root index (1-based), 0 otherwise
  int parent = -1;   // node id, -1 for a top-level node
  int vnf_type = 0;  // 1..Ψ on disjoint levels, 0 on shared ones
  int ordinal = 0;   // position among this owner's components of the same level and type
  double p = 1.0;
};

struct ComponentTree {
  std::vector<ComponentNode> nodes;       // parents always precede children
  std::vector<std::vector<int>> vms_by_type;  // [ψ-1] -> VM node ids

  std::size_t size() const { return nodes.size(); }
};

/// Intrinsic up/down draw per node.
struct FailureState {
  std::vector<char> alive;

  static FailureState all_alive(const ComponentTree& tree) {
    return FailureState{std::vector<char>(tree.size(), 1)};
  }
};

/// Alive and every ancestor alive. Relies on parent-before-child ordering.
inline std::vector<char> effective_alive(const ComponentTree& tree, const FailureState& state) {
  std::vector<char> eff(tree.size(), 0);
  for (const auto& node : tree.nodes) {
    const auto id = static_cast<std::size_t>(node.id);
    eff[id] = state.alive[id] &&
              (node.parent < 0 || eff[static_cast<std::size_t>(node.parent)]);
  }
  return eff;
}

inline ComponentTree instantiate_tree(const Scenario& s) {
  require_valid(s);
  const int depth = s.depth();
  const int psi = s.demand.psi;
  ComponentTree tree;
  tree.vms_by_type.resize(static_cast<std::size_t>(psi));

  auto add = [&](ComponentNode node) {
    node.id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(node);
    return node.id;
  };

  std::vector<int> root_node(s.common_roots.size(), -1);
  for (std::size_t rho = 0; rho < s.common_roots.size(); ++rho) {
    const auto& root = s.common_roots[rho];
    int parent = -1;
    for (std::size_t other = 0; other < rho; ++other)
      if (s.common_roots[other].level == root.level - 1 && s.common_roots[other].covers(root))
        parent = root_node[other];
    if (root.level > 1 && parent < 0)
      throw std::invalid_argument("common_roots[" + std::to_string(rho) +
                                  "]: parent root must be listed first");
    ComponentNode node;
    node.level = root.level;
    node.rho = static_cast<int>(rho) + 1;
    node.parent = parent;
    node.p = s.cls(root.classes.front()).p_at(root.level);
    root_node[rho] = add(node);
  }

  for (int xi = 1; xi <= s.class_count(); ++xi) {
    const auto& cls = s.cls(xi);
    // Deepest common root containing xi; its node is the class's attachment point.
    int top = 0;
    int attach = -1;
    for (std::size_t rho = 0; rho < s.common_roots.size(); ++rho) {
      const auto& root = s.common_roots[rho];
      if (root.contains(xi) && root.level > top) {
        top = root.level;
        attach = root_node[rho];
      }
    }
    if (top > cls.last_shared_level())
      throw std::invalid_argument("common root at level " + std::to_string(top) +
                                  " lies in the disjoint zone of class " + std::to_string(xi));

    // Shared levels below the roots.
    std::vector<int> frontier{attach};
    for (int c = top + 1; c <= cls.last_shared_level(); ++c) {
      std::vector<int> next;
      int ordinal = 0;
      for (int parent : frontier)
        for (int j = 0; j < cls.n_at(c); ++j) {
          ComponentNode node;
          node.level = c;
          node.xi = xi;
          node.parent = parent;
          node.ordinal = ordinal++;
          node.p = cls.p_at(c);
          next.push_back(add(node));
        }
      frontier = std::move(next);
    }

    // Disjoint levels, once per VNF type.
    for (int type = 1; type <= psi; ++type) {
      std::vector<int> branch = frontier;
      for (int c = cls.last_shared_level() + 1; c <= depth; ++c) {
        std::vector<int> next;
        int ordinal = 0;
        for (int parent : branch)
          for (int j = 0; j < cls.n_at(c); ++j) {
            ComponentNode node;
            node.level = c;
            node.xi = xi;
            node.parent = parent;
            node.vnf_type = type;
            node.ordinal = ordinal++;
            node.p = cls.p_at(c);
            next.push_back(add(node));
          }
        branch = std::move(next);
      }
      auto& vms = tree.vms_by_type[static_cast<std::size_t>(type - 1)];
      vms.insert(vms.end(), branch.begin(), branch.end());
    }
  }
  return tree;
}

/// At least k effective-alive VMs of every VNF type.
inline bool service_success(const ComponentTree& tree, const std::vector<char>& effective,
                            const ServiceDemand& demand) {
  for (const auto& vms : tree.vms_by_type) {
    int up = 0;
    for (int id : vms) up += effective[static_cast<std::size_t>(id)] ? 1 : 0;
    if (up < demand.k) return false;
  }
  return true;
}

inline bool service_success(const ComponentTree& tree, const FailureState& state,
                            const ServiceDemand& demand) {
  return service_success(tree, effective_alive(tree, state), demand);
}

}  // namespace sfcrel
