#pragma once

// Percentile substitution on node-weighted trees.
//
// Every node carries a multiset of weights. T^(rho) replaces each node's
// weights by the top-rho percentile of all weights in its subtree, and
//   rho * cost(T^(rho)) <= Q(rho | T) <= cost(T)
// where Q(rho | T) is the area under the top rho fraction of the ascending
// weight histogram.

#include <cstdint>
#include <random>
#include <vector>

#include "pandora/model.hpp"
#include "pandora/solver.hpp"

namespace pandora {

struct WeightedTree {
  struct Node {
    std::vector<double> weights;
    std::vector<std::size_t> children;
  };
  /// nodes[0] is the root.
  std::vector<Node> nodes;

  /// Single root, every node reachable exactly once, at least one
  /// non-negative weight per node.
  bool well_formed() const;
};

/// All weights in the subtree rooted at `node`, preorder. Throws Error on an
/// unknown node.
std::vector<double> subtree_weights(const WeightedTree& tree, std::size_t node);

/// Sorted descending, the element at 1-based rank ceil(rho |W|): the
/// smallest weight still inside the top rho fraction. Throws Error on an
/// empty multiset or rho outside (0, 1].
double top_percentile(std::vector<double> weights, double rho);

/// cost(T^(rho)) = sum_u |w_u| * q^rho(subtree(u)).
double percentile_tree_cost(const WeightedTree& tree, double rho);

/// Integral of the ascending unit-width step histogram of `weights` over
/// [(1 - rho)|W|, |W|], partial steps counted proportionally.
double quantile_area(std::vector<double> weights, double rho);

double tree_cost(const WeightedTree& tree);

struct LemmaCheck {
  double lhs = 0.0;  // rho * cost(T^(rho))
  double mid = 0.0;  // Q(rho | T)
  double rhs = 0.0;  // cost(T)
  bool holds = false;
};

LemmaCheck lemma_check(const WeightedTree& tree, double rho);

struct RandomTreeOptions {
  std::size_t max_nodes = 50;
  std::size_t max_weights = 5;
  double max_weight = 10.0;
};

/// Random recursive tree: node i > 0 attaches to a uniformly chosen earlier
/// node; weights are U[0, max_weight].
WeightedTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& options = {});

/// Policy tree with node u weighted by sigma_u repeated |A_u| times.
WeightedTree weighted_tree_from_policy(const PolicyTree& tree);

}  // namespace pandora
