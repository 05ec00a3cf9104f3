#include "pandora/tree_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pandora {

namespace {

void check_rho(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw Error("rho must lie in (0, 1]");
}

void check_nonempty(const std::vector<double>& weights) {
  if (weights.empty()) throw Error("empty weight multiset");
}

}  // namespace

bool WeightedTree::well_formed() const {
  if (nodes.empty()) return false;
  std::vector<int> seen(nodes.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t c : nodes[u].children) {
      if (c >= nodes.size() || seen[c]++) return false;
      stack.push_back(c);
    }
  }
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    if (!seen[u] || nodes[u].weights.empty()) return false;
    for (double w : nodes[u].weights) {
      if (!(w >= 0.0) || !is_finite(w)) return false;
    }
  }
  return true;
}

std::vector<double> subtree_weights(const WeightedTree& tree, std::size_t node) {
  if (node >= tree.nodes.size()) throw Error("unknown node " + std::to_string(node));
  std::vector<double> out;
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    const auto& n = tree.nodes[u];
    out.insert(out.end(), n.weights.begin(), n.weights.end());
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

double top_percentile(std::vector<double> weights, double rho) {
  check_nonempty(weights);
  check_rho(rho);
  const auto size = static_cast<double>(weights.size());
  // rho * |W| may land a rounding error above an integer (0.3 * 10).
  auto rank = static_cast<std::size_t>(std::ceil(rho * size - kTolerance));
  rank = std::clamp<std::size_t>(rank, 1, weights.size());
  std::nth_element(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                   weights.end(), std::greater<>());
  return weights[rank - 1];
}

double quantile_area(std::vector<double> weights, double rho) {
  check_nonempty(weights);
  check_rho(rho);
  std::sort(weights.begin(), weights.end());
  const auto size = static_cast<double>(weights.size());
  const double from = (1.0 - rho) * size;
  double area = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double left = std::max(static_cast<double>(i), from);
    const double right = static_cast<double>(i + 1);
    if (right > left) area += (right - left) * weights[i];
  }
  return area;
}

double percentile_tree_cost(const WeightedTree& tree, double rho) {
  check_rho(rho);
  double cost = 0.0;
  for (std::size_t u = 0; u < tree.nodes.size(); ++u) {
    const auto count = static_cast<double>(tree.nodes[u].weights.size());
    cost += count * top_percentile(subtree_weights(tree, u), rho);
  }
  return cost;
}

double tree_cost(const WeightedTree& tree) {
  double cost = 0.0;
  for (const auto& n : tree.nodes) {
    for (double w : n.weights) cost += w;
  }
  return cost;
}

LemmaCheck lemma_check(const WeightedTree& tree, double rho) {
  LemmaCheck out;
  out.lhs = rho * percentile_tree_cost(tree, rho);
  out.mid = quantile_area(subtree_weights(tree, 0), rho);
  out.rhs = tree_cost(tree);
  out.holds = out.lhs <= out.mid + kTolerance && out.mid <= out.rhs + kTolerance;
  return out;
}

WeightedTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& options) {
  std::uniform_int_distribution<std::size_t> node_count(1, std::max<std::size_t>(1, options.max_nodes));
  std::uniform_int_distribution<std::size_t> weight_count(1, std::max<std::size_t>(1, options.max_weights));
  std::uniform_real_distribution<double> weight(0.0, options.max_weight);

  WeightedTree tree;
  tree.nodes.resize(node_count(rng));
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (i > 0) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      tree.nodes[parent(rng)].children.push_back(i);
    }
    const std::size_t k = weight_count(rng);
    for (std::size_t j = 0; j < k; ++j) tree.nodes[i].weights.push_back(weight(rng));
  }
  return tree;
}

WeightedTree weighted_tree_from_policy(const PolicyTree& policy) {
  WeightedTree tree;
  tree.nodes.resize(policy.nodes.size());
  for (std::size_t u = 0; u < policy.nodes.size(); ++u) {
    const PolicyNode& p = policy.nodes[u];
    tree.nodes[u].weights.assign(p.covered.size(), p.sigma);
    for (const auto& [value, child] : p.children) tree.nodes[u].children.push_back(child);
  }
  return tree;
}

}  // namespace pandora
