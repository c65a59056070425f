//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_LEARN_TREES_HPP_
#define PATCHEM_LEARN_TREES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patchem/learn/matrix.hpp"

namespace patchem::learn {

// Flat binary tree. Internal nodes test row[feature] <= threshold; leaves
// carry feature == -1 and a value (class-1 fraction for forests, additive
// score for boosting).
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;
};

struct Tree {
  std::vector<TreeNode> nodes;

  double predict(std::span<const double> row) const;
};

struct ForestParams {
  int n_trees = 500;
  int mtry = 0;  // 0: floor(sqrt(p))
  int max_depth = 0;  // 0: unlimited
  int min_leaf = 1;
  bool bootstrap = true;
  std::uint64_t seed = 0;
};

struct ForestModel {
  std::vector<std::string> columns;
  std::vector<Tree> trees;
  ForestParams params;
  // Mean impurity decrease per feature, averaged over trees.
  std::vector<double> importance;
};

// Bagged Gini-split trees over mtry-sampled features. Per-tree generators
// derive from (seed, tree index), so any thread count reproduces the same
// model bit for bit.
ForestModel train_forest(const FeatureMatrix &X, const ForestParams &params,
                         unsigned workers = 1);

struct BoostParams {
  int rounds = 200;
  double learning_rate = 0.1;
  int max_depth = 6;
  double lambda = 1.0;  // L2 on leaf values
  int min_leaf = 1;
  std::uint64_t seed = 0;
};

struct BoostedModel {
  std::vector<std::string> columns;
  std::vector<Tree> trees;  // leaf values already scaled by learning rate
  BoostParams params;
  double base_score = 0.0;  // prior log-odds
};

// Second-order (Newton) boosting on logistic loss with exact greedy splits;
// round-t tree fits the gradient/hessian of the current prediction and each
// leaf takes -G/(H+lambda).
BoostedModel train_boosted(const FeatureMatrix &X, const BoostParams &params);

std::vector<double> predict_proba(const ForestModel &model,
                                  const FeatureMatrix &X);
std::vector<double> predict_proba(const BoostedModel &model,
                                  const FeatureMatrix &X);

// Per-round training log-loss trace, for convergence monitoring.
std::vector<double> boosted_training_loss(const FeatureMatrix &X,
                                          const BoostParams &params);

}  // namespace patchem::learn

#endif  // PATCHEM_LEARN_TREES_HPP_
