//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/learn/trees.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "patchem/support/errors.hpp"
#include "patchem/support/hash.hpp"
#include "patchem/support/parallel.hpp"

namespace patchem::learn {

namespace {

constexpr double kMinGain = 1e-12;

void require_labels(const FeatureMatrix &X) {
  if (!X.has_labels()) {
    throw DegenerateLabelsError("training requires labeled rows");
  }
  if (X.rows() == 0) {
    throw DegenerateLabelsError("training requires at least one row");
  }
}

// Column positions of `wanted` inside X, or ColumnMismatchError naming the
// missing/extra columns.
std::vector<int> map_columns(const std::vector<std::string> &wanted,
                             const FeatureMatrix &X) {
  std::vector<int> mapping;
  std::vector<std::string> missing;
  mapping.reserve(wanted.size());
  for (const std::string &name : wanted) {
    int idx = X.column_index(name);
    if (idx < 0) {
      missing.push_back(name);
    }
    mapping.push_back(idx);
  }
  std::vector<std::string> extra;
  std::set<std::string> wanted_set(wanted.begin(), wanted.end());
  for (const std::string &name : X.columns()) {
    if (!wanted_set.count(name)) {
      extra.push_back(name);
    }
  }
  if (!missing.empty() || !extra.empty()) {
    throw ColumnMismatchError(missing, extra);
  }
  return mapping;
}

double traverse(const Tree &tree, const FeatureMatrix &X, std::size_t row,
                const std::vector<int> &mapping) {
  int node = 0;
  while (tree.nodes[static_cast<std::size_t>(node)].feature >= 0) {
    const TreeNode &n = tree.nodes[static_cast<std::size_t>(node)];
    double v = X.at(row, static_cast<std::size_t>(
                             mapping[static_cast<std::size_t>(n.feature)]));
    node = v <= n.threshold ? n.left : n.right;
  }
  return tree.nodes[static_cast<std::size_t>(node)].value;
}

// ---- Gini-split classification tree (forest unit) -------------------------

class GiniGrower {
 public:
  GiniGrower(const FeatureMatrix &X, const std::vector<int> &y,
             const ForestParams &params, std::mt19937_64 &rng,
             std::vector<double> &importance)
      : x_(X), y_(y), params_(params), rng_(rng), importance_(importance) {
    feature_pool_.resize(x_.cols());
    for (std::size_t f = 0; f < x_.cols(); ++f) {
      feature_pool_[f] = static_cast<int>(f);
    }
  }

  Tree grow_bootstrap() {
    std::vector<int> idx(x_.rows());
    for (std::size_t k = 0; k < x_.rows(); ++k) {
      idx[k] = params_.bootstrap ? static_cast<int>(rng_() % x_.rows())
                                 : static_cast<int>(k);
    }
    n_tree_rows_ = static_cast<double>(idx.size());
    Tree tree;
    grow(tree, idx, 0, static_cast<int>(idx.size()), 0);
    return tree;
  }

 private:
  const FeatureMatrix &x_;
  const std::vector<int> &y_;
  ForestParams params_;
  std::mt19937_64 &rng_;
  std::vector<double> &importance_;
  std::vector<int> feature_pool_;
  std::vector<std::pair<double, int>> scratch_;
  double n_tree_rows_ = 0.0;

  static double impurity(double c1, double n) {
    // n * gini, so decreases add linearly.
    if (n <= 0.0) {
      return 0.0;
    }
    double c0 = n - c1;
    return n - (c0 * c0 + c1 * c1) / n;
  }

  int grow(Tree &tree, std::vector<int> &idx, int begin, int end, int depth) {
    const int m = end - begin;
    double c1 = 0;
    for (int k = begin; k < end; ++k) {
      c1 += y_[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    }
    int node_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({});
    TreeNode &placeholder = tree.nodes.back();
    placeholder.value = c1 / m;

    bool depth_ok = params_.max_depth <= 0 || depth < params_.max_depth;
    if (!depth_ok || c1 == 0 || c1 == m || m < 2 * params_.min_leaf) {
      return node_id;
    }

    // mtry features via partial Fisher-Yates over the persistent pool.
    int p = static_cast<int>(x_.cols());
    int mtry = std::min(params_.mtry > 0
                            ? params_.mtry
                            : std::max(1, static_cast<int>(std::sqrt(
                                              static_cast<double>(p)))),
                        p);
    for (int i = 0; i < mtry; ++i) {
      int j = i + static_cast<int>(rng_() % static_cast<unsigned>(p - i));
      std::swap(feature_pool_[static_cast<std::size_t>(i)],
                feature_pool_[static_cast<std::size_t>(j)]);
    }

    const double node_imp = impurity(c1, m);
    int best_feature = -1;
    double best_threshold = 0.0;
    double best_decrease = kMinGain;
    for (int fi = 0; fi < mtry; ++fi) {
      int f = feature_pool_[static_cast<std::size_t>(fi)];
      scratch_.clear();
      for (int k = begin; k < end; ++k) {
        int r = idx[static_cast<std::size_t>(k)];
        scratch_.emplace_back(
            x_.at(static_cast<std::size_t>(r), static_cast<std::size_t>(f)),
            y_[static_cast<std::size_t>(r)]);
      }
      std::sort(scratch_.begin(), scratch_.end());
      double left1 = 0;
      for (int k = 1; k < m; ++k) {
        left1 += scratch_[static_cast<std::size_t>(k - 1)].second;
        if (scratch_[static_cast<std::size_t>(k)].first ==
            scratch_[static_cast<std::size_t>(k - 1)].first) {
          continue;
        }
        if (k < params_.min_leaf || m - k < params_.min_leaf) {
          continue;
        }
        double decrease =
            node_imp - impurity(left1, k) - impurity(c1 - left1, m - k);
        if (decrease > best_decrease) {
          best_decrease = decrease;
          best_feature = f;
          best_threshold = (scratch_[static_cast<std::size_t>(k)].first +
                            scratch_[static_cast<std::size_t>(k - 1)].first) /
                           2.0;
        }
      }
    }
    if (best_feature < 0) {
      return node_id;
    }

    importance_[static_cast<std::size_t>(best_feature)] +=
        best_decrease / n_tree_rows_;

    auto mid_it = std::stable_partition(
        idx.begin() + begin, idx.begin() + end, [&](int r) {
          return x_.at(static_cast<std::size_t>(r),
                       static_cast<std::size_t>(best_feature)) <=
                 best_threshold;
        });
    int mid = static_cast<int>(mid_it - idx.begin());
    int left = grow(tree, idx, begin, mid, depth + 1);
    int right = grow(tree, idx, mid, end, depth + 1);
    TreeNode &node = tree.nodes[static_cast<std::size_t>(node_id)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left;
    node.right = right;
    return node_id;
  }
};

// ---- Newton boosting tree --------------------------------------------------

class NewtonGrower {
 public:
  NewtonGrower(const FeatureMatrix &X, const std::vector<double> &grad,
               const std::vector<double> &hess, const BoostParams &params)
      : x_(X), grad_(grad), hess_(hess), params_(params) {}

  Tree grow_full() {
    std::vector<int> idx(x_.rows());
    for (std::size_t k = 0; k < x_.rows(); ++k) {
      idx[k] = static_cast<int>(k);
    }
    Tree tree;
    grow(tree, idx, 0, static_cast<int>(idx.size()), 0);
    return tree;
  }

 private:
  const FeatureMatrix &x_;
  const std::vector<double> &grad_;
  const std::vector<double> &hess_;
  BoostParams params_;
  struct Entry {
    double value;
    double g;
    double h;
  };
  std::vector<Entry> scratch_;

  static double leaf_objective(double g, double h, double lambda) {
    return g * g / (h + lambda);
  }

  int grow(Tree &tree, std::vector<int> &idx, int begin, int end, int depth) {
    const int m = end - begin;
    double g_sum = 0.0, h_sum = 0.0;
    for (int k = begin; k < end; ++k) {
      int r = idx[static_cast<std::size_t>(k)];
      g_sum += grad_[static_cast<std::size_t>(r)];
      h_sum += hess_[static_cast<std::size_t>(r)];
    }
    int node_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({});
    tree.nodes.back().value =
        -g_sum / (h_sum + params_.lambda) * params_.learning_rate;

    if (depth >= params_.max_depth || m < 2 * params_.min_leaf) {
      return node_id;
    }

    const double parent_obj = leaf_objective(g_sum, h_sum, params_.lambda);
    int best_feature = -1;
    double best_threshold = 0.0;
    double best_gain = kMinGain;
    for (std::size_t f = 0; f < x_.cols(); ++f) {
      scratch_.clear();
      for (int k = begin; k < end; ++k) {
        int r = idx[static_cast<std::size_t>(k)];
        scratch_.push_back({x_.at(static_cast<std::size_t>(r), f),
                            grad_[static_cast<std::size_t>(r)],
                            hess_[static_cast<std::size_t>(r)]});
      }
      std::sort(scratch_.begin(), scratch_.end(),
                [](const Entry &a, const Entry &b) {
                  return a.value < b.value;
                });
      double gl = 0.0, hl = 0.0;
      for (int k = 1; k < m; ++k) {
        gl += scratch_[static_cast<std::size_t>(k - 1)].g;
        hl += scratch_[static_cast<std::size_t>(k - 1)].h;
        if (scratch_[static_cast<std::size_t>(k)].value ==
            scratch_[static_cast<std::size_t>(k - 1)].value) {
          continue;
        }
        if (k < params_.min_leaf || m - k < params_.min_leaf) {
          continue;
        }
        double gain = 0.5 * (leaf_objective(gl, hl, params_.lambda) +
                             leaf_objective(g_sum - gl, h_sum - hl,
                                            params_.lambda) -
                             parent_obj);
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = (scratch_[static_cast<std::size_t>(k)].value +
                            scratch_[static_cast<std::size_t>(k - 1)].value) /
                           2.0;
        }
      }
    }
    if (best_feature < 0) {
      return node_id;
    }
    auto mid_it = std::stable_partition(
        idx.begin() + begin, idx.begin() + end, [&](int r) {
          return x_.at(static_cast<std::size_t>(r),
                       static_cast<std::size_t>(best_feature)) <=
                 best_threshold;
        });
    int mid = static_cast<int>(mid_it - idx.begin());
    int left = grow(tree, idx, begin, mid, depth + 1);
    int right = grow(tree, idx, mid, end, depth + 1);
    TreeNode &node = tree.nodes[static_cast<std::size_t>(node_id)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left;
    node.right = right;
    return node_id;
  }
};

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

BoostedModel train_boosted_impl(const FeatureMatrix &X,
                                const BoostParams &params,
                                std::vector<double> *loss_trace) {
  require_labels(X);
  const std::vector<int> &y = X.labels();
  const std::size_t n = X.rows();

  double positives = 0;
  for (int label : y) {
    positives += label;
  }
  double prior = positives / static_cast<double>(n);
  // Clamp so single-class data keeps finite scores.
  prior = std::min(1.0 - 1e-12, std::max(1e-12, prior));

  BoostedModel model;
  model.columns = X.columns();
  model.params = params;
  model.base_score = std::log(prior / (1.0 - prior));

  std::vector<double> score(n, model.base_score);
  std::vector<double> grad(n), hess(n);
  auto record_loss = [&] {
    if (loss_trace == nullptr) {
      return;
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double p = std::min(1.0 - 1e-15, std::max(1e-15, sigmoid(score[i])));
      loss -= y[i] ? std::log(p) : std::log(1.0 - p);
    }
    loss_trace->push_back(loss / static_cast<double>(n));
  };
  record_loss();

  for (int round = 0; round < params.rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      double p = sigmoid(score[i]);
      grad[i] = p - y[i];
      hess[i] = p * (1.0 - p);
    }
    NewtonGrower grower(X, grad, hess, params);
    Tree tree = grower.grow_full();
    for (std::size_t i = 0; i < n; ++i) {
      score[i] += tree.predict(X.row(i));
    }
    model.trees.push_back(std::move(tree));
    record_loss();
  }
  return model;
}

}  // namespace

double Tree::predict(std::span<const double> row) const {
  int node = 0;
  while (nodes[static_cast<std::size_t>(node)].feature >= 0) {
    const TreeNode &n = nodes[static_cast<std::size_t>(node)];
    node = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                   : n.right;
  }
  return nodes[static_cast<std::size_t>(node)].value;
}

ForestModel train_forest(const FeatureMatrix &X, const ForestParams &params,
                         unsigned workers) {
  require_labels(X);
  if (params.n_trees <= 0) {
    throw Error("n_trees must be positive");
  }
  ForestModel model;
  model.columns = X.columns();
  model.params = params;
  model.trees.resize(static_cast<std::size_t>(params.n_trees));

  std::vector<std::vector<double>> importances(
      static_cast<std::size_t>(params.n_trees),
      std::vector<double>(X.cols(), 0.0));
  parallel_for(static_cast<std::size_t>(params.n_trees), workers,
               [&](std::size_t t) {
                 std::mt19937_64 rng(derive_seed(params.seed, t));
                 GiniGrower grower(X, X.labels(), params, rng,
                                   importances[t]);
                 model.trees[t] = grower.grow_bootstrap();
               });
  model.importance.assign(X.cols(), 0.0);
  for (const auto &imp : importances) {
    for (std::size_t f = 0; f < imp.size(); ++f) {
      model.importance[f] += imp[f];
    }
  }
  for (double &v : model.importance) {
    v /= params.n_trees;
  }
  return model;
}

BoostedModel train_boosted(const FeatureMatrix &X, const BoostParams &params) {
  return train_boosted_impl(X, params, nullptr);
}

std::vector<double> boosted_training_loss(const FeatureMatrix &X,
                                          const BoostParams &params) {
  std::vector<double> trace;
  train_boosted_impl(X, params, &trace);
  return trace;
}

std::vector<double> predict_proba(const ForestModel &model,
                                  const FeatureMatrix &X) {
  std::vector<int> mapping = map_columns(model.columns, X);
  std::vector<double> out(X.rows(), 0.0);
  for (std::size_t r = 0; r < X.rows(); ++r) {
    double acc = 0.0;
    for (const Tree &tree : model.trees) {
      acc += traverse(tree, X, r, mapping);
    }
    out[r] = acc / static_cast<double>(model.trees.size());
  }
  return out;
}

std::vector<double> predict_proba(const BoostedModel &model,
                                  const FeatureMatrix &X) {
  std::vector<int> mapping = map_columns(model.columns, X);
  std::vector<double> out(X.rows(), 0.0);
  for (std::size_t r = 0; r < X.rows(); ++r) {
    double score = model.base_score;
    for (const Tree &tree : model.trees) {
      score += traverse(tree, X, r, mapping);
    }
    out[r] = sigmoid(score);
  }
  return out;
}

}  // namespace patchem::learn
