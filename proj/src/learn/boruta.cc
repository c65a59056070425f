//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/learn/boruta.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "patchem/learn/trees.hpp"
#include "patchem/support/errors.hpp"
#include "patchem/support/hash.hpp"

namespace patchem::learn {

namespace {

// P(Binomial(n, 1/2) >= k), exact via log factorials.
double binomial_upper_tail(int n, int k) {
  if (k <= 0) {
    return 1.0;
  }
  if (k > n) {
    return 0.0;
  }
  double log_half_n = n * std::log(0.5);
  double total = 0.0;
  for (int i = k; i <= n; ++i) {
    double log_comb = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                      std::lgamma(n - i + 1.0);
    total += std::exp(log_comb + log_half_n);
  }
  return std::min(1.0, total);
}

std::vector<FeatureStatus> classify(const std::vector<int> &hits,
                                    int iterations, double alpha,
                                    std::size_t n_features) {
  std::vector<FeatureStatus> status(hits.size(), FeatureStatus::kTentative);
  for (std::size_t f = 0; f < hits.size(); ++f) {
    double p_hi = binomial_upper_tail(iterations, hits[f]);
    double p_lo = 1.0 - binomial_upper_tail(iterations, hits[f] + 1);
    double two_sided = 2.0 * std::min(p_hi, p_lo);
    double adjusted = two_sided * static_cast<double>(n_features);
    if (adjusted < alpha) {
      status[f] = 2 * hits[f] > iterations ? FeatureStatus::kConfirmed
                                           : FeatureStatus::kRejected;
    }
  }
  return status;
}

}  // namespace

std::vector<std::string> BorutaResult::confirmed() const {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < status.size(); ++f) {
    if (status[f] == FeatureStatus::kConfirmed) {
      out.push_back(feature_names[f]);
    }
  }
  return out;
}

std::vector<std::string> BorutaResult::rejected() const {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < status.size(); ++f) {
    if (status[f] == FeatureStatus::kRejected) {
      out.push_back(feature_names[f]);
    }
  }
  return out;
}

std::vector<std::string> BorutaResult::tentative() const {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < status.size(); ++f) {
    if (status[f] == FeatureStatus::kTentative) {
      out.push_back(feature_names[f]);
    }
  }
  return out;
}

BorutaResult boruta_select(const FeatureMatrix &X, const BorutaConfig &config) {
  if (!X.has_labels()) {
    throw DegenerateLabelsError("feature selection requires labels");
  }
  if (X.rows() < 20) {
    throw TooFewRowsError("feature selection needs at least 20 rows, got " +
                          std::to_string(X.rows()));
  }
  {
    int positives = 0;
    for (int y : X.labels()) {
      positives += y;
    }
    if (positives == 0 || positives == static_cast<int>(X.rows())) {
      throw DegenerateLabelsError("both classes must be present");
    }
  }

  const std::size_t p = X.cols();
  const std::size_t n = X.rows();

  BorutaResult result;
  result.feature_names = X.columns();
  result.hit_count.assign(p, 0);

  // Column layout of the augmented matrix: real features, then one shadow
  // per real feature. Shadow names never leak into the result.
  std::vector<std::string> aug_names = X.columns();
  for (const std::string &name : X.columns()) {
    aug_names.push_back("__shadow__" + name);
  }

  for (int iter = 0; iter < config.max_iter; ++iter) {
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(iter)));

    // Shuffled row order per shadow column.
    std::vector<std::vector<int>> shadow_perm(p);
    for (std::size_t f = 0; f < p; ++f) {
      shadow_perm[f].resize(n);
      for (std::size_t r = 0; r < n; ++r) {
        shadow_perm[f][r] = static_cast<int>(r);
      }
      std::shuffle(shadow_perm[f].begin(), shadow_perm[f].end(), rng);
    }

    FeatureMatrix augmented(aug_names);
    std::vector<double> row_buffer(2 * p);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t f = 0; f < p; ++f) {
        row_buffer[f] = X.at(r, f);
        row_buffer[p + f] =
            X.at(static_cast<std::size_t>(shadow_perm[f][r]), f);
      }
      augmented.add_row(row_buffer);
    }
    augmented.set_labels(X.labels());

    ForestParams forest_params;
    forest_params.n_trees = config.n_trees;
    forest_params.max_depth = config.max_depth;
    forest_params.seed = rng();
    ForestModel forest = train_forest(augmented, forest_params,
                                      config.workers);

    double max_shadow = 0.0;
    for (std::size_t f = 0; f < p; ++f) {
      max_shadow = std::max(max_shadow, forest.importance[p + f]);
    }
    for (std::size_t f = 0; f < p; ++f) {
      if (forest.importance[f] > max_shadow) {
        ++result.hit_count[f];
      }
    }
    result.iterations_run = iter + 1;

    if (result.iterations_run >= 10) {
      auto status = classify(result.hit_count, result.iterations_run,
                             config.alpha, p);
      if (std::none_of(status.begin(), status.end(), [](FeatureStatus s) {
            return s == FeatureStatus::kTentative;
          })) {
        result.status = std::move(status);
        return result;
      }
    }
  }
  result.status = classify(result.hit_count, result.iterations_run,
                           config.alpha, p);
  return result;
}

}  // namespace patchem::learn
