//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_LEARN_BORUTA_HPP_
#define PATCHEM_LEARN_BORUTA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "patchem/learn/matrix.hpp"

namespace patchem::learn {

enum class FeatureStatus { kConfirmed, kRejected, kTentative };

struct BorutaConfig {
  int max_iter = 100;
  double alpha = 0.05;
  // Forest used per iteration; shallow trees keep importances fast and
  // comparable.
  int n_trees = 64;
  int max_depth = 5;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct BorutaResult {
  std::vector<std::string> feature_names;
  std::vector<FeatureStatus> status;      // aligned to feature_names
  std::vector<int> hit_count;             // importance beat all shadows
  int iterations_run = 0;

  std::vector<std::string> confirmed() const;
  std::vector<std::string> rejected() const;
  std::vector<std::string> tentative() const;
};

// All-relevant feature selection: each iteration appends a shuffled shadow
// copy of every column, trains a forest, and scores a hit when a real
// feature's mean impurity decrease beats the best shadow. A two-sided
// binomial test at `alpha` with Bonferroni correction over features decides
// confirmed/rejected; undecided features stay tentative. Stops early once
// nothing is tentative.
BorutaResult boruta_select(const FeatureMatrix &X, const BorutaConfig &config);

}  // namespace patchem::learn

#endif  // PATCHEM_LEARN_BORUTA_HPP_
