//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_LEARN_ENSEMBLE_HPP_
#define PATCHEM_LEARN_ENSEMBLE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "patchem/learn/trees.hpp"

namespace patchem::learn {

inline constexpr int kModelSchemaVersion = 1;

// Forest + boosted pair blended by normalized convex weights.
struct EnsembleModel {
  ForestModel forest;
  BoostedModel boosted;
  double weight_forest = 0.5;
  double weight_boosted = 0.5;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> training_metadata;

  // Rescales the pair to sum to one; rejects negatives.
  void normalize_weights();
};

std::vector<double> predict_proba(const EnsembleModel &model,
                                  const FeatureMatrix &X);

// Versioned JSON document: {schema_version, feature_columns, forest{...},
// boosted{...}, weights, seed, training_metadata}. Serialization is
// deterministic; loading any other schema_version raises SchemaVersionError.
std::string model_to_json(const EnsembleModel &model);
EnsembleModel model_from_json(const std::string &text);

void save_model(const EnsembleModel &model, const std::string &path);
EnsembleModel load_model(const std::string &path);

}  // namespace patchem::learn

#endif  // PATCHEM_LEARN_ENSEMBLE_HPP_
