//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/learn/ensemble.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "patchem/support/errors.hpp"

namespace patchem::learn {

namespace {

using nlohmann::json;

json tree_to_json(const Tree &tree) {
  json node_feature = json::array();
  json node_threshold = json::array();
  json node_left = json::array();
  json node_right = json::array();
  json node_value = json::array();
  for (const TreeNode &n : tree.nodes) {
    node_feature.push_back(n.feature);
    node_threshold.push_back(n.threshold);
    node_left.push_back(n.left);
    node_right.push_back(n.right);
    node_value.push_back(n.value);
  }
  return json{{"feature", node_feature},
              {"threshold", node_threshold},
              {"left", node_left},
              {"right", node_right},
              {"value", node_value}};
}

Tree tree_from_json(const json &j) {
  Tree tree;
  const auto &feature = j.at("feature");
  const auto &threshold = j.at("threshold");
  const auto &left = j.at("left");
  const auto &right = j.at("right");
  const auto &value = j.at("value");
  for (std::size_t i = 0; i < feature.size(); ++i) {
    TreeNode n;
    n.feature = feature[i].get<int>();
    n.threshold = threshold[i].get<double>();
    n.left = left[i].get<int>();
    n.right = right[i].get<int>();
    n.value = value[i].get<double>();
    tree.nodes.push_back(n);
  }
  return tree;
}

json trees_to_json(const std::vector<Tree> &trees) {
  json out = json::array();
  for (const Tree &t : trees) {
    out.push_back(tree_to_json(t));
  }
  return out;
}

std::vector<Tree> trees_from_json(const json &j) {
  std::vector<Tree> out;
  for (const auto &t : j) {
    out.push_back(tree_from_json(t));
  }
  return out;
}

}  // namespace

void EnsembleModel::normalize_weights() {
  if (weight_forest < 0.0 || weight_boosted < 0.0) {
    throw Error("ensemble weights must be non-negative");
  }
  double sum = weight_forest + weight_boosted;
  if (sum <= 0.0) {
    throw Error("ensemble weights must not both be zero");
  }
  weight_forest /= sum;
  weight_boosted /= sum;
}

std::vector<double> predict_proba(const EnsembleModel &model,
                                  const FeatureMatrix &X) {
  std::vector<double> pf = predict_proba(model.forest, X);
  std::vector<double> pb = predict_proba(model.boosted, X);
  std::vector<double> out(X.rows());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = model.weight_forest * pf[i] + model.weight_boosted * pb[i];
  }
  return out;
}

std::string model_to_json(const EnsembleModel &model) {
  json doc;
  doc["schema_version"] = kModelSchemaVersion;
  doc["feature_columns"] = model.forest.columns;
  doc["forest"] = json{{"n_trees", model.forest.params.n_trees},
                       {"mtry", model.forest.params.mtry},
                       {"max_depth", model.forest.params.max_depth},
                       {"min_leaf", model.forest.params.min_leaf},
                       {"bootstrap", model.forest.params.bootstrap},
                       {"seed", model.forest.params.seed},
                       {"importance", model.forest.importance},
                       {"trees", trees_to_json(model.forest.trees)}};
  doc["boosted"] = json{{"rounds", model.boosted.params.rounds},
                        {"learning_rate", model.boosted.params.learning_rate},
                        {"max_depth", model.boosted.params.max_depth},
                        {"lambda", model.boosted.params.lambda},
                        {"min_leaf", model.boosted.params.min_leaf},
                        {"seed", model.boosted.params.seed},
                        {"base_score", model.boosted.base_score},
                        {"trees", trees_to_json(model.boosted.trees)}};
  doc["weights"] =
      json{{"forest", model.weight_forest}, {"boosted", model.weight_boosted}};
  doc["seed"] = model.seed;
  doc["training_metadata"] = model.training_metadata;
  return doc.dump(2);
}

EnsembleModel model_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(std::string("model artifact is not valid JSON: ") + e.what());
  }
  if (!doc.contains("schema_version") ||
      !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kModelSchemaVersion) {
    throw SchemaVersionError("unsupported model schema_version");
  }
  try {
    EnsembleModel model;
    std::vector<std::string> columns =
        doc.at("feature_columns").get<std::vector<std::string>>();

    const json &forest = doc.at("forest");
    model.forest.columns = columns;
    model.forest.params.n_trees = forest.at("n_trees").get<int>();
    model.forest.params.mtry = forest.at("mtry").get<int>();
    model.forest.params.max_depth = forest.at("max_depth").get<int>();
    model.forest.params.min_leaf = forest.at("min_leaf").get<int>();
    model.forest.params.bootstrap = forest.at("bootstrap").get<bool>();
    model.forest.params.seed = forest.at("seed").get<std::uint64_t>();
    model.forest.importance =
        forest.at("importance").get<std::vector<double>>();
    model.forest.trees = trees_from_json(forest.at("trees"));

    const json &boosted = doc.at("boosted");
    model.boosted.columns = columns;
    model.boosted.params.rounds = boosted.at("rounds").get<int>();
    model.boosted.params.learning_rate =
        boosted.at("learning_rate").get<double>();
    model.boosted.params.max_depth = boosted.at("max_depth").get<int>();
    model.boosted.params.lambda = boosted.at("lambda").get<double>();
    model.boosted.params.min_leaf = boosted.at("min_leaf").get<int>();
    model.boosted.params.seed = boosted.at("seed").get<std::uint64_t>();
    model.boosted.base_score = boosted.at("base_score").get<double>();
    model.boosted.trees = trees_from_json(boosted.at("trees"));

    model.weight_forest = doc.at("weights").at("forest").get<double>();
    model.weight_boosted = doc.at("weights").at("boosted").get<double>();
    model.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("training_metadata")) {
      model.training_metadata =
          doc["training_metadata"].get<std::map<std::string, std::string>>();
    }
    model.normalize_weights();
    return model;
  } catch (const json::exception &e) {
    throw Error(std::string("malformed model artifact: ") + e.what());
  }
}

void save_model(const EnsembleModel &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write model artifact: " + path);
  }
  out << model_to_json(model) << "\n";
}

EnsembleModel load_model(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read model artifact: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace patchem::learn
