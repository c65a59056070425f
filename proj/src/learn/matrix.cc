//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/learn/matrix.hpp"

#include <cmath>
#include <set>

#include "patchem/support/errors.hpp"

namespace patchem::learn {

FeatureMatrix::FeatureMatrix(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw Error("feature matrix needs at least one column");
  }
  std::set<std::string> unique(columns_.begin(), columns_.end());
  if (unique.size() != columns_.size()) {
    throw Error("duplicate feature column names");
  }
}

void FeatureMatrix::add_row(std::span<const double> values) {
  if (values.size() != cols()) {
    throw Error("row width " + std::to_string(values.size()) +
                " does not match " + std::to_string(cols()) + " columns");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error("non-finite feature value");
    }
  }
  values_.insert(values_.end(), values.begin(), values.end());
  ++rows_;
}

void FeatureMatrix::set_labels(std::vector<int> labels) {
  if (labels.size() != rows_) {
    throw Error("label count does not match row count");
  }
  for (int y : labels) {
    if (y != 0 && y != 1) {
      throw Error("labels must be binary");
    }
  }
  labels_ = std::move(labels);
}

int FeatureMatrix::column_index(const std::string &name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c] == name) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

}  // namespace patchem::learn
