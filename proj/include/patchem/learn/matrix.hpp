//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_LEARN_MATRIX_HPP_
#define PATCHEM_LEARN_MATRIX_HPP_

#include <span>
#include <string>
#include <vector>

namespace patchem::learn {

// Rectangular, finite-valued feature table with named columns and optional
// binary labels. Values are validated on insertion; NaN and infinity are
// rejected outright.
class FeatureMatrix {
 public:
  explicit FeatureMatrix(std::vector<std::string> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<std::string> &columns() const { return columns_; }

  void add_row(std::span<const double> values);

  double at(std::size_t row, std::size_t col) const {
    return values_[row * cols() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }

  void set_labels(std::vector<int> labels);
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<int> &labels() const { return labels_; }

  // Column index by name, -1 if absent.
  int column_index(const std::string &name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<double> values_;
  std::vector<int> labels_;
  std::size_t rows_ = 0;
};

}  // namespace patchem::learn

#endif  // PATCHEM_LEARN_MATRIX_HPP_
