//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/support/errors.hpp"

#include <sstream>

namespace patchem {

namespace {

std::string describe_mismatch(const std::vector<std::string> &missing,
                              const std::vector<std::string> &extra) {
  std::ostringstream os;
  os << "feature columns do not match the model";
  if (!missing.empty()) {
    os << "; missing:";
    for (const auto &name : missing) {
      os << " " << name;
    }
  }
  if (!extra.empty()) {
    os << "; extra:";
    for (const auto &name : extra) {
      os << " " << name;
    }
  }
  return os.str();
}

}  // namespace

ColumnMismatchError::ColumnMismatchError(std::vector<std::string> missing,
                                         std::vector<std::string> extra)
    : Error(describe_mismatch(missing, extra)), missing_(std::move(missing)),
      extra_(std::move(extra)) {}

}  // namespace patchem
