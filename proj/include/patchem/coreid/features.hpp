//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_COREID_FEATURES_HPP_
#define PATCHEM_COREID_FEATURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "patchem/chem/smiles.hpp"
#include "patchem/learn/matrix.hpp"
#include "patchem/net/simgraph.hpp"

namespace patchem::coreid {

struct CompoundRecord {
  std::string patent_id;
  std::string compound_id;
  std::string smiles;
  std::string canonical_smiles;  // standardize(smiles)
  std::optional<bool> is_core;
};

// SMILES failure attributed to a compound.
class CompoundParseError : public Error {
 public:
  CompoundParseError(std::string compound_id, chem::ParseDiagnostic diagnostic)
      : Error("compound " + compound_id + ": " +
              std::string(chem::diagnostic_kind_name(diagnostic.kind)) +
              " at byte " + std::to_string(diagnostic.byte_offset) + ": " +
              diagnostic.message),
        compound_id_(std::move(compound_id)),
        diagnostic_(std::move(diagnostic)) {}

  const std::string &compound_id() const { return compound_id_; }
  const chem::ParseDiagnostic &diagnostic() const { return diagnostic_; }

 private:
  std::string compound_id_;
  chem::ParseDiagnostic diagnostic_;
};

struct FeatureOptions {
  int fp_width = 2048;
  int fp_radius = 2;
  std::vector<double> cutoffs = net::default_cutoff_grid();
};

// Column order: the nine descriptors, then the six network features for each
// cutoff in grid order (names suffixed _c40 .. _c90). 9 + 6*6 = 45 columns
// under the defaults.
std::vector<std::string> feature_column_names(const FeatureOptions &opts = {});

// One row per compound in input order; the similarity network is built
// within this compound list. Labels attach when every record carries
// is_core. Throws CompoundParseError naming the offending compound.
learn::FeatureMatrix assemble_features(
    const std::vector<CompoundRecord> &compounds,
    const FeatureOptions &opts = {});

}  // namespace patchem::coreid

#endif  // PATCHEM_COREID_FEATURES_HPP_
