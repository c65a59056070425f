//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/coreid/features.hpp"

#include <cstdio>

#include "patchem/feat/descriptors.hpp"
#include "patchem/feat/fingerprint.hpp"

namespace patchem::coreid {

namespace {

std::string cutoff_suffix(double cutoff) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_c%02d",
                static_cast<int>(cutoff * 100.0 + 0.5));
  return buf;
}

const char *kNetworkNames[net::kNodeFeatureCount] = {
    "degree",      "degree_centrality", "clustering",
    "betweenness", "component_size",    "pagerank",
};

}  // namespace

std::vector<std::string> feature_column_names(const FeatureOptions &opts) {
  std::vector<std::string> names;
  for (std::string_view d : feat::descriptor_names()) {
    names.emplace_back(d);
  }
  for (double cutoff : opts.cutoffs) {
    std::string suffix = cutoff_suffix(cutoff);
    for (const char *base : kNetworkNames) {
      names.push_back(base + suffix);
    }
  }
  return names;
}

learn::FeatureMatrix assemble_features(
    const std::vector<CompoundRecord> &compounds, const FeatureOptions &opts) {
  if (compounds.size() < 2) {
    throw Error("feature assembly needs at least two compounds");
  }

  std::vector<chem::Molecule> mols;
  mols.reserve(compounds.size());
  for (const CompoundRecord &record : compounds) {
    try {
      mols.push_back(chem::parse_smiles(record.smiles));
    } catch (const chem::SmilesError &e) {
      throw CompoundParseError(record.compound_id, e.diagnostic());
    }
  }

  std::vector<std::pair<std::string, feat::Fingerprint>> fps;
  fps.reserve(compounds.size());
  for (std::size_t i = 0; i < compounds.size(); ++i) {
    fps.emplace_back(compounds[i].compound_id,
                     feat::ecfp(mols[i], opts.fp_radius, opts.fp_width));
  }

  // Per-cutoff node features over the whole list.
  std::vector<std::vector<net::NodeFeatures>> network;
  network.reserve(opts.cutoffs.size());
  for (double cutoff : opts.cutoffs) {
    network.push_back(net::network_features(net::build_graph(fps, cutoff)));
  }

  learn::FeatureMatrix X(feature_column_names(opts));
  std::vector<double> row;
  for (std::size_t i = 0; i < compounds.size(); ++i) {
    row.clear();
    auto d = feat::descriptors(mols[i]).values();
    row.insert(row.end(), d.begin(), d.end());
    for (std::size_t c = 0; c < opts.cutoffs.size(); ++c) {
      const net::NodeFeatures &f = network[c][i];
      row.push_back(f.degree);
      row.push_back(f.degree_centrality);
      row.push_back(f.clustering_coefficient);
      row.push_back(f.betweenness);
      row.push_back(f.component_size);
      row.push_back(f.pagerank_score);
    }
    X.add_row(row);
  }

  bool all_labeled = true;
  for (const CompoundRecord &record : compounds) {
    all_labeled = all_labeled && record.is_core.has_value();
  }
  if (all_labeled) {
    std::vector<int> labels;
    labels.reserve(compounds.size());
    for (const CompoundRecord &record : compounds) {
      labels.push_back(*record.is_core ? 1 : 0);
    }
    X.set_labels(std::move(labels));
  }
  return X;
}

}  // namespace patchem::coreid
