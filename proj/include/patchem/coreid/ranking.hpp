//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_COREID_RANKING_HPP_
#define PATCHEM_COREID_RANKING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "patchem/coreid/features.hpp"
#include "patchem/learn/ensemble.hpp"

namespace patchem::coreid {

struct RankedCompound {
  std::string compound_id;
  double probability = 0.0;
};

struct MetricFlags {
  bool top1 = false;
  bool top5 = false;
  bool top10 = false;
  bool top1pct = false;  // extra; not part of the standard table
  bool top5pct = false;
  bool top10pct = false;
};

struct RankingReport {
  std::string patent_id;
  std::vector<RankedCompound> ranking;  // probability descending, id ties asc
  std::optional<int> rank_of_core;      // 1-based, present iff labeled
  std::optional<MetricFlags> metrics;
};

// Percentage flags use k = ceil(p * N), never less than one compound.
MetricFlags flags_for_rank(int rank_of_core, std::size_t compounds);

RankingReport rank_core(const std::vector<CompoundRecord> &compounds,
                        const learn::EnsembleModel &model,
                        const FeatureOptions &opts = {});

// Aggregate percentages over patents (0..100 scale).
struct TopkAggregate {
  double top1 = 0.0;
  double top5 = 0.0;
  double top10 = 0.0;
  double top1pct = 0.0;
  double top5pct = 0.0;
  double top10pct = 0.0;
  std::size_t patents = 0;
};

// Every report must carry metrics; otherwise UnlabeledReportError.
TopkAggregate topk_metrics(const std::vector<RankingReport> &reports);

std::string report_to_json(const RankingReport &report);
std::string report_to_markdown(const RankingReport &report);
std::string aggregate_to_json(const TopkAggregate &aggregate);
// Table layout: columns Top 1 / 5 / 10 / 5% / 10%, two decimals.
std::string aggregate_to_markdown(const TopkAggregate &aggregate);

}  // namespace patchem::coreid

#endif  // PATCHEM_COREID_RANKING_HPP_
