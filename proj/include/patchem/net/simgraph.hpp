//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_NET_SIMGRAPH_HPP_
#define PATCHEM_NET_SIMGRAPH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "patchem/feat/fingerprint.hpp"

namespace patchem::net {

// Default cutoff grid; endpoints from the similarity-network protocol,
// step 0.1.
inline const std::vector<double> &default_cutoff_grid() {
  static const std::vector<double> kGrid{0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return kGrid;
}

// Undirected compound similarity graph at one cutoff. Nodes keep the caller
// order; edges are stored with i < j, sorted.
class SimilarityGraph {
 public:
  SimilarityGraph(double cutoff, std::vector<std::string> node_ids,
                  std::vector<std::pair<int, int>> edges,
                  std::vector<double> similarities);

  double cutoff() const { return cutoff_; }
  std::size_t node_count() const { return node_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &node_ids() const { return node_ids_; }
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  double edge_similarity(std::size_t k) const { return similarities_[k]; }
  const std::vector<std::vector<int>> &neighbors() const { return adjacency_; }
  int degree(int i) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
  }

 private:
  double cutoff_;
  std::vector<std::string> node_ids_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<double> similarities_;
  std::vector<std::vector<int>> adjacency_;
};

// Pairwise Tanimoto >= cutoff, no self edges. Node order = input order.
SimilarityGraph build_graph(
    const std::vector<std::pair<std::string, feat::Fingerprint>> &fps,
    double cutoff);

// Dense symmetric 0/1 matrix with zero diagonal, aligned to node_ids.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> cells;  // row major

  std::uint8_t at(std::size_t i, std::size_t j) const {
    return cells[i * n + j];
  }
};

AdjacencyMatrix adjacency(const SimilarityGraph &g);

struct NodeFeatures {
  int degree = 0;
  double degree_centrality = 0.0;
  double clustering_coefficient = 0.0;
  double betweenness = 0.0;  // normalized to [0, 1]
  int component_size = 1;
  double pagerank_score = 0.0;
};

inline constexpr int kNodeFeatureCount = 6;

// Exact values: Brandes betweenness over unweighted shortest paths,
// PageRank at damping 0.85 run 100 iterations or to 1e-10.
std::vector<NodeFeatures> network_features(const SimilarityGraph &g);

// One edge per line: `id_a<TAB>id_b<TAB>similarity`, ids lexicographically
// ordered within the line, lines sorted.
std::string dump_edges(const SimilarityGraph &g);

}  // namespace patchem::net

#endif  // PATCHEM_NET_SIMGRAPH_HPP_
