//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/net/simgraph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <stack>

#include "patchem/support/errors.hpp"

namespace patchem::net {

SimilarityGraph::SimilarityGraph(double cutoff,
                                 std::vector<std::string> node_ids,
                                 std::vector<std::pair<int, int>> edges,
                                 std::vector<double> similarities)
    : cutoff_(cutoff), node_ids_(std::move(node_ids)),
      edges_(std::move(edges)), similarities_(std::move(similarities)) {
  adjacency_.assign(node_ids_.size(), {});
  for (const auto &[i, j] : edges_) {
    adjacency_[static_cast<std::size_t>(i)].push_back(j);
    adjacency_[static_cast<std::size_t>(j)].push_back(i);
  }
}

SimilarityGraph build_graph(
    const std::vector<std::pair<std::string, feat::Fingerprint>> &fps,
    double cutoff) {
  if (cutoff < 0.0 || cutoff > 1.0) {
    throw Error("cutoff must lie in [0, 1]");
  }
  if (fps.empty()) {
    throw Error("similarity graph needs at least one compound");
  }
  std::vector<std::string> ids;
  ids.reserve(fps.size());
  for (const auto &[id, fp] : fps) {
    ids.push_back(id);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<double> sims;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    for (std::size_t j = i + 1; j < fps.size(); ++j) {
      double s = feat::tanimoto(fps[i].second, fps[j].second);
      if (s >= cutoff) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        sims.push_back(s);
      }
    }
  }
  return SimilarityGraph(cutoff, std::move(ids), std::move(edges),
                         std::move(sims));
}

AdjacencyMatrix adjacency(const SimilarityGraph &g) {
  AdjacencyMatrix m;
  m.n = g.node_count();
  m.cells.assign(m.n * m.n, 0);
  for (const auto &[i, j] : g.edges()) {
    m.cells[static_cast<std::size_t>(i) * m.n + static_cast<std::size_t>(j)] = 1;
    m.cells[static_cast<std::size_t>(j) * m.n + static_cast<std::size_t>(i)] = 1;
  }
  return m;
}

namespace {

std::vector<double> exact_betweenness(const SimilarityGraph &g) {
  const std::size_t n = g.node_count();
  std::vector<double> centrality(n, 0.0);
  if (n < 3) {
    return centrality;
  }
  // Brandes accumulation, one BFS per source.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> sigma(n, 0), dist(n, -1);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    sigma[s] = 1;
    dist[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : g.neighbors()[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] =
              dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
        if (dist[static_cast<std::size_t>(v)] ==
            dist[static_cast<std::size_t>(u)] + 1) {
          sigma[static_cast<std::size_t>(v)] +=
              sigma[static_cast<std::size_t>(u)];
          preds[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int p : preds[static_cast<std::size_t>(w)]) {
        delta[static_cast<std::size_t>(p)] +=
            (static_cast<double>(sigma[static_cast<std::size_t>(p)]) /
             sigma[static_cast<std::size_t>(w)]) *
            (1.0 + delta[static_cast<std::size_t>(w)]);
      }
      if (static_cast<std::size_t>(w) != s) {
        centrality[static_cast<std::size_t>(w)] +=
            delta[static_cast<std::size_t>(w)];
      }
    }
  }
  // Each unordered pair was counted twice; scale onto [0, 1].
  const double scale =
      1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double &c : centrality) {
    c *= scale;
  }
  return centrality;
}

std::vector<double> pagerank(const SimilarityGraph &g) {
  const std::size_t n = g.node_count();
  const double damping = 0.85;
  std::vector<double> pr(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  for (int iter = 0; iter < 100; ++iter) {
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.degree(static_cast<int>(u)) == 0) {
        dangling += pr[u];
      }
    }
    double base = (1.0 - damping) / static_cast<double>(n) +
                  damping * dangling / static_cast<double>(n);
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int u : g.neighbors()[v]) {
        acc += pr[static_cast<std::size_t>(u)] /
               g.degree(u);
      }
      next[v] = base + damping * acc;
    }
    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      delta += std::abs(next[v] - pr[v]);
    }
    pr.swap(next);
    if (delta < 1e-10) {
      break;
    }
  }
  return pr;
}

}  // namespace

std::vector<NodeFeatures> network_features(const SimilarityGraph &g) {
  const std::size_t n = g.node_count();
  std::vector<NodeFeatures> features(n);

  // Component sizes.
  std::vector<int> component(n, -1);
  std::vector<int> comp_size;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) {
      continue;
    }
    int id = static_cast<int>(comp_size.size());
    int size = 0;
    std::deque<int> queue{static_cast<int>(s)};
    component[s] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      ++size;
      for (int v : g.neighbors()[static_cast<std::size_t>(u)]) {
        if (component[static_cast<std::size_t>(v)] < 0) {
          component[static_cast<std::size_t>(v)] = id;
          queue.push_back(v);
        }
      }
    }
    comp_size.push_back(size);
  }

  std::vector<double> betweenness = exact_betweenness(g);
  std::vector<double> ranks = pagerank(g);

  for (std::size_t i = 0; i < n; ++i) {
    NodeFeatures &f = features[i];
    f.degree = g.degree(static_cast<int>(i));
    f.degree_centrality =
        n > 1 ? static_cast<double>(f.degree) / static_cast<double>(n - 1)
              : 0.0;
    // Fraction of closed neighbor pairs.
    if (f.degree >= 2) {
      const auto &nbrs = g.neighbors()[i];
      int closed = 0;
      for (std::size_t x = 0; x < nbrs.size(); ++x) {
        for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
          int a = nbrs[x];
          int b = nbrs[y];
          const auto &an = g.neighbors()[static_cast<std::size_t>(a)];
          if (std::find(an.begin(), an.end(), b) != an.end()) {
            ++closed;
          }
        }
      }
      f.clustering_coefficient =
          2.0 * closed / (static_cast<double>(f.degree) * (f.degree - 1));
    }
    f.betweenness = betweenness[i];
    f.component_size = comp_size[static_cast<std::size_t>(component[i])];
    f.pagerank_score = ranks[i];
  }
  return features;
}

std::string dump_edges(const SimilarityGraph &g) {
  std::vector<std::string> lines;
  lines.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edges()[k];
    std::string a = g.node_ids()[static_cast<std::size_t>(i)];
    std::string b = g.node_ids()[static_cast<std::size_t>(j)];
    if (b < a) {
      std::swap(a, b);
    }
    char value[32];
    std::snprintf(value, sizeof value, "%.6f", g.edge_similarity(k));
    lines.push_back(a + "\t" + b + "\t" + value);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto &line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

}  // namespace patchem::net
