//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_LEARN_BAYESOPT_HPP_
#define PATCHEM_LEARN_BAYESOPT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace patchem::learn {

struct ParamSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  bool integer = false;
};

class SearchSpace {
 public:
  SearchSpace &add_continuous(const std::string &name, double lo, double hi);
  SearchSpace &add_integer(const std::string &name, int lo, int hi);

  std::size_t size() const { return specs_.size(); }
  const std::vector<ParamSpec> &specs() const { return specs_; }
  int index_of(const std::string &name) const;

 private:
  std::vector<ParamSpec> specs_;
};

// One evaluated assignment, aligned to SearchSpace::specs(). Integer
// parameters are already rounded.
struct Trial {
  std::vector<double> params;
  double value = 0.0;

  double param(const SearchSpace &space, const std::string &name) const;
};

struct BayesOptResult {
  Trial best;
  std::vector<Trial> history;  // complete, in evaluation order
};

using Objective = std::function<double(const Trial &)>;

// Minimizes `objective` over the space. The first min(10, budget) trials are
// a Latin-hypercube design; afterwards a Gaussian-process surrogate
// (squared-exponential kernel, observation noise 1e-6, hyperparameters
// chosen by maximum likelihood on a log-scale grid) proposes the Expected
// Improvement maximizer over 1024 random candidates per step.
BayesOptResult bayes_opt(const Objective &objective, const SearchSpace &space,
                         int budget, std::uint64_t seed);

}  // namespace patchem::learn

#endif  // PATCHEM_LEARN_BAYESOPT_HPP_
