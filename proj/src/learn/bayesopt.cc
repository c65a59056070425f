//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/learn/bayesopt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "patchem/support/errors.hpp"
#include "patchem/support/hash.hpp"

namespace patchem::learn {

SearchSpace &SearchSpace::add_continuous(const std::string &name, double lo,
                                         double hi) {
  if (!(lo < hi)) {
    throw Error("parameter '" + name + "' needs lo < hi");
  }
  specs_.push_back({name, lo, hi, false});
  return *this;
}

SearchSpace &SearchSpace::add_integer(const std::string &name, int lo,
                                      int hi) {
  if (lo > hi) {
    throw Error("parameter '" + name + "' needs lo <= hi");
  }
  specs_.push_back({name, static_cast<double>(lo), static_cast<double>(hi),
                    true});
  return *this;
}

int SearchSpace::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (specs_[i].name == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

double Trial::param(const SearchSpace &space, const std::string &name) const {
  int idx = space.index_of(name);
  if (idx < 0) {
    throw Error("unknown parameter '" + name + "'");
  }
  return params[static_cast<std::size_t>(idx)];
}

namespace {

double uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> unit_to_params(const SearchSpace &space,
                                   const std::vector<double> &unit) {
  std::vector<double> out(unit.size());
  for (std::size_t d = 0; d < unit.size(); ++d) {
    const ParamSpec &spec = space.specs()[d];
    double v = spec.lo + unit[d] * (spec.hi - spec.lo);
    if (spec.integer) {
      v = std::llround(v);
      v = std::clamp(v, spec.lo, spec.hi);
    }
    out[d] = v;
  }
  return out;
}

std::vector<double> params_to_unit(const SearchSpace &space,
                                   const std::vector<double> &params) {
  std::vector<double> out(params.size());
  for (std::size_t d = 0; d < params.size(); ++d) {
    const ParamSpec &spec = space.specs()[d];
    double span = spec.hi - spec.lo;
    out[d] = span > 0.0 ? (params[d] - spec.lo) / span : 0.0;
  }
  return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

// Zero-mean GP with isotropic squared-exponential kernel on standardized
// observations.
class GaussianProcess {
 public:
  GaussianProcess(const std::vector<std::vector<double>> &xs,
                  const std::vector<double> &ys) {
    const std::size_t n = xs.size();
    x_ = xs;
    double mean = 0.0;
    for (double y : ys) {
      mean += y;
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double y : ys) {
      var += (y - mean) * (y - mean);
    }
    var /= static_cast<double>(n);
    y_mean_ = mean;
    y_scale_ = var > 1e-12 ? std::sqrt(var) : 1.0;
    y_.resize(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
      y_[static_cast<long>(i)] = (ys[i] - y_mean_) / y_scale_;
    }
    fit_hyperparameters();
  }

  double best_standardized() const { return y_.minCoeff(); }

  // Posterior mean and standard deviation in standardized units.
  std::pair<double, double> predict(const std::vector<double> &x) const {
    const long n = y_.size();
    Eigen::VectorXd k(n);
    for (long i = 0; i < n; ++i) {
      k[i] = kernel(x_[static_cast<std::size_t>(i)], x);
    }
    double mu = k.dot(alpha_);
    Eigen::VectorXd v = chol_.matrixL().solve(k);
    double var = sigma_f2_ + kNoise - v.squaredNorm();
    return {mu, std::sqrt(std::max(0.0, var))};
  }

  double to_raw(double standardized) const {
    return standardized * y_scale_ + y_mean_;
  }

 private:
  static constexpr double kNoise = 1e-6;

  std::vector<std::vector<double>> x_;
  Eigen::VectorXd y_;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  double length_ = 0.3;
  double sigma_f2_ = 1.0;
  Eigen::LLT<Eigen::MatrixXd> chol_;
  Eigen::VectorXd alpha_;

  double kernel(const std::vector<double> &a,
                const std::vector<double> &b) const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double diff = a[i] - b[i];
      d2 += diff * diff;
    }
    return sigma_f2_ * std::exp(-0.5 * d2 / (length_ * length_));
  }

  // Log marginal likelihood over a small log-scale grid.
  void fit_hyperparameters() {
    static const double kLengths[] = {0.05, 0.1, 0.2, 0.4, 0.8, 1.6};
    static const double kSignal[] = {0.25, 1.0, 4.0};
    double best_ll = -std::numeric_limits<double>::infinity();
    double best_length = length_;
    double best_signal = sigma_f2_;
    for (double length : kLengths) {
      for (double signal : kSignal) {
        length_ = length;
        sigma_f2_ = signal;
        double ll = factorize();
        if (ll > best_ll) {
          best_ll = ll;
          best_length = length;
          best_signal = signal;
        }
      }
    }
    length_ = best_length;
    sigma_f2_ = best_signal;
    factorize();
  }

  double factorize() {
    const long n = y_.size();
    Eigen::MatrixXd K(n, n);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j <= i; ++j) {
        double k = kernel(x_[static_cast<std::size_t>(i)],
                          x_[static_cast<std::size_t>(j)]);
        K(i, j) = k;
        K(j, i) = k;
      }
      K(i, i) += kNoise;
    }
    chol_ = K.llt();
    if (chol_.info() != Eigen::Success) {
      // Retry with a heavier jitter before giving up on this grid point.
      K.diagonal().array() += 1e-8;
      chol_ = K.llt();
      if (chol_.info() != Eigen::Success) {
        return -std::numeric_limits<double>::infinity();
      }
    }
    alpha_ = chol_.solve(y_);
    double log_det = 0.0;
    Eigen::MatrixXd L = chol_.matrixL();
    for (long i = 0; i < n; ++i) {
      log_det += std::log(L(i, i));
    }
    return -0.5 * y_.dot(alpha_) - log_det -
           0.5 * static_cast<double>(n) * std::log(2.0 * M_PI);
  }
};

}  // namespace

BayesOptResult bayes_opt(const Objective &objective, const SearchSpace &space,
                         int budget, std::uint64_t seed) {
  if (space.size() == 0) {
    throw EmptySpaceError("search space has no parameters");
  }
  if (budget < 1) {
    throw Error("budget must be at least 1");
  }
  const std::size_t d = space.size();

  BayesOptResult result;
  std::vector<std::vector<double>> unit_points;

  auto evaluate = [&](const std::vector<double> &unit) {
    Trial trial;
    trial.params = unit_to_params(space, unit);
    trial.value = objective(trial);
    // Store the unit coordinates of the assignment actually evaluated, so
    // integer rounding is reflected in the surrogate.
    unit_points.push_back(params_to_unit(space, trial.params));
    result.history.push_back(std::move(trial));
  };

  // Latin-hypercube start.
  const int initial = std::min(10, budget);
  {
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::vector<std::vector<int>> strata(d);
    for (std::size_t dim = 0; dim < d; ++dim) {
      strata[dim].resize(static_cast<std::size_t>(initial));
      for (int k = 0; k < initial; ++k) {
        strata[dim][static_cast<std::size_t>(k)] = k;
      }
      std::shuffle(strata[dim].begin(), strata[dim].end(), rng);
    }
    for (int k = 0; k < initial; ++k) {
      std::vector<double> unit(d);
      for (std::size_t dim = 0; dim < d; ++dim) {
        unit[dim] = (strata[dim][static_cast<std::size_t>(k)] +
                     uniform01(rng)) /
                    static_cast<double>(initial);
      }
      evaluate(unit);
    }
  }

  for (int t = initial; t < budget; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<double> ys;
    ys.reserve(result.history.size());
    for (const Trial &trial : result.history) {
      ys.push_back(trial.value);
    }
    GaussianProcess gp(unit_points, ys);
    const double best = gp.best_standardized();

    std::vector<double> best_candidate;
    double best_ei = -1.0;
    for (int c = 0; c < 1024; ++c) {
      std::vector<double> unit(d);
      for (std::size_t dim = 0; dim < d; ++dim) {
        unit[dim] = uniform01(rng);
      }
      auto [mu, sd] = gp.predict(unit);
      double ei;
      if (sd < 1e-12) {
        ei = std::max(0.0, best - mu);
      } else {
        double z = (best - mu) / sd;
        ei = (best - mu) * normal_cdf(z) + sd * normal_pdf(z);
      }
      if (ei > best_ei) {
        best_ei = ei;
        best_candidate = std::move(unit);
      }
    }
    evaluate(best_candidate);
  }

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < result.history.size(); ++i) {
    if (result.history[i].value < result.history[best_index].value) {
      best_index = i;
    }
  }
  result.best = result.history[best_index];
  return result;
}

}  // namespace patchem::learn
