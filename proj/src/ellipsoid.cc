/*
Copyright 2026 The swipt-cj Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "swipt/ellipsoid.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swipt {

EllipsoidState::EllipsoidState(std::span<const double> center, double radius) {
  if (center.size() < 2)
    throw std::invalid_argument("ellipsoid dimension must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("ellipsoid radius must be positive");
  const auto n = static_cast<Eigen::Index>(center.size());
  center_ = Eigen::Map<const Eigen::VectorXd>(center.data(), n);
  shape_ = Eigen::MatrixXd::Identity(n, n) * (radius * radius);
}

double EllipsoidState::Width(const Eigen::VectorXd& a) const {
  const double w2 = a.dot(shape_ * a);
  return w2 > 0.0 ? std::sqrt(w2) : 0.0;
}

bool EllipsoidState::Cut(const Eigen::VectorXd& a) {
  const double n = static_cast<double>(dim());
  const Eigen::VectorXd ea = shape_ * a;
  const double w2 = a.dot(ea);
  if (!(w2 > 0.0) || !std::isfinite(w2)) return false;
  const Eigen::VectorXd b = ea / std::sqrt(w2);
  center_ -= b / (n + 1.0);
  shape_ = (n * n / (n * n - 1.0)) * (shape_ - (2.0 / (n + 1.0)) * b * b.transpose());
  shape_ = 0.5 * (shape_ + shape_.transpose());
  ++iteration_;
  return true;
}

double EllipsoidState::LogDet() const {
  Eigen::LLT<Eigen::MatrixXd> llt(shape_);
  if (llt.info() != Eigen::Success)
    return -std::numeric_limits<double>::infinity();
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

bool EllipsoidState::IsPositiveDefinite() const {
  Eigen::LLT<Eigen::MatrixXd> llt(shape_);
  return llt.info() == Eigen::Success;
}

double EllipsoidVolumeRatio(int n) {
  const double d = n;
  return std::pow(d * d / (d * d - 1.0), d) * (d - 1.0) / (d + 1.0);
}

EllipsoidResult minimize_on_orthant(
    EllipsoidState state, const EllipsoidConfig& cfg,
    const std::function<DualEval(std::span<const double>)>& oracle) {
  const int n = state.dim();
  EllipsoidResult res;
  res.best_value = std::numeric_limits<double>::infinity();
  if (cfg.record_history) res.log_det_history.push_back(state.LogDet());

  Eigen::VectorXd cut(n);
  while (state.iteration() < cfg.max_iterations) {
    const Eigen::VectorXd& c = state.center();
    int negative = -1;
    for (int i = 0; i < n; ++i) {
      if (c[i] < 0.0) {
        negative = i;
        break;
      }
    }
    if (negative >= 0) {
      cut.setZero();
      cut[negative] = -1.0;
    } else {
      const DualEval ev = oracle(std::span<const double>(c.data(), n));
      ++res.evaluations;
      if (cfg.record_history) res.value_history.push_back(ev.value);
      if (ev.value < res.best_value) {
        res.best_value = ev.value;
        res.best_point.assign(c.data(), c.data() + n);
      }
      cut = Eigen::Map<const Eigen::VectorXd>(ev.subgradient.data(), n);
      // A zero subgradient certifies optimality of the current center.
      if (cut.isZero(0.0) ||
          state.Width(cut) <= cfg.rel_tol * (1.0 + std::abs(ev.value))) {
        res.converged = true;
        break;
      }
    }
    if (!state.Cut(cut)) break;
    if (cfg.record_history) res.log_det_history.push_back(state.LogDet());
  }
  res.iterations = state.iteration();
  return res;
}

}  // namespace swipt
