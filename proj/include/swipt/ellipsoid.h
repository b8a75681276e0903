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

#ifndef SWIPT_ELLIPSOID_H_
#define SWIPT_ELLIPSOID_H_

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

namespace swipt {

// Ellipsoid {x : (x - center)^T shape^{-1} (x - center) <= 1}.
class EllipsoidState {
 public:
  // Ball of the given radius. Throws std::invalid_argument for dimension < 2
  // or a non-positive radius.
  EllipsoidState(std::span<const double> center, double radius);

  // Central cut keeping the half-space {x : a^T (x - center) <= 0}.
  // Returns false (and leaves the state untouched) if a^T shape a is not
  // positive, which happens only for a = 0 or a numerically collapsed shape.
  bool Cut(const Eigen::VectorXd& a);

  // sqrt(a^T shape a): the largest value of a^T (x - center) over the
  // ellipsoid.
  double Width(const Eigen::VectorXd& a) const;

  double LogDet() const;
  bool IsPositiveDefinite() const;

  const Eigen::VectorXd& center() const { return center_; }
  const Eigen::MatrixXd& shape() const { return shape_; }
  int iteration() const { return iteration_; }
  int dim() const { return static_cast<int>(center_.size()); }

 private:
  Eigen::VectorXd center_;
  Eigen::MatrixXd shape_;
  int iteration_ = 0;
};

// det(E_{k+1}) / det(E_k) for a central cut in dimension n.
double EllipsoidVolumeRatio(int n);

struct EllipsoidConfig {
  int max_iterations = 800;
  // Stop when sqrt(s^T E s) <= rel_tol * (1 + |g|) at a center inside the
  // non-negative orthant.
  double rel_tol = 1e-4;
  bool record_history = false;
};

struct DualEval {
  double value = 0.0;
  std::vector<double> subgradient;
};

struct EllipsoidResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> log_det_history;  // one entry per cut, if recorded
  std::vector<double> value_history;    // one entry per evaluation
};

// Minimizes a convex function over the non-negative orthant. The oracle is
// called only at centers with every coordinate >= 0.
EllipsoidResult minimize_on_orthant(
    EllipsoidState state, const EllipsoidConfig& cfg,
    const std::function<DualEval(std::span<const double>)>& oracle);

}  // namespace swipt

#endif  // SWIPT_ELLIPSOID_H_
