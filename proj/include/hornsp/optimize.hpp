#ifndef HORNSP_OPTIMIZE_HPP_
#define HORNSP_OPTIMIZE_HPP_

#include <functional>

#include "hornsp/core.hpp"

namespace hornsp {

using Objective = std::function<double(const RealVector&)>;
using ResidualFn = std::function<RealVector(const RealVector&)>;

struct SearchResult {
  RealVector x;
  double value;  // objective, or squared residual norm
  int evaluations;
};

/// Adaptive compass (coordinate pattern) search. Each coordinate keeps its own
/// step, doubled after a successful move and halved after a failed pair of
/// probes. Stops on `target`, when every step is below `min_step`, or when
/// `budget` evaluations are spent.
SearchResult compass_search(const Objective& f, RealVector x0, double step, int budget,
                            double target, double min_step = 1e-10);

/// Levenberg-Marquardt on ||r(x)||^2 with a forward-difference Jacobian. Steps
/// are computed in the dual form -J^T (J J^T + mu I)^{-1} r, which stays well
/// posed when there are more parameters than residuals. Stops on `target`,
/// on stagnation, or when `budget` evaluations are spent.
SearchResult levenberg_marquardt(const ResidualFn& r, RealVector x0, int budget, double target);

}  // namespace hornsp

#endif  // HORNSP_OPTIMIZE_HPP_
