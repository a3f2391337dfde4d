#include "hornsp/optimize.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>

namespace hornsp {

SearchResult compass_search(const Objective& f, RealVector x0, double step, int budget,
                            double target, double min_step) {
  const Index m = x0.size();
  RealVector x = std::move(x0);
  double fx = f(x);
  int evals = 1;
  RealVector steps = RealVector::Constant(m, step);
  while (evals < budget && fx > target && steps.maxCoeff() >= min_step) {
    for (Index i = 0; i < m && evals < budget && fx > target; ++i) {
      if (steps[i] < min_step) continue;
      bool moved = false;
      for (double sign : {1.0, -1.0}) {
        RealVector trial = x;
        trial[i] += sign * steps[i];
        const double ft = f(trial);
        ++evals;
        if (ft < fx) {
          x = std::move(trial);
          fx = ft;
          moved = true;
          break;
        }
        if (evals >= budget) break;
      }
      steps[i] = moved ? std::min(2.0 * steps[i], 4.0 * step) : 0.5 * steps[i];
    }
  }
  return {std::move(x), fx, evals};
}

SearchResult levenberg_marquardt(const ResidualFn& r, RealVector x0, int budget, double target) {
  const Index m = x0.size();
  RealVector x = std::move(x0);
  RealVector rx = r(x);
  double fx = rx.squaredNorm();
  int evals = 1;
  double damping = 1e-3;
  const double h = std::sqrt(std::numeric_limits<double>::epsilon());
  int stalls = 0;

  while (evals + m + 1 <= budget && fx > target && stalls < 8) {
    RealMatrix jac(rx.size(), m);
    for (Index i = 0; i < m; ++i) {
      RealVector xp = x;
      const double hi = h * std::max(1.0, std::abs(x[i]));
      xp[i] += hi;
      jac.col(i) = (r(xp) - rx) / hi;
    }
    evals += static_cast<int>(m);

    bool improved = false;
    while (evals < budget && damping < 1e12) {
      RealMatrix gram = jac * jac.transpose();
      gram.diagonal().array() += damping * (1.0 + gram.diagonal().maxCoeff());
      const RealVector step = -jac.transpose() * gram.ldlt().solve(rx);
      const RealVector xt = x + step;
      const RealVector rt = r(xt);
      ++evals;
      const double ft = rt.squaredNorm();
      if (ft < fx) {
        improved = ft < fx * (1.0 - 1e-6);
        x = xt;
        rx = rt;
        fx = ft;
        damping = std::max(damping / 5.0, 1e-15);
        break;
      }
      damping *= 4.0;
    }
    stalls = improved ? 0 : stalls + 1;
    if (damping >= 1e12) break;
  }
  return {std::move(x), fx, evals};
}

}  // namespace hornsp
