#ifndef HORNSP_LINALG_HPP_
#define HORNSP_LINALG_HPP_

#include <cmath>
#include <limits>
#include <utility>

#include "hornsp/core.hpp"
#include "hornsp/jacobi.hpp"

namespace hornsp {

namespace detail {

/// V * diag(f(values)) * V^H
template <typename Scalar, typename Fn>
Matrix<Scalar> spectral_map(const EigenDecomposition<Scalar>& e, Fn&& fn) {
  const Index d = e.values.size();
  Vector<Scalar> fv(d);
  for (Index k = 0; k < d; ++k) fv[k] = Scalar(fn(e.values[k]));
  return e.vectors * fv.asDiagonal() * e.vectors.adjoint();
}

inline double clamp_psd(double lambda, double tol) {
  if (lambda < -tol) throw NotPsdError(lambda);
  return lambda < 0.0 ? 0.0 : lambda;
}

}  // namespace detail

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-tol, 0) are treated as round-off and clamped to zero.
template <typename Scalar>
SelfAdjoint<Scalar> psd_sqrt(const SelfAdjoint<Scalar>& m, double tol = kDefaultEigenTol) {
  const auto e = jacobi_eigen(m, tol);
  return SelfAdjoint<Scalar>(
      detail::spectral_map(e, [tol](double l) { return std::sqrt(detail::clamp_psd(l, tol)); }));
}

/// Square root and inverse square root of a positive definite matrix, sharing
/// one eigendecomposition.
template <typename Scalar>
std::pair<SelfAdjoint<Scalar>, SelfAdjoint<Scalar>> pd_sqrt_and_inverse(
    const SelfAdjoint<Scalar>& m, double tol = kDefaultEigenTol) {
  const auto e = jacobi_eigen(m, tol);
  if (!(e.values[e.values.size() - 1] > 0.0)) {
    throw DomainError("matrix is not positive definite");
  }
  return {SelfAdjoint<Scalar>(detail::spectral_map(e, [](double l) { return std::sqrt(l); })),
          SelfAdjoint<Scalar>(detail::spectral_map(e, [](double l) { return 1.0 / std::sqrt(l); }))};
}

/// Smallest eigenvalue of a self-adjoint matrix.
template <typename Scalar>
double min_eigenvalue(const SelfAdjoint<Scalar>& m, double tol = kDefaultEigenTol) {
  const auto e = jacobi_eigen(m, tol);
  return e.values[e.values.size() - 1];
}

/// Matrix exponential by scaling and squaring with a Taylor series summed to
/// machine precision.
template <typename Derived>
Matrix<typename Derived::Scalar> expm(const Eigen::MatrixBase<Derived>& y) {
  using Scalar = typename Derived::Scalar;
  const Index d = y.rows();
  const double norm1 = d == 0 ? 0.0 : y.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Matrix<Scalar> a = y / std::ldexp(1.0, squarings);

  Matrix<Scalar> result = Matrix<Scalar>::Identity(d, d);
  Matrix<Scalar> term = Matrix<Scalar>::Identity(d, d);
  for (int k = 1; k <= 30; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (max_abs(term) <= std::numeric_limits<double>::epsilon() * max_abs(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace hornsp

#endif  // HORNSP_LINALG_HPP_
