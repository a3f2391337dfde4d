#ifndef HORNSP_JACOBI_HPP_
#define HORNSP_JACOBI_HPP_

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "hornsp/core.hpp"

namespace hornsp {

template <typename Scalar>
struct EigenDecomposition {
  Spectrum values;         // non-increasing
  Matrix<Scalar> vectors;  // column k belongs to values[k]
};

namespace detail {

template <typename Scalar>
double off_diagonal_norm(const Matrix<Scalar>& a) {
  double s = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for real symmetric and complex Hermitian
/// matrices. Each rotation first removes the phase of the pivot, then applies
/// the real 2x2 rotation that annihilates it.
///
/// Throws ConvergenceError if `max_sweeps` sweeps do not drive the
/// off-diagonal mass to round-off level, or if the result misses the
/// orthogonality/reconstruction bounds implied by `tol`.
template <typename Scalar>
EigenDecomposition<Scalar> jacobi_eigen(const SelfAdjoint<Scalar>& m,
                                        double tol = kDefaultEigenTol,
                                        int max_sweeps = 100) {
  if (!(tol > 0.0)) throw DomainError("eigensolver tolerance must be positive");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const Index d = m.dim();
  Matrix<Scalar> a = m.matrix();
  Matrix<Scalar> v = Matrix<Scalar>::Identity(d, d);
  const double scale = a.norm();

  bool converged = (d == 1) || scale == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    int rotations = 0;
    for (Index p = 0; p + 1 < d; ++p) {
      for (Index q = p + 1; q < d; ++q) {
        const Scalar apq = a(p, q);
        const double b = std::abs(apq);
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        if (b <= eps * std::sqrt(std::abs(app) * std::abs(aqq)) || b <= eps * eps * scale) {
          a(p, q) = a(q, p) = Scalar(0);
          continue;
        }
        ++rotations;
        // omega = conj(apq)/|apq| turns the pivot into the real value b.
        const Scalar omega = [&] {
          if constexpr (is_complex_v<Scalar>) {
            return std::conj(apq) / b;
          } else {
            return apq > 0 ? 1.0 : -1.0;
          }
        }();
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- A R with R = [[c, s], [-s*omega, c*omega]] on the (p, q) plane.
        for (Index k = 0; k < d; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * omega * akq;
          a(k, q) = s * akp + c * omega * akq;
        }
        // A <- R^H A
        for (Index k = 0; k < d; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          if constexpr (is_complex_v<Scalar>) {
            a(p, k) = c * apk - s * std::conj(omega) * aqk;
            a(q, k) = s * apk + c * std::conj(omega) * aqk;
          } else {
            a(p, k) = c * apk - s * omega * aqk;
            a(q, k) = s * apk + c * omega * aqk;
          }
        }
        a(p, q) = a(q, p) = Scalar(0);
        a(p, p) = Scalar(std::real(a(p, p)));
        a(q, q) = Scalar(std::real(a(q, q)));
        for (Index k = 0; k < d; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * omega * vkq;
          v(k, q) = s * vkp + c * omega * vkq;
        }
      }
    }
    if (rotations == 0) converged = true;
  }
  if (!converged) {
    throw ConvergenceError("Jacobi eigensolver did not converge", detail::off_diagonal_norm(a));
  }

  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });
  RealVector values(d);
  Matrix<Scalar> vectors(d, d);
  for (Index k = 0; k < d; ++k) {
    values[k] = std::real(a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]));
    vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }

  const double orth = max_abs(vectors.adjoint() * vectors - Matrix<Scalar>::Identity(d, d));
  const double recon =
      max_abs(vectors * values.cast<Scalar>().asDiagonal() * vectors.adjoint() - m.matrix());
  if (orth > tol || recon > tol * (1.0 + max_abs(m.matrix()))) {
    throw ConvergenceError("Jacobi eigensolver missed its accuracy bound", std::max(orth, recon));
  }
  return {Spectrum(std::move(values)), std::move(vectors)};
}

inline EigenDecomposition<double> sym_eigen(const RealSymMatrix& m, double tol = kDefaultEigenTol) {
  return jacobi_eigen(m, tol);
}

inline EigenDecomposition<Complex> herm_eigen(const HermMatrix& m, double tol = kDefaultEigenTol) {
  return jacobi_eigen(m, tol);
}

}  // namespace hornsp

#endif  // HORNSP_JACOBI_HPP_
