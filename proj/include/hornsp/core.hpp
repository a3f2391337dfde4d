#ifndef HORNSP_CORE_HPP_
#define HORNSP_CORE_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hornsp {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;
using RealVector = Vector<double>;
using ComplexVector = Vector<Complex>;
using Index = Eigen::Index;

inline constexpr double kDefaultEigenTol = 1e-12;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad dimension, non-PD form, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine ran out of budget; carries the residual it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotPsdError : public Error {
 public:
  explicit NotPsdError(double eigenvalue)
      : Error("matrix is not positive semidefinite: eigenvalue " +
              std::to_string(eigenvalue)),
        eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Results that should agree by construction did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// Self-adjoint matrix over `Scalar`. Only the lower triangle of the input is
/// read; the upper triangle is its (conjugate) mirror and the diagonal is real,
/// so symmetry holds exactly.
template <typename Scalar>
class SelfAdjoint {
 public:
  SelfAdjoint() = default;

  template <typename Derived>
  explicit SelfAdjoint(const Eigen::MatrixBase<Derived>& m) : m_(m.rows(), m.cols()) {
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw DomainError("self-adjoint matrix must be square and non-empty");
    }
    const Index d = m.rows();
    for (Index j = 0; j < d; ++j) {
      m_(j, j) = Scalar(std::real(m(j, j)));
      for (Index i = j + 1; i < d; ++i) {
        m_(i, j) = m(i, j);
        if constexpr (is_complex_v<Scalar>) {
          m_(j, i) = std::conj(m_(i, j));
        } else {
          m_(j, i) = m_(i, j);
        }
      }
    }
  }

  static SelfAdjoint identity(Index dim) { return SelfAdjoint(Matrix<Scalar>::Identity(dim, dim)); }

  Index dim() const noexcept { return m_.rows(); }
  const Matrix<Scalar>& matrix() const noexcept { return m_; }
  Scalar operator()(Index i, Index j) const { return m_(i, j); }

  friend SelfAdjoint operator+(const SelfAdjoint& a, const SelfAdjoint& b) {
    return SelfAdjoint(a.m_ + b.m_);
  }
  friend SelfAdjoint operator-(const SelfAdjoint& a, const SelfAdjoint& b) {
    return SelfAdjoint(a.m_ - b.m_);
  }
  friend SelfAdjoint operator*(double t, const SelfAdjoint& a) { return SelfAdjoint(t * a.m_); }

 private:
  Matrix<Scalar> m_;
};

using RealSymMatrix = SelfAdjoint<double>;
using HermMatrix = SelfAdjoint<Complex>;

/// Complex symmetric (not Hermitian) matrix: entries(i,j) == entries(j,i).
class ComplexSymMatrix {
 public:
  ComplexSymMatrix() = default;

  template <typename Derived>
  explicit ComplexSymMatrix(const Eigen::MatrixBase<Derived>& m) : m_(m.rows(), m.cols()) {
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw DomainError("symmetric matrix must be square and non-empty");
    }
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = j; i < m.rows(); ++i) {
        m_(i, j) = m(i, j);
        m_(j, i) = m_(i, j);
      }
    }
  }

  Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// Ordered tuple of reals, non-increasing. Home of symplectic spectra and of
/// Hermitian eigenvalue lists.
class Spectrum {
 public:
  Spectrum() = default;

  explicit Spectrum(RealVector values) : v_(std::move(values)) {
    for (Index k = 0; k + 1 < v_.size(); ++k) {
      if (!(v_[k] >= v_[k + 1])) {
        throw DomainError("spectrum must be non-increasing");
      }
    }
  }
  Spectrum(std::initializer_list<double> values)
      : Spectrum(RealVector(Eigen::Map<const RealVector>(values.begin(),
                                                         static_cast<Index>(values.size())))) {}

  /// Sorts a copy of `values` into non-increasing order.
  static Spectrum sorted(RealVector values) {
    std::sort(values.data(), values.data() + values.size(), std::greater<>());
    return Spectrum(std::move(values));
  }

  const RealVector& values() const noexcept { return v_; }
  Index size() const noexcept { return v_.size(); }
  double operator[](Index k) const { return v_[k]; }
  double sum() const { return v_.sum(); }

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.v_.size() == b.v_.size() && a.v_ == b.v_;
  }

 private:
  RealVector v_;
};

}  // namespace hornsp

#endif  // HORNSP_CORE_HPP_
