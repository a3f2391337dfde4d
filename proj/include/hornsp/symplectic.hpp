#ifndef HORNSP_SYMPLECTIC_HPP_
#define HORNSP_SYMPLECTIC_HPP_

#include <cstdint>

#include "hornsp/core.hpp"

namespace hornsp {

/// The block matrix [[0, -I_n], [I_n, 0]].
RealMatrix j_matrix(Index n);

/// ||S^T J S - J||_max
double symplectic_defect(const RealMatrix& s);

/// Element of Sp(2n, R). Construction checks S^T J S = J to within
/// 1e-8 * max(1, ||S||_max^2).
class SympMatrix {
 public:
  static constexpr double kDefectTol = 1e-8;

  explicit SympMatrix(RealMatrix s);
  static SympMatrix identity(Index n) { return SympMatrix(RealMatrix::Identity(2 * n, 2 * n)); }

  Index n() const noexcept { return s_.rows() / 2; }
  const RealMatrix& matrix() const noexcept { return s_; }

 private:
  RealMatrix s_;
};

/// exp(-J R) for symmetric R; -J R lies in sp(2n, R), so the result is symplectic.
SympMatrix symplectic_exp(const RealSymMatrix& r);

/// exp(-J R) with R random symmetric, entries uniform in [-radius, radius].
SympMatrix random_symplectic(Index n, std::uint64_t seed, double radius = 0.5);

}  // namespace hornsp

#endif  // HORNSP_SYMPLECTIC_HPP_
