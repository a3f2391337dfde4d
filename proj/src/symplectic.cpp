#include "hornsp/symplectic.hpp"

#include <algorithm>
#include <string>

#include "hornsp/linalg.hpp"
#include "hornsp/random.hpp"

namespace hornsp {

RealMatrix j_matrix(Index n) {
  if (n < 1) throw DomainError("j_matrix: n must be positive");
  RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
  return j;
}

double symplectic_defect(const RealMatrix& s) {
  const RealMatrix j = j_matrix(s.rows() / 2);
  return max_abs(s.transpose() * j * s - j);
}

SympMatrix::SympMatrix(RealMatrix s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols() || s_.rows() == 0 || s_.rows() % 2 != 0) {
    throw DomainError("symplectic matrix must be square of even dimension");
  }
  const double defect = symplectic_defect(s_);
  const double scale = std::max(1.0, max_abs(s_) * max_abs(s_));
  if (!(defect <= kDefectTol * scale)) {
    throw DomainError("matrix is not symplectic: defect " + std::to_string(defect));
  }
}

SympMatrix symplectic_exp(const RealSymMatrix& r) {
  if (r.dim() % 2 != 0) throw DomainError("symplectic_exp: dimension must be even");
  return SympMatrix(expm(-j_matrix(r.dim() / 2) * r.matrix()));
}

SympMatrix random_symplectic(Index n, std::uint64_t seed, double radius) {
  if (n < 1) throw DomainError("random_symplectic: n must be positive");
  if (!(radius >= 0.0)) throw DomainError("random_symplectic: radius must be non-negative");
  Rng rng = make_rng(seed, 0x5350);
  return symplectic_exp(random_symmetric(2 * n, rng, radius));
}

}  // namespace hornsp
