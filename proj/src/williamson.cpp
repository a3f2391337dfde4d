#include "hornsp/williamson.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <vector>

#include "hornsp/jacobi.hpp"
#include "hornsp/linalg.hpp"

namespace hornsp {

QuadForm::QuadForm(RealSymMatrix q) : q_(std::move(q)) {
  if (q_.dim() % 2 != 0) throw DomainError("quadratic form must act on an even-dimensional space");
  Eigen::LLT<RealMatrix> llt(q_.matrix());
  if (llt.info() != Eigen::Success) throw DomainError("quadratic form is not positive definite");
}

RealMatrix doubled_diagonal(const RealVector& mu) {
  const Index n = mu.size();
  RealMatrix d = RealMatrix::Zero(2 * n, 2 * n);
  d.topLeftCorner(n, n) = mu.asDiagonal();
  d.bottomRightCorner(n, n) = mu.asDiagonal();
  return d;
}

RealMatrix x_of_mu(const Spectrum& mu) {
  const Index n = mu.size();
  if (n < 1) throw DomainError("x_of_mu: empty spectrum");
  RealMatrix x = RealMatrix::Zero(2 * n, 2 * n);
  x.topRightCorner(n, n) = mu.values().asDiagonal();
  x.bottomLeftCorner(n, n) = (-mu.values()).asDiagonal();
  return x;
}

namespace {

constexpr double kClusterTol = 1e-9;

struct SkewData {
  RealSymMatrix root;          // Q^{1/2}
  RealSymMatrix inverse_root;  // Q^{-1/2}
  RealMatrix k;                // Q^{1/2} J Q^{1/2}
  EigenDecomposition<double> squared;  // of K^T K
  RealVector lambda;           // paired symplectic eigenvalues, non-increasing
};

SkewData skew_data(const QuadForm& q, double pair_tol) {
  if (!(pair_tol > 0.0)) throw DomainError("pairing tolerance must be positive");
  const Index n = q.n();
  auto [root, inverse_root] = pd_sqrt_and_inverse(q.sym());
  RealMatrix k = root.matrix() * j_matrix(n) * root.matrix();
  auto squared = sym_eigen(RealSymMatrix(k.transpose() * k));

  RealVector lambda(n);
  for (Index p = 0; p < n; ++p) {
    const double hi = squared.values[2 * p];
    const double lo = squared.values[2 * p + 1];
    if (hi - lo > pair_tol * hi) {
      throw ConsistencyError("eigenvalues of -K^2 do not pair up: " + std::to_string(hi) + " vs " +
                             std::to_string(lo));
    }
    lambda[p] = std::sqrt(0.5 * (hi + lo));
  }
  return {std::move(root), std::move(inverse_root), std::move(k), std::move(squared),
          std::move(lambda)};
}

// Projects v onto the orthogonal complement of the first `count` columns of basis.
RealVector orthogonalize(RealVector v, const RealMatrix& basis, Index count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index c = 0; c < count; ++c) v -= basis.col(c).dot(v) * basis.col(c);
  }
  return v;
}

}  // namespace

Spectrum symplectic_eigenvalues(const QuadForm& q, double pair_tol) {
  return Spectrum(skew_data(q, pair_tol).lambda);
}

WilliamsonDecomp williamson_decompose(const QuadForm& q, double pair_tol) {
  const Index n = q.n();
  const SkewData sd = skew_data(q, pair_tol);
  const RealMatrix& w = sd.squared.vectors;

  // Every chosen vector is stored in `chosen` (u's and K u's alike) so that
  // later picks can be orthogonalized against all of them.
  RealMatrix chosen(2 * n, 2 * n);
  Index chosen_count = 0;
  RealMatrix u_mat(2 * n, 2 * n);

  Index p = 0;
  while (p < n) {
    // Cluster of numerically equal symplectic eigenvalues [p, end). Pairs
    // outside a cluster may mix slightly, but only in proportion to their gap.
    Index end = p + 1;
    while (end < n && sd.lambda[end - 1] - sd.lambda[end] <= kClusterTol * sd.lambda[end - 1]) ++end;

    for (Index k = p; k < end; ++k) {
      RealVector best;
      double best_norm = -1.0;
      for (Index c = 2 * p; c < 2 * end; ++c) {
        RealVector v = orthogonalize(w.col(c), chosen, chosen_count);
        const double nv = v.norm();
        if (nv > best_norm) {
          best_norm = nv;
          best = std::move(v);
        }
      }
      if (!(best_norm > 0.5)) {
        throw ConvergenceError("Williamson basis: degenerate eigenspace lost rank", best_norm);
      }
      const RealVector u = best / best_norm;
      chosen.col(chosen_count++) = u;
      RealVector ku = orthogonalize(sd.k * u, chosen, chosen_count);
      ku.normalize();
      chosen.col(chosen_count++) = ku;
      u_mat.col(k) = u;
      u_mat.col(n + k) = ku;
    }
    p = end;
  }

  RealVector half(2 * n);
  half << sd.lambda.cwiseSqrt(), sd.lambda.cwiseSqrt();
  RealMatrix s = sd.inverse_root.matrix() * u_mat * half.asDiagonal();

  const RealMatrix d = doubled_diagonal(sd.lambda);
  const double recon = max_abs(s.transpose() * q.matrix() * s - d);
  const double defect = symplectic_defect(s);
  if (recon > 1e-8 * max_abs(q.matrix()) || defect > 1e-8) {
    throw ConvergenceError("Williamson basis misses reconstruction bound", std::max(recon, defect));
  }
  return {Spectrum(sd.lambda), SympMatrix(std::move(s))};
}

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::inside_interior: return "inside_interior";
    case CausalClass::boundary: return "boundary";
    case CausalClass::outside: return "outside";
    case CausalClass::not_in_sp: return "not_in_sp";
  }
  return "unknown";
}

CausalClass causal_cone_member(const RealMatrix& x, double tol) {
  if (x.rows() != x.cols() || x.rows() == 0 || x.rows() % 2 != 0) {
    throw DomainError("causal_cone_member: matrix must be square of even dimension");
  }
  const double scaled = tol * max_abs(x);
  const RealMatrix jx = j_matrix(x.rows() / 2) * x;
  if (max_abs(jx - jx.transpose()) > scaled) return CausalClass::not_in_sp;
  const double sigma = min_eigenvalue(RealSymMatrix(jx));
  if (sigma > scaled) return CausalClass::inside_interior;
  if (sigma < -scaled) return CausalClass::outside;
  return CausalClass::boundary;
}

QuadForm sample_form_with_spectrum(const Spectrum& mu, std::uint64_t seed, double radius) {
  const Index n = mu.size();
  if (n < 1 || !(mu[n - 1] > 0.0)) {
    throw DomainError("sample_form_with_spectrum: spectrum must be positive");
  }
  const SympMatrix s = random_symplectic(n, seed, radius);
  return QuadForm(
      RealSymMatrix(s.matrix().transpose() * doubled_diagonal(mu.values()) * s.matrix()));
}

}  // namespace hornsp
