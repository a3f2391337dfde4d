#ifndef HORNSP_WILLIAMSON_HPP_
#define HORNSP_WILLIAMSON_HPP_

#include <cstdint>
#include <string_view>

#include "hornsp/core.hpp"
#include "hornsp/symplectic.hpp"

namespace hornsp {

inline constexpr double kDefaultPairTol = 1e-6;

/// Positive definite quadratic form q(v) = v^T Q v on R^{2n}. A cross term
/// c x1 x2 therefore sits as c/2 in both off-diagonal entries of Q.
class QuadForm {
 public:
  /// Throws DomainError unless `q` has even dimension and is positive definite.
  explicit QuadForm(RealSymMatrix q);

  Index n() const noexcept { return q_.dim() / 2; }
  const RealSymMatrix& sym() const noexcept { return q_; }
  const RealMatrix& matrix() const noexcept { return q_.matrix(); }

  friend QuadForm operator+(const QuadForm& a, const QuadForm& b) { return QuadForm(a.q_ + b.q_); }

 private:
  RealSymMatrix q_;
};

/// S^T Q S = diag(spectrum) (+) diag(spectrum) with S symplectic.
struct WilliamsonDecomp {
  Spectrum spectrum;
  SympMatrix basis;
};

/// diag(mu) (+) diag(mu), the Williamson normal form with spectrum mu.
RealMatrix doubled_diagonal(const RealVector& mu);

/// X(mu) = [[0, diag(mu)], [-diag(mu), 0]].
RealMatrix x_of_mu(const Spectrum& mu);

/// Symplectic eigenvalues lambda_1 >= ... >= lambda_n > 0, read off the
/// doubled spectrum of -K^2 = K^T K with K = Q^{1/2} J Q^{1/2}. Eigenvalues
/// are paired greedily in sorted order; a pair whose relative gap exceeds
/// `pair_tol` raises ConsistencyError.
Spectrum symplectic_eigenvalues(const QuadForm& q, double pair_tol = kDefaultPairTol);

/// Symplectic S with S^T Q S = Lambda (+) Lambda. Throws ConvergenceError if
/// the constructed basis misses the reconstruction bounds.
WilliamsonDecomp williamson_decompose(const QuadForm& q, double pair_tol = kDefaultPairTol);

enum class CausalClass { inside_interior, boundary, outside, not_in_sp };

std::string_view to_string(CausalClass c);

/// Position of x relative to the causal cone {X in sp : J X >= 0}. The
/// tolerance is absolute, scaled by ||x||_max.
CausalClass causal_cone_member(const RealMatrix& x, double tol = 1e-10);

/// Q = S^T (diag(mu) (+) diag(mu)) S with S = random_symplectic(n, seed, radius).
QuadForm sample_form_with_spectrum(const Spectrum& mu, std::uint64_t seed, double radius = 0.5);

}  // namespace hornsp

#endif  // HORNSP_WILLIAMSON_HPP_
