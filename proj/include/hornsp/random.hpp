#ifndef HORNSP_RANDOM_HPP_
#define HORNSP_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "hornsp/core.hpp"

namespace hornsp {

using Rng = std::mt19937_64;

/// Independent generator for sub-stream `stream` of `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Deterministic child seed for sub-stream `stream` of `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Random symmetric positive definite matrix with condition number at most
/// `condition_cap`; rejection-samples until the cap holds.
RealSymMatrix random_pd(Index dim, std::uint64_t seed, double condition_cap = 1e4);

/// Symmetric matrix with entries uniform in [-radius, radius].
RealSymMatrix random_symmetric(Index dim, Rng& rng, double radius);

/// Hermitian matrix with standard complex Gaussian entries (GUE-like).
HermMatrix random_hermitian(Index dim, Rng& rng);

/// Hermitian positive semidefinite matrix G G^H with `rank` Gaussian columns.
HermMatrix random_hermitian_psd(Index dim, Rng& rng, Index rank);

/// Haar-distributed unitary matrix.
ComplexMatrix random_unitary(Index dim, Rng& rng);

}  // namespace hornsp

#endif  // HORNSP_RANDOM_HPP_
