#include "hornsp/random.hpp"

#include <Eigen/QR>

#include "hornsp/jacobi.hpp"

namespace hornsp {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

RealMatrix gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  RealMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = normal(rng);
  }
  return g;
}

ComplexMatrix complex_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      g(i, j) = Complex(re, normal(rng));
    }
  }
  return g;
}

}  // namespace

RealSymMatrix random_pd(Index dim, std::uint64_t seed, double condition_cap) {
  if (dim < 1) throw DomainError("random_pd: dimension must be positive");
  if (!(condition_cap > 1.0)) throw DomainError("random_pd: condition cap must exceed 1");
  Rng rng = make_rng(seed, 0x5044);
  for (;;) {
    const RealMatrix g = gaussian(dim, dim, rng);
    RealSymMatrix m(g * g.transpose() / static_cast<double>(dim));
    const Spectrum s = sym_eigen(m).values;
    const double lo = s[dim - 1];
    if (lo > 0.0 && s[0] / lo <= condition_cap) return m;
  }
}

RealSymMatrix random_symmetric(Index dim, Rng& rng, double radius) {
  std::uniform_real_distribution<double> uniform(-radius, radius);
  RealMatrix r(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = j; i < dim; ++i) r(i, j) = uniform(rng);
  }
  return RealSymMatrix(r);
}

HermMatrix random_hermitian(Index dim, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(dim, dim, rng);
  return HermMatrix((g + g.adjoint()) / 2.0);
}

HermMatrix random_hermitian_psd(Index dim, Rng& rng, Index rank) {
  const ComplexMatrix g = complex_gaussian(dim, rank, rng);
  return HermMatrix(g * g.adjoint());
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Index k = 0; k < dim; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0.0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

}  // namespace hornsp
