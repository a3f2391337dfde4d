#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "hornsp/jacobi.hpp"
#include "hornsp/random.hpp"
#include "hornsp/williamson.hpp"

using namespace hornsp;

namespace {

double rel_err(const Spectrum& a, const Spectrum& b) {
  return max_abs(a.values() - b.values()) / max_abs(b.values());
}

QuadForm form_2x2(double a, double b, double c) {
  // q = a x1^2 + b x2^2 + c x1 x2
  RealMatrix m(2, 2);
  m << a, c / 2, c / 2, b;
  return QuadForm(RealSymMatrix(m));
}

}  // namespace

TEST_CASE("j_matrix") {
  RealMatrix j1(2, 2);
  j1 << 0, -1, 1, 0;
  CHECK(j_matrix(1) == j1);
  const RealMatrix j3 = j_matrix(3);
  CHECK(j3 * j3 == -RealMatrix::Identity(6, 6));
  const RealMatrix j2 = j_matrix(2);
  CHECK(RealMatrix(j2.transpose()) == -j2);
}

TEST_CASE("QuadForm requires an even-dimensional positive definite matrix") {
  CHECK_THROWS_AS(QuadForm(RealSymMatrix::identity(3)), DomainError);
  RealMatrix indefinite = RealMatrix::Identity(2, 2);
  indefinite(1, 1) = -1;
  CHECK_THROWS_AS(QuadForm(RealSymMatrix(indefinite)), DomainError);
}

// With q(v) = v^T Q v the cross term c x1 x2 sits as c/2 off the diagonal;
// this pins that storage convention against the n = 1 closed form.
TEST_CASE("storage convention reproduces the n = 1 closed form") {
  const double a = 3, b = 2, c = 1;
  CHECK(symplectic_eigenvalues(form_2x2(a, b, c))[0] ==
        doctest::Approx(0.5 * std::sqrt(4 * a * b - c * c)).epsilon(1e-14));
  CHECK(symplectic_eigenvalues(form_2x2(2, 8, 0))[0] == doctest::Approx(4.0));
}

TEST_CASE("symplectic_eigenvalues of simple forms") {
  for (Index n = 1; n <= 4; ++n) {
    const Spectrum s = symplectic_eigenvalues(QuadForm(RealSymMatrix::identity(2 * n)));
    CHECK(max_abs(s.values() - RealVector::Ones(n)) < 1e-14);
  }
  const QuadForm d(RealSymMatrix(doubled_diagonal(Spectrum{3, 2}.values())));
  CHECK(rel_err(symplectic_eigenvalues(d), Spectrum{3, 2}) < 1e-14);
}

TEST_CASE("n = 1 closed form over random 2x2 forms") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RealSymMatrix m = random_pd(2, seed);
    const double a = m(0, 0), b = m(1, 1), c = 2 * m(0, 1);
    const double expected = 0.5 * std::sqrt(4 * a * b - c * c);
    REQUIRE(std::abs(symplectic_eigenvalues(QuadForm(m))[0] - expected) <= 1e-10 * expected);
  }
}

TEST_CASE("symplectic spectrum is a congruence invariant") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 4);
    const QuadForm q(random_pd(2 * n, seed));
    const RealMatrix s = random_symplectic(n, seed + 1000, 0.4).matrix();
    const QuadForm moved(RealSymMatrix(s.transpose() * q.matrix() * s));
    REQUIRE(rel_err(symplectic_eigenvalues(moved), symplectic_eigenvalues(q)) <= 1e-7);
  }
}

TEST_CASE("scaling covariance and determinant consistency") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 4);
    const QuadForm q(random_pd(2 * n, seed));
    const Spectrum s = symplectic_eigenvalues(q);
    const double t = 0.1 + 0.05 * static_cast<double>(seed % 40);
    const Spectrum st = symplectic_eigenvalues(QuadForm(t * q.sym()));
    REQUIRE(max_abs(st.values() - t * s.values()) <= 1e-10 * t * s[0]);

    const double det = q.matrix().determinant();
    const double prod = s.values().array().square().prod();
    REQUIRE(std::abs(prod - det) <= 1e-8 * det);
  }
}

TEST_CASE("williamson_decompose by hand at n = 1") {
  RealMatrix q(2, 2);
  q << 2, 0, 0, 0.5;
  const WilliamsonDecomp w = williamson_decompose(QuadForm(RealSymMatrix(q)));
  CHECK(w.spectrum[0] == doctest::Approx(1.0));
  // Columns are determined up to an SO(2) rotation of the normal form; the
  // expected basis is diag(2^{-1/2}, 2^{1/2}).
  CHECK(std::abs(w.basis.matrix()(0, 0)) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(w.basis.matrix()(1, 1)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(w.basis.matrix()(0, 1)) < 1e-14);
  CHECK(max_abs(w.basis.matrix().transpose() * q * w.basis.matrix() - RealMatrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("williamson_decompose of the identity") {
  const WilliamsonDecomp w = williamson_decompose(QuadForm(RealSymMatrix::identity(6)));
  CHECK(max_abs(w.spectrum.values() - RealVector::Ones(3)) < 1e-14);
  CHECK(max_abs(w.basis.matrix().transpose() * w.basis.matrix() - RealMatrix::Identity(6, 6)) < 1e-12);
}

TEST_CASE("williamson_decompose reconstructs, including repeated spectra") {
  const Spectrum degenerate[] = {{2, 2}, {3, 1, 1}, {1, 1, 1, 1}, {5, 5, 2, 2}, {4, 2, 2, 1}};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 4);
    QuadForm q = (seed % 3 == 0)
                     ? [&] {
                         for (const Spectrum& mu : degenerate) {
                           if (mu.size() == n) return sample_form_with_spectrum(mu, seed, 0.6);
                         }
                         return sample_form_with_spectrum(Spectrum::sorted(RealVector::Ones(n)), seed);
                       }()
                     : QuadForm(random_pd(2 * n, seed));
    const WilliamsonDecomp w = williamson_decompose(q);
    const RealMatrix& s = w.basis.matrix();
    REQUIRE(max_abs(s.transpose() * q.matrix() * s - doubled_diagonal(w.spectrum.values())) <=
            1e-8 * max_abs(q.matrix()));
    REQUIRE(symplectic_defect(s) <= 1e-8);
    REQUIRE(rel_err(w.spectrum, symplectic_eigenvalues(q)) <= 1e-12);
  }
}

TEST_CASE("sample_form_with_spectrum") {
  const Spectrum mu{3, 1};
  const QuadForm flat = sample_form_with_spectrum(mu, 4, 0.0);
  CHECK(flat.matrix() == doubled_diagonal(mu.values()));
  CHECK(sample_form_with_spectrum(mu, 4).matrix() == sample_form_with_spectrum(mu, 4).matrix());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    REQUIRE(rel_err(symplectic_eigenvalues(sample_form_with_spectrum(mu, seed)), mu) <= 1e-7);
  }
  CHECK_THROWS_AS(sample_form_with_spectrum(Spectrum{1, 0}, 1), DomainError);
}

TEST_CASE("x_of_mu and the causal cone") {
  RealMatrix x1(2, 2);
  x1 << 0, 1, -1, 0;
  CHECK(x_of_mu(Spectrum{1}) == x1);
  CHECK(x_of_mu(Spectrum{0, 0}) == RealMatrix::Zero(4, 4));
  const Spectrum mu{2, 1};
  CHECK(j_matrix(2) * x_of_mu(mu) == doubled_diagonal(mu.values()));

  CHECK(causal_cone_member(-j_matrix(2)) == CausalClass::inside_interior);
  CHECK(causal_cone_member(j_matrix(2)) == CausalClass::outside);
  CHECK(causal_cone_member(x_of_mu(mu)) == CausalClass::inside_interior);
  CHECK(causal_cone_member(x_of_mu(Spectrum{1, 0})) == CausalClass::boundary);
  CHECK(causal_cone_member(RealMatrix::Identity(4, 4)) == CausalClass::not_in_sp);
  CHECK(causal_cone_member(RealMatrix::Zero(2, 2)) == CausalClass::boundary);
}

// For M = g X(mu) g^{-1} with g symplectic, the form v^T J M v has symplectic
// spectrum mu, and M stays in the open causal cone.
TEST_CASE("adjoint orbit of X(mu) carries symplectic spectrum mu") {
  const Spectrum mu{3, 1.5, 0.25};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RealMatrix g = random_symplectic(3, seed, 0.5).matrix();
    const RealMatrix m = g * x_of_mu(mu) * g.inverse();
    CHECK(causal_cone_member(m) == CausalClass::inside_interior);
    const QuadForm q(RealSymMatrix(j_matrix(3) * m));
    REQUIRE(rel_err(symplectic_eigenvalues(q), mu) <= 1e-9);
  }
}

TEST_CASE("pairing failure is reported") {
  // The doubled eigenvalues of -K^2 agree only to round-off, so a pairing
  // tolerance below machine precision cannot be met.
  const QuadForm q(random_pd(6, 12));
  CHECK_NOTHROW(symplectic_eigenvalues(q, 1e-3));
  CHECK_THROWS_AS(symplectic_eigenvalues(q, 1e-300), ConsistencyError);
}
