#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <sstream>

#include "hornsp/jacobi.hpp"
#include "hornsp/linalg.hpp"
#include "hornsp/matrix_io.hpp"
#include "hornsp/random.hpp"
#include "hornsp/symplectic.hpp"

using namespace hornsp;

TEST_CASE("sym_eigen on hand-checked matrices") {
  const auto id = sym_eigen(RealSymMatrix::identity(4));
  CHECK(id.values == Spectrum{1, 1, 1, 1});
  CHECK(max_abs(id.vectors.transpose() * id.vectors - RealMatrix::Identity(4, 4)) < 1e-15);

  RealMatrix d(2, 2);
  d << 1, 0, 0, 3;
  const auto dd = sym_eigen(RealSymMatrix(d));
  CHECK(dd.values[0] == 3.0);
  CHECK(dd.values[1] == 1.0);

  // x^2 - 4x + 3 = (x - 3)(x - 1)
  RealMatrix a(2, 2);
  a << 2, 1, 1, 2;
  const auto ea = sym_eigen(RealSymMatrix(a));
  CHECK(ea.values[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ea.values[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("herm_eigen on hand-checked matrices") {
  CHECK(herm_eigen(HermMatrix::identity(3)).values == Spectrum{1, 1, 1});

  ComplexMatrix pauli(2, 2);
  pauli << 0, Complex(0, 1), Complex(0, -1), 0;
  const auto ep = herm_eigen(HermMatrix(pauli));
  CHECK(ep.values[0] == doctest::Approx(1.0));
  CHECK(ep.values[1] == doctest::Approx(-1.0));

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag.diagonal() << 2, 5, -1;
  CHECK(herm_eigen(HermMatrix(diag)).values == Spectrum{5, 2, -1});
}

TEST_CASE("self-adjoint storage mirrors the lower triangle") {
  RealMatrix m(2, 2);
  m << 1, 7, 2, 3;
  const RealSymMatrix s(m);
  CHECK(s(0, 1) == 2.0);
  CHECK(s(1, 0) == 2.0);

  ComplexMatrix c(2, 2);
  c << Complex(1, 5), 0, Complex(2, 1), 3;
  const HermMatrix h(c);
  CHECK(h(0, 1) == Complex(2, -1));
  CHECK(h(0, 0) == Complex(1, 0));
}

TEST_CASE("Spectrum rejects increasing values") {
  CHECK_THROWS_AS(Spectrum({1, 2}), DomainError);
  CHECK(Spectrum::sorted(RealVector::LinSpaced(3, 1, 3)) == Spectrum{3, 2, 1});
}

TEST_CASE("Jacobi agrees with Eigen's solver and meets its residual bounds") {
  for (Index dim = 1; dim <= 12; ++dim) {
    Rng rng = make_rng(11, static_cast<std::uint64_t>(dim));
    for (int trial = 0; trial < 1000; ++trial) {
      const RealSymMatrix m = random_symmetric(dim, rng, 3.0);
      const auto e = sym_eigen(m);
      const double scale = 1.0 + max_abs(m.matrix());
      REQUIRE(max_abs(e.vectors.transpose() * e.vectors - RealMatrix::Identity(dim, dim)) <= 1e-12);
      REQUIRE(max_abs(e.vectors * e.values.values().asDiagonal() * e.vectors.transpose() -
                      m.matrix()) <= 1e-12 * scale);
      Eigen::SelfAdjointEigenSolver<RealMatrix> ref(m.matrix(), Eigen::EigenvaluesOnly);
      REQUIRE(max_abs(RealVector(ref.eigenvalues().reverse()) - e.values.values()) <= 1e-12 * scale);

      const HermMatrix h = random_hermitian(dim, rng);
      const auto eh = herm_eigen(h);
      const double hscale = 1.0 + max_abs(h.matrix());
      REQUIRE(max_abs(eh.vectors.adjoint() * eh.vectors - ComplexMatrix::Identity(dim, dim)) <= 1e-12);
      REQUIRE(max_abs(eh.vectors * eh.values.values().cast<Complex>().asDiagonal() *
                          eh.vectors.adjoint() -
                      h.matrix()) <= 1e-12 * hscale);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> href(h.matrix(), Eigen::EigenvaluesOnly);
      REQUIRE(max_abs(RealVector(href.eigenvalues().reverse()) - eh.values.values()) <= 1e-12 * hscale);
    }
  }
}

TEST_CASE("Jacobi reports non-convergence with its residual") {
  Rng rng = make_rng(3);
  const RealSymMatrix m = random_symmetric(6, rng, 1.0);
  try {
    jacobi_eigen(m, 1e-12, 1);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("psd_sqrt") {
  CHECK(max_abs(psd_sqrt(RealSymMatrix::identity(3)).matrix() - RealMatrix::Identity(3, 3)) < 1e-15);

  RealMatrix d = RealMatrix::Zero(2, 2);
  d.diagonal() << 4, 9;
  const RealSymMatrix rd = psd_sqrt(RealSymMatrix(d));
  CHECK(rd(0, 0) == doctest::Approx(2.0));
  CHECK(rd(1, 1) == doctest::Approx(3.0));
  CHECK(rd(0, 1) == 0.0);

  // Eigenbasis (1,1)/sqrt2, (1,-1)/sqrt2 with eigenvalues 3, 1:
  // R = [[s3 + 1, s3 - 1], [s3 - 1, s3 + 1]] / 2.
  RealMatrix a(2, 2);
  a << 2, 1, 1, 2;
  const RealSymMatrix ra = psd_sqrt(RealSymMatrix(a));
  const double s3 = std::sqrt(3.0);
  CHECK(ra(0, 0) == doctest::Approx((s3 + 1) / 2));
  CHECK(ra(0, 1) == doctest::Approx((s3 - 1) / 2));
  CHECK(max_abs(ra.matrix() * ra.matrix() - a) <= 10 * 1e-12 * 3);

  RealMatrix tiny_negative = RealMatrix::Zero(2, 2);
  tiny_negative.diagonal() << 1, -1e-14;
  CHECK(psd_sqrt(RealSymMatrix(tiny_negative))(1, 1) == 0.0);

  RealMatrix negative = RealMatrix::Zero(2, 2);
  negative.diagonal() << 1, -0.5;
  try {
    psd_sqrt(RealSymMatrix(negative));
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(e.eigenvalue() == doctest::Approx(-0.5));
  }
}

TEST_CASE("psd_sqrt squares back and is itself PSD") {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Index dim = 1 + trial % 8;
    const RealMatrix g = random_symmetric(dim, rng, 1.0).matrix();
    const RealSymMatrix m(g * g.transpose());
    const RealSymMatrix r = psd_sqrt(m);
    REQUIRE(max_abs(r.matrix() * r.matrix() - m.matrix()) <= 10 * 1e-12 * (1 + max_abs(m.matrix())));
    REQUIRE(min_eigenvalue(r) >= -1e-12);
  }
}

TEST_CASE("random_pd contract") {
  CHECK(random_pd(2, 5).matrix() == random_pd(2, 5).matrix());
  CHECK(random_pd(3, 5).matrix() != random_pd(3, 6).matrix());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sym_eigen(random_pd(4, seed, 1e3)).values;
    REQUIRE(s[3] > 0.0);
    REQUIRE(s[0] / s[3] <= 1e3);
  }
  const auto s7 = sym_eigen(random_pd(4, 7, 1e3)).values;
  CHECK(s7[0] / s7[3] <= 1e3);
  CHECK_THROWS_AS(random_pd(0, 1), DomainError);
}

TEST_CASE("expm matches Eigen's matrix exponential") {
  Rng rng = make_rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Index dim = 1 + trial % 6;
    const RealMatrix y = random_symmetric(dim, rng, 2.0).matrix() + RealMatrix::Random(dim, dim);
    const RealMatrix ref = y.exp();
    REQUIRE(max_abs(expm(y) - ref) <= 1e-12 * (1 + max_abs(ref)));
  }
  CHECK(max_abs(expm(RealMatrix::Zero(3, 3)) - RealMatrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("random_symplectic") {
  CHECK(max_abs(random_symplectic(3, 1, 0.0).matrix() - RealMatrix::Identity(6, 6)) == 0.0);
  CHECK(max_abs(random_symplectic(3, 1, 1e-9).matrix() - RealMatrix::Identity(6, 6)) < 1e-8);
  CHECK(random_symplectic(2, 9).matrix() == random_symplectic(2, 9).matrix());

  for (Index n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const double radius = 0.25 * static_cast<double>(1 + seed % 4);
      const SympMatrix s = random_symplectic(n, seed, radius);
      REQUIRE(symplectic_defect(s.matrix()) <= 1e-10 * std::exp(2.0 * n * radius));
    }
  }
}

TEST_CASE("2x2 symplectic exponentials by hand") {
  const double t = 0.7;
  // -J [[0, t], [t, 0]] = diag(t, -t): a hyperbolic scaling.
  RealMatrix off(2, 2);
  off << 0, t, t, 0;
  const SympMatrix scaling = symplectic_exp(RealSymMatrix(off));
  CHECK(scaling.matrix()(0, 0) == doctest::Approx(std::exp(t)));
  CHECK(scaling.matrix()(1, 1) == doctest::Approx(std::exp(-t)));
  CHECK(std::abs(scaling.matrix()(0, 1)) < 1e-15);
  CHECK(symplectic_defect(scaling.matrix()) < 1e-14);

  // -J (t I) = t [[0, 1], [-1, 0]]: a rotation by -t.
  const SympMatrix rotation = symplectic_exp(RealSymMatrix(t * RealMatrix::Identity(2, 2)));
  CHECK(rotation.matrix()(0, 0) == doctest::Approx(std::cos(t)));
  CHECK(rotation.matrix()(0, 1) == doctest::Approx(std::sin(t)));
  CHECK(rotation.matrix()(1, 0) == doctest::Approx(-std::sin(t)));
  CHECK(symplectic_defect(rotation.matrix()) < 1e-14);
}

TEST_CASE("SympMatrix rejects non-symplectic matrices") {
  CHECK_THROWS_AS(SympMatrix(2.0 * RealMatrix::Identity(2, 2)), DomainError);
  CHECK_THROWS_AS(SympMatrix(RealMatrix::Identity(3, 3)), DomainError);
}

TEST_CASE("matrix text entries") {
  CHECK(parse_entry("1.5") == Complex(1.5, 0));
  CHECK(parse_entry("-2e-3") == Complex(-2e-3, 0));
  CHECK(parse_entry("1+2i") == Complex(1, 2));
  CHECK(parse_entry("0.5-1e-3i") == Complex(0.5, -1e-3));
  CHECK(parse_entry("3i") == Complex(0, 3));
  CHECK(parse_entry("-i") == Complex(0, -1));
  CHECK(parse_entry("2+i") == Complex(2, 1));
  CHECK_THROWS_AS(parse_entry("abc"), DomainError);
  CHECK_THROWS_AS(parse_entry("1+2"), DomainError);
  CHECK_THROWS_AS(parse_entry("1x"), DomainError);
}

TEST_CASE("matrix text rejects malformed input") {
  std::istringstream few("2\n1 0\n0\n");
  CHECK_THROWS_AS(parse_complex_matrix(few), DomainError);
  std::istringstream extra("1\n1 2\n");
  CHECK_THROWS_AS(parse_complex_matrix(extra), DomainError);
  std::istringstream nodim("x\n");
  CHECK_THROWS_AS(parse_complex_matrix(nodim), DomainError);
  std::istringstream complex_in_real("1\n1+1i\n");
  CHECK_THROWS_AS(parse_real_matrix(complex_in_real), DomainError);
}

TEST_CASE("matrix text print/parse is lossless") {
  Rng rng = make_rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 1 + trial % 5;
    const RealMatrix r = RealMatrix::Random(dim, dim) * std::pow(10.0, trial % 7 - 3);
    std::istringstream rin(format_matrix(r));
    REQUIRE(parse_real_matrix(rin) == r);

    const ComplexMatrix c = random_hermitian(dim, rng).matrix() * 1e-5 + random_unitary(dim, rng);
    std::istringstream cin(format_matrix(c));
    REQUIRE(parse_complex_matrix(cin) == c);
  }
}
