#include "doctest.h"

#include <numbers>

#include <Eigen/LU>

#include "fixtures.hpp"
#include "qmc/errors.hpp"
#include "qmc/linalg.hpp"

using namespace qmc;
using qmc::test::diag;
using qmc::test::mat2;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("frobenius inner product") {
  const ComplexMatrix id = linalg::identity(2);
  CHECK(std::abs(linalg::frobenius_inner(id, id) - 2.0) < 1e-15);
  CHECK(std::abs(linalg::frobenius_inner(catalog::pauli_z(), id)) < 1e-15);
  // conj(1) * i from the single shared nonzero entry
  CHECK(std::abs(linalg::frobenius_inner(mat2(0, 1, 0, 0), mat2(0, I, 0, 0)) - I) < 1e-15);
  CHECK_THROWS_AS(linalg::frobenius_inner(id, linalg::identity(3)), DimensionError);
}

TEST_CASE("frobenius inner product is sesquilinear and Hermitian") {
  catalog::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const ComplexMatrix x = test::random_matrix(n, n, rng);
    const ComplexMatrix y = test::random_matrix(n, n, rng);
    const ComplexMatrix w = test::random_matrix(n, n, rng);
    const cplx a(0.3, -1.2), b(-0.7, 0.4);
    const cplx lhs = linalg::frobenius_inner(x, a * y + b * w);
    const cplx rhs = a * linalg::frobenius_inner(x, y) + b * linalg::frobenius_inner(x, w);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    CHECK(std::abs(linalg::frobenius_inner(x, y) - std::conj(linalg::frobenius_inner(y, x))) < 1e-12);
    const cplx xx = linalg::frobenius_inner(x, x);
    CHECK(std::abs(xx.imag()) < 1e-12);
    CHECK(xx.real() >= 0.0);
    CHECK(std::abs(std::pow(linalg::frobenius_norm(x), 2) - xx.real()) < 1e-12 * xx.real());
  }
}

TEST_CASE("frobenius norm") {
  CHECK(linalg::frobenius_norm(linalg::identity(5)) == doctest::Approx(std::sqrt(5.0)));
  CHECK(linalg::frobenius_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK(linalg::frobenius_norm(mat2(1, 1, 1, 1)) == doctest::Approx(2.0));
}

TEST_CASE("kron") {
  CHECK(linalg::kron(linalg::identity(2), linalg::identity(2)).isApprox(linalg::identity(4)));
  const ComplexMatrix z = catalog::pauli_z();
  CHECK((linalg::kron(z, z) - diag({1, -1, -1, 1})).norm() == 0.0);
  const ComplexMatrix k = linalg::kron(ComplexMatrix::Ones(2, 3), ComplexMatrix::Ones(3, 2));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
}

TEST_CASE("vec stacks columns and unvec inverts it") {
  const ComplexMatrix x = mat2(1, 2, 3, 4);
  const ComplexVector v = linalg::vec(x);
  REQUIRE(v.size() == 4);
  CHECK(v(0) == cplx(1));
  CHECK(v(1) == cplx(3));
  CHECK(v(2) == cplx(2));
  CHECK(v(3) == cplx(4));

  catalog::Rng rng(3);
  const ComplexMatrix r = test::random_matrix(3, 3, rng);
  CHECK(linalg::unvec(linalg::vec(r), 3, 3) == r);
  CHECK_THROWS_AS(linalg::unvec(v, 3, 2), DimensionError);
}

TEST_CASE("vec(A X B) = kron(B^T, A) vec(X)") {
  catalog::Rng rng(5);
  const ComplexMatrix z = catalog::pauli_z();
  const ComplexMatrix x2 = test::random_matrix(2, 2, rng);
  CHECK((linalg::vec(z * x2 * z) - linalg::kron(z.transpose(), z) * linalg::vec(x2)).norm() < 1e-12);
  for (Eigen::Index n = 2; n <= 4; ++n) {
    const ComplexMatrix a = test::random_matrix(n, n, rng);
    const ComplexMatrix x = test::random_matrix(n, n, rng);
    const ComplexMatrix b = test::random_matrix(n, n, rng);
    const ComplexVector lhs = linalg::vec(a * x * b);
    const ComplexVector rhs = linalg::kron(b.transpose(), a) * linalg::vec(x);
    CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
  }
}

TEST_CASE("eig on closed-form spectra") {
  auto sorted = [](std::vector<cplx> v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
  };
  {
    const auto e = sorted(linalg::eig(diag({1, -1})).eigenvalues);
    CHECK(std::abs(e[0] + 1.0) < 1e-14);
    CHECK(std::abs(e[1] - 1.0) < 1e-14);
  }
  {
    const ComplexMatrix z = catalog::pauli_z();
    const auto e = sorted(linalg::eig(linalg::kron(z, z)).eigenvalues);
    CHECK(std::abs(e[0] + 1.0) < 1e-14);
    CHECK(std::abs(e[1] + 1.0) < 1e-14);
    CHECK(std::abs(e[2] - 1.0) < 1e-14);
    CHECK(std::abs(e[3] - 1.0) < 1e-14);
  }
  {
    // rotation by pi/3: lambda^2 - lambda + 1 = 0
    const double s = std::sqrt(3.0) / 2.0;
    const auto e = sorted(linalg::eig(mat2(0.5, -s, s, 0.5)).eigenvalues);
    CHECK(std::abs(e[0] - cplx(0.5, -s)) < 1e-14);
    CHECK(std::abs(e[1] - cplx(0.5, s)) < 1e-14);
  }
  CHECK_THROWS_AS(linalg::eig(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("eig: Schur reconstruction, trace and determinant on random matrices") {
  catalog::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 1 + trial % 16;
    const ComplexMatrix m = test::random_matrix(n, n, rng);
    const auto r = linalg::eig(m);
    REQUIRE(r.eigenvalues.size() == static_cast<std::size_t>(n));
    CHECK(r.residual <= 1e-10 * m.norm());
    cplx sum = 0.0, prod = 1.0;
    for (cplx l : r.eigenvalues) sum += l, prod *= l;
    CHECK(std::abs(sum - m.trace()) <= 1e-8 * std::max(1.0, std::abs(m.trace())));
    const cplx det = m.determinant();  // LU route
    CHECK(std::abs(prod - det) <= 1e-8 * std::abs(det));
  }
}

TEST_CASE("nullspace") {
  CHECK(linalg::nullspace(linalg::identity(2)).empty());

  const auto k1 = linalg::nullspace(diag({1, 0}));
  REQUIRE(k1.size() == 1);
  CHECK(std::abs(std::abs(k1[0](1)) - 1.0) < 1e-14);
  CHECK(std::abs(k1[0](0)) < 1e-14);

  const ComplexMatrix z = catalog::pauli_z();
  const ComplexMatrix m = linalg::kron(z, z) - linalg::identity(4);
  const auto k2 = linalg::nullspace(m);
  REQUIRE(k2.size() == 2);
  std::vector<ComplexVector> expected{ComplexVector::Unit(4, 0), ComplexVector::Unit(4, 3)};
  CHECK(linalg::subspace_distance(k2, expected, 4) < 1e-14);

  // wide matrix: kernel includes the columns beyond the row count
  CHECK(linalg::nullspace(ComplexMatrix::Ones(1, 3)).size() == 2);
  CHECK(linalg::nullspace(ComplexMatrix::Zero(2, 2)).size() == 2);
}

TEST_CASE("nullspace vectors are annihilated within the tolerance") {
  catalog::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    // rank-deficient product of thin factors
    const Eigen::Index n = 4 + trial % 5;
    const Eigen::Index r = 1 + trial % 3;
    const ComplexMatrix m = test::random_matrix(n, r, rng) * test::random_matrix(r, n, rng);
    const double tol = 1e-10;
    const double smax = linalg::spectral_norm(m);
    const auto basis = linalg::nullspace(m, tol);
    CHECK(basis.size() == static_cast<std::size_t>(n - r));
    for (const auto& v : basis) CHECK((m * v).norm() <= 10.0 * tol * smax);
  }
}

TEST_CASE("gram_schmidt under the Frobenius inner product") {
  const ComplexMatrix id = linalg::identity(2);
  const ComplexMatrix z = catalog::pauli_z();
  {
    const auto q = linalg::gram_schmidt(std::vector<ComplexMatrix>{id});
    REQUIRE(q.size() == 1);
    CHECK((q[0] - id / std::sqrt(2.0)).norm() < 1e-15);
  }
  {
    const auto q = linalg::gram_schmidt(std::vector<ComplexMatrix>{id, z});
    REQUIRE(q.size() == 2);
    CHECK((q[0] - id / std::sqrt(2.0)).norm() < 1e-15);
    CHECK((q[1] - z / std::sqrt(2.0)).norm() < 1e-15);
  }
  CHECK(linalg::gram_schmidt(std::vector<ComplexMatrix>{id, id}).size() == 1);

  catalog::Rng rng(29);
  std::vector<ComplexMatrix> vs;
  for (int i = 0; i < 6; ++i) vs.push_back(test::random_matrix(3, 3, rng));
  vs.push_back(vs[0] + 2.0 * vs[3]);
  const auto q = linalg::gram_schmidt(vs);
  CHECK(q.size() == 6);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      const cplx ip = linalg::frobenius_inner(q[i], q[j]);
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("cluster_values groups by single linkage") {
  const std::vector<cplx> v{1.0, 1.0 + 5e-8, 0.5, 1.0 + 1.4e-7, -1.0};
  const auto label = linalg::cluster_values(v, 1e-7);
  CHECK(label[0] == label[1]);
  CHECK(label[1] == label[3]);  // chained through the middle value
  CHECK(label[2] != label[0]);
  CHECK(label[4] != label[0]);
  CHECK(label[4] != label[2]);
}
