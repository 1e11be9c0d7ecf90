#include <doctest.h>

#include <cmath>

#include "eqcmm/gram_schmidt.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace eqcmm;
using testkit::sv;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix keys_matrix(const std::vector<StateVector>& keys) {
  ComplexMatrix x(keys.front().size(), static_cast<Eigen::Index>(keys.size()));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    x.col(static_cast<Eigen::Index>(k)) = keys[k];
  }
  return x;
}

}  // namespace

TEST_CASE("orthonormal input passes through") {
  const auto f = gram_schmidt({sv({1, 0}), sv({0, 1})});
  CHECK(f.rank == 2);
  CHECK(f.dropped.empty());
  CHECK((f.Z - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((f.R - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("worked two-key factorization") {
  const auto f =
      gram_schmidt({sv({1, 0}), sv({kInvSqrt2, kInvSqrt2})});
  CHECK(f.rank == 2);
  CHECK((f.Z - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(f.R(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(f.R(0, 1) - Complex(kInvSqrt2, 0)) < 1e-15);
  CHECK(std::abs(f.R(1, 0)) == 0.0);
  CHECK(std::abs(f.R(1, 1) - Complex(kInvSqrt2, 0)) < 1e-15);
}

TEST_CASE("collinear pair is dropped with coefficients kept") {
  const auto f = gram_schmidt({sv({1, 0}), sv({2, 0})});
  CHECK(f.rank == 1);
  REQUIRE(f.dropped.size() == 1);
  CHECK(f.dropped[0] == 2);
  CHECK(f.Z.cols() == 1);
  // dropped column still reconstructs through its projection coefficient
  const ComplexMatrix x = reconstruct(f);
  CHECK(std::abs(x(0, 1) - Complex(2, 0)) < 1e-15);
}

TEST_CASE("q = m+1 keys always lose one to the rank bound") {
  for (int m : {2, 4, 8}) {
    const auto keys = testkit::haar_keys(m, m + 1, 77 + m);
    const auto f = gram_schmidt(keys);
    CHECK(f.rank <= m);
    CHECK(f.dropped.size() >= 1);
    CHECK(oracle::rank_row_reduction(keys_matrix(keys)) == f.rank);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(gram_schmidt({}), DomainError);
  CHECK_THROWS_AS(gram_schmidt({sv({1, 0})}, GSMode::Modified, 0.0), DomainError);
  CHECK_THROWS_AS(gram_schmidt({sv({0, 0}), sv({1, 0})}), ZeroVectorError);
  CHECK_THROWS_AS(gram_schmidt({sv({1, 0}), sv({1, 0, 0})}), ShapeError);
  // a tolerance above 1 rejects even an exact basis
  CHECK_THROWS_AS(gram_schmidt({sv({1, 0})}, GSMode::Modified, 2.0),
                  DegenerateSetError);
}

TEST_CASE("orthonormality residual") {
  CHECK(orthonormality_residual(ComplexMatrix::Identity(2, 2)) == 0.0);
  const std::vector<StateVector> skewed{sv({1, 0}), sv({kInvSqrt2, kInvSqrt2})};
  CHECK(std::abs(orthonormality_residual(skewed) - kInvSqrt2) < 1e-15);
  const auto f = gram_schmidt(testkit::haar_keys(24, 16, 5));
  CHECK(orthonormality_residual(f.Z) <= 1e-10);
}

TEST_CASE("reconstruction matches the input keys") {
  const std::vector<StateVector> keys{sv({1, 0}), sv({kInvSqrt2, kInvSqrt2})};
  const ComplexMatrix x = reconstruct(gram_schmidt(keys));
  CHECK((x.col(0) - keys[0]).norm() <= 1e-12);
  CHECK((x.col(1) - keys[1]).norm() <= 1e-12);
}

TEST_CASE("factorization and span preservation across conditionings") {
  for (double kappa : {1e2, 1e6}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const int m = 48, q = 32;
      const auto keys = testkit::conditioned_keys(m, q, kappa, seed);
      const auto f = gram_schmidt(keys);
      CHECK(orthonormality_residual(f.Z) <= 1e-10);
      const ComplexMatrix x = reconstruct(f);
      for (int k = 0; k < q; ++k) {
        const double knorm = std::sqrt(energy(keys[k]));
        CHECK((x.col(k) - keys[k]).norm() <= 1e-10 * knorm);
        // every key, dropped or not, stays inside span(Z)
        const StateVector resid = keys[k] - f.Z * (f.Z.adjoint() * keys[k]);
        CHECK(resid.norm() <= 10 * f.tol * knorm);
      }
    }
  }
}

TEST_CASE("classical and modified agree on well-conditioned sets") {
  const auto keys = testkit::conditioned_keys(20, 12, 1e3, 9);
  const auto fc = gram_schmidt(keys, GSMode::Classical);
  const auto fm = gram_schmidt(keys, GSMode::Modified);
  REQUIRE(fc.rank == fm.rank);
  for (int k = 0; k < fc.rank; ++k) {
    CHECK((fc.Z.col(k) - fm.Z.col(k)).norm() <= 1e-8);
  }
}

TEST_CASE("modified beats classical on the Hilbert family") {
  const auto keys = testkit::hilbert_keys(12);
  // tiny tolerance so no column is dropped and both modes emit 12 vectors
  const auto fc = gram_schmidt(keys, GSMode::Classical, 1e-18);
  const auto fm = gram_schmidt(keys, GSMode::Modified, 1e-18);
  REQUIRE(fc.rank == 12);
  REQUIRE(fm.rank == 12);
  CHECK(orthonormality_residual(fm.Z) <= orthonormality_residual(fc.Z));
}

TEST_CASE("reorthogonalization pass tightens the basis") {
  const auto keys = testkit::conditioned_keys(32, 32, 1e6, 3);
  const auto plain = gram_schmidt(keys, GSMode::Modified, kDefaultTol, false);
  const auto twice = gram_schmidt(keys, GSMode::Modified, kDefaultTol, true);
  CHECK(orthonormality_residual(twice.Z) <=
        orthonormality_residual(plain.Z));
  CHECK(orthonormality_residual(twice.Z) <= 1e-14);
  const ComplexMatrix x = reconstruct(twice);
  for (int k = 0; k < 32; ++k) {
    CHECK((x.col(k) - keys[k]).norm() <= 1e-10);
  }
}

TEST_CASE("identical inputs give bit-identical factors") {
  const auto keys = testkit::haar_keys(17, 11, 1234);
  const auto f1 = gram_schmidt(keys);
  const auto f2 = gram_schmidt(keys);
  CHECK(f1.rank == f2.rank);
  CHECK(f1.dropped == f2.dropped);
  CHECK((f1.Z.array() == f2.Z.array()).all());
  CHECK((f1.R.array() == f2.R.array()).all());
}
