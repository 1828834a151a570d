#include <cmath>
#include <random>

#include "doctest.h"

#include "gqc/covariance.hpp"
#include "gqc/errors.hpp"
#include "support/oracles.hpp"

using namespace gqc;

namespace {

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

}  // namespace

TEST_CASE("vacuum covariance") {
  const auto cm = sts_covariance({0.0, 0.0, 0.0});
  CHECK(cm.n == 1.0);
  CHECK(cm.m == 1.0);
  CHECK(cm.c1 == 0.0);
  CHECK(cm.c2 == 0.0);
  CHECK(cm.is_sts_form());
  CHECK(cm.c() == 0.0);
  const auto sp = symplectic_spectrum(cm);
  CHECK(sp.d_plus == 1.0);
  CHECK(sp.d_minus == 1.0);
  CHECK(sp.d_minus_pt == 1.0);
  CHECK(sp.i4 == 1.0);
  CHECK(sp.delta == 2.0);
  CHECK(is_physical(cm));
}

TEST_CASE("pure squeezed state entries") {
  const auto cm = sts_covariance({0.6, 0.0, 0.0});
  CHECK(close(cm.n, 1.8106555673243748, 1e-15));   // cosh(1.2)
  CHECK(cm.m == cm.n);
  CHECK(close(cm.c1, 1.5094613554121727, 1e-15));  // sinh(1.2)
  CHECK(cm.c2 == -cm.c1);
  const auto sp = symplectic_spectrum(cm);
  CHECK(close(sp.d_plus, 1.0, 1e-12));
  CHECK(close(sp.d_minus, 1.0, 1e-12));
  CHECK(close(sp.i4, 1.0, 1e-12));
  CHECK(close(sp.d_minus_pt, 0.3011942119122021, 1e-14));  // exp(-1.2)
  CHECK(is_physical(cm));
}

TEST_CASE("thermal asymmetric state entries") {
  const auto cm = sts_covariance({0.6, 0.0, 1.0});
  CHECK(close(cm.n, 2.6213111346487496, 1e-14));
  CHECK(close(cm.m, 4.6213111346487496, 1e-14));
  CHECK(close(cm.c1, 3.0189227108243454, 1e-14));
  const auto sp = symplectic_spectrum(cm);
  // d- = 2*min(na, nb) + 1 and d+ = na + nb + 1 + |na - nb| hold exactly for
  // this family.
  CHECK(close(sp.d_minus, 1.0, 1e-12));
  CHECK(close(sp.d_plus, 3.0, 1e-12));
  CHECK(close(sp.d_minus_pt, 0.44107618516293932, 1e-13));
  CHECK(is_physical(cm));
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(sts_covariance({-0.1, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sts_covariance({0.5, -1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sts_covariance({0.5, 0.0, -1e-9}), DomainError);
  CHECK_THROWS_AS(sts_covariance({std::nan(""), 0.0, 0.0}), DomainError);
}

TEST_CASE("form detection") {
  CHECK(CovarianceMatrix{1.0, 1.0, 0.5, -0.5}.is_sts_form());
  CHECK_FALSE(CovarianceMatrix{1.0, 1.0, 0.5, 0.5}.is_sts_form());
  CHECK_FALSE(CovarianceMatrix{1.0, 1.0, 0.5, -0.6}.is_sts_form());
  CHECK_THROWS_AS((CovarianceMatrix{1.0, 1.0, 0.5, 0.5}.c()), FormError);
  // A (c, -c) pair survives rounding-scale asymmetry.
  CHECK(CovarianceMatrix{1.0, 1.0, 0.5, -0.5 + 1e-15}.is_sts_form());
}

TEST_CASE("unphysical but positive definite") {
  // d- = sqrt(3)/2 < 1: a PD matrix that no quantum state can have.
  const CovarianceMatrix cm{1.0, 1.0, 0.5, -0.5};
  const auto sp = symplectic_spectrum(cm);
  CHECK(close(sp.d_minus, std::sqrt(3.0) / 2.0, 1e-15));
  CHECK_FALSE(is_physical(cm));
}

TEST_CASE("inconsistent invariants raise") {
  // n != m with correlations far above sqrt(n m): discriminant < -tol.
  CHECK_THROWS_AS(symplectic_spectrum({1.0, 2.0, 3.0, -3.0}), NumericError);
  CHECK_FALSE(is_physical({1.0, 2.0, 3.0, -3.0}));
  CHECK_FALSE(is_physical({0.0, 1.0, 0.0, 0.0}));
  CHECK_FALSE(is_physical({std::nan(""), 1.0, 0.0, 0.0}));
}

TEST_CASE("squeezed thermal states are always physical") {
  std::mt19937_64 rng(830254u);
  for (int i = 0; i < 10000; ++i) {
    const auto cm = sts_covariance(test::random_sts(rng));
    const auto sp = symplectic_spectrum(cm);
    CHECK(sp.d_minus >= 1.0 - 1e-9);
    // d+ d- = sqrt(i4) = n m - c^2
    const double prod = sp.d_plus * sp.d_minus;
    CHECK(close(prod, std::sqrt(sp.i4), 1e-9 * std::max(1.0, prod)));
    CHECK(is_physical(cm));
  }
}

TEST_CASE("exchange symmetry of the family") {
  std::mt19937_64 rng(417u);
  for (int i = 0; i < 1000; ++i) {
    const auto p = test::random_sts(rng);
    const auto ab = sts_covariance(p);
    const auto ba = sts_covariance({p.r, p.nb, p.na});
    CHECK(ab.n == ba.m);
    CHECK(ab.m == ba.n);
    CHECK(ab.c1 == ba.c1);
    const auto sab = symplectic_spectrum(ab);
    const auto sba = symplectic_spectrum(ba);
    CHECK(sab.d_minus == sba.d_minus);
    CHECK(sab.d_plus == sba.d_plus);
    CHECK(sab.d_minus_pt == sba.d_minus_pt);
  }
}

#ifdef GQC_HAVE_EIGEN
TEST_CASE("spectrum matches a dense eigensolver") {
  std::mt19937_64 rng(20240915u);
  for (int i = 0; i < 1200; ++i) {
    const CovarianceMatrix cm = test::random_pd_cm(rng);
    const auto sp = symplectic_spectrum(cm);
    const auto ref = test::eigen_spectrum(cm);
    const auto ref_pt = test::eigen_spectrum_pt(cm);
    CHECK(close(sp.d_plus, ref.d_plus, 1e-9 * std::max(1.0, ref.d_plus)));
    CHECK(close(sp.d_minus, ref.d_minus, 1e-9 * std::max(1.0, ref.d_minus)));
    CHECK(close(sp.d_minus_pt, ref_pt.d_minus,
                1e-9 * std::max(1.0, ref_pt.d_minus)));
  }
  // The factored (c, -c) branch against the same oracle.
  for (int i = 0; i < 1200; ++i) {
    const auto cm = sts_covariance(test::random_sts(rng));
    const auto sp = symplectic_spectrum(cm);
    const auto ref = test::eigen_spectrum(cm);
    const auto ref_pt = test::eigen_spectrum_pt(cm);
    CHECK(close(sp.d_plus, ref.d_plus, 1e-9 * std::max(1.0, ref.d_plus)));
    CHECK(close(sp.d_minus, ref.d_minus, 1e-9 * std::max(1.0, ref.d_minus)));
    CHECK(close(sp.d_minus_pt, ref_pt.d_minus,
                1e-9 * std::max(1.0, ref_pt.d_minus)));
  }
}
#endif
