#include "gqc/covariance.hpp"

#include <algorithm>
#include <cmath>

#include "gqc/errors.hpp"

namespace gqc {

namespace {

constexpr double kFormTol = 1e-12;
constexpr double kDiscTol = 1e-9;

}  // namespace

bool CovarianceMatrix::is_sts_form() const {
  const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
  return std::abs(c1 + c2) <= kFormTol * scale;
}

double CovarianceMatrix::c() const {
  if (!is_sts_form())
    throw FormError("cross correlations are not a (c, -c) pair");
  return c1;
}

CovarianceMatrix sts_covariance(const StsParams& params) {
  if (!std::isfinite(params.r) || !std::isfinite(params.na) ||
      !std::isfinite(params.nb) || params.r < 0.0 || params.na < 0.0 ||
      params.nb < 0.0)
    throw DomainError("squeezed thermal parameters must be finite and non-negative");
  const double ch = std::cosh(params.r);
  const double sh = std::sinh(params.r);
  const double ch2 = ch * ch;
  const double sh2 = sh * sh;
  const double c = (params.na + params.nb + 1.0) * std::sinh(2.0 * params.r);
  return {(2.0 * params.na + 1.0) * ch2 + (2.0 * params.nb + 1.0) * sh2,
          (2.0 * params.nb + 1.0) * ch2 + (2.0 * params.na + 1.0) * sh2,
          c, -c};
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  const double n = cm.n;
  const double m = cm.m;
  SymplecticSpectrum sp{};
  sp.i1 = n * n;
  sp.i2 = m * m;
  sp.i3 = cm.c1 * cm.c2;

  if (cm.is_sts_form()) {
    // delta^2 - 4*i4 == (n - m)^2 * ((n + m)^2 - 4c^2) when c2 = -c1.  The
    // factored form has no cancellation, so a degenerate spectrum stays
    // degenerate instead of splitting by sqrt(eps).
    const double c = cm.c1;
    const double p = (n + m - 2.0 * c) * (n + m + 2.0 * c);
    const double q = (n - m) * (n - m);
    const double w = 0.25 * (p - q);  // n*m - c^2
    sp.i4 = w * w;
    sp.delta = 0.5 * (p + q);
    if (p * q < -kDiscTol)
      throw NumericError("symplectic discriminant negative beyond tolerance");
    const double sqp = std::sqrt(std::max(p, 0.0));
    const double sqq = std::abs(n - m);
    sp.d_plus = 0.5 * (sqp + sqq);
    sp.d_minus = 0.5 * std::abs(sqp - sqq);
  } else {
    sp.i4 = (n * m - cm.c1 * cm.c1) * (n * m - cm.c2 * cm.c2);
    sp.delta = sp.i1 + sp.i2 + 2.0 * sp.i3;
    const double disc = sp.delta * sp.delta - 4.0 * sp.i4;
    if (disc < -kDiscTol)
      throw NumericError("symplectic discriminant negative beyond tolerance");
    const double root = std::sqrt(std::max(disc, 0.0));
    const double big = 0.5 * (sp.delta + root);
    sp.d_plus = std::sqrt(std::max(big, 0.0));
    // d_minus^2 = i4 / d_plus^2 avoids the subtractive form delta - root.
    sp.d_minus = big > 0.0 ? std::sqrt(std::max(sp.i4 / big, 0.0)) : 0.0;
  }

  // Partial transposition flips the sign of i3 and keeps i4.
  const double delta_pt = sp.i1 + sp.i2 - 2.0 * sp.i3;
  double disc_pt;
  if (cm.is_sts_form()) {
    // delta_pt^2 - 4*i4 == ((n - m)^2 + 4c^2) * (n + m)^2, again exact.
    const double c = cm.c1;
    disc_pt = ((n - m) * (n - m) + 4.0 * c * c) * ((n + m) * (n + m));
  } else {
    disc_pt = delta_pt * delta_pt - 4.0 * sp.i4;
    if (disc_pt < -kDiscTol)
      throw NumericError("transposed symplectic discriminant negative beyond tolerance");
  }
  const double root_pt = std::sqrt(std::max(disc_pt, 0.0));
  const double big_pt = 0.5 * (delta_pt + root_pt);
  sp.d_minus_pt = big_pt > 0.0 ? std::sqrt(std::max(sp.i4 / big_pt, 0.0)) : 0.0;
  return sp;
}

bool is_physical(const CovarianceMatrix& cm) {
  if (!std::isfinite(cm.n) || !std::isfinite(cm.m) || !std::isfinite(cm.c1) ||
      !std::isfinite(cm.c2))
    return false;
  if (!(cm.n > 0.0 && cm.m > 0.0)) return false;
  if (!(cm.n * cm.m - cm.c1 * cm.c1 > 0.0)) return false;
  if (!(cm.n * cm.m - cm.c2 * cm.c2 > 0.0)) return false;
  try {
    return symplectic_spectrum(cm).d_minus >= 1.0 - 1e-12;
  } catch (const NumericError&) {
    return false;
  }
}

}  // namespace gqc
