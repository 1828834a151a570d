#include "gqc/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "gqc/errors.hpp"
#include "gqc/measures.hpp"

namespace gqc {

namespace {

void check_noise(double na, double nb) {
  if (!std::isfinite(na) || !std::isfinite(nb) || na < 0.0 || nb < 0.0)
    throw DomainError("thermal occupations must be finite and non-negative");
}

// r with cosh^2 r = csq; 0 when the criterion already holds at r -> 0+.
double arccosh_sq(double csq) {
  if (csq <= 1.0) return 0.0;
  return std::acosh(std::sqrt(csq));
}

// Signed margin of a criterion at squeezing r: positive while the criterion
// fails, negative once it holds.  Strictly decreasing in r for every
// criterion of this family.
double margin(double na, double nb, ThresholdCriterion criterion, double r) {
  const auto cm = sts_covariance({r, na, nb});
  switch (criterion) {
    case ThresholdCriterion::EntPpt:
      return ent_ppt(cm);
    case ThresholdCriterion::SteerAb:
      return steering(cm, Direction::AGivenB).value - 1.0;
    case ThresholdCriterion::SteerBa:
      return steering(cm, Direction::BGivenA).value - 1.0;
    case ThresholdCriterion::DuanQt:
      return duan(cm) - 1.0;
    case ThresholdCriterion::DuanSt:
      return duan(cm) - 0.5;
  }
  throw DomainError("unknown threshold criterion");
}

}  // namespace

ThresholdSet closed_form_thresholds(double na, double nb) {
  check_noise(na, nb);
  const double s = na + nb + 1.0;
  ThresholdSet set{};
  set.r_ent = arccosh_sq((na + 1.0) * (nb + 1.0) / s);
  set.r_steer_ab = arccosh_sq((2.0 * na + 1.0) * (nb + 1.0) / s);
  set.r_steer_ba = arccosh_sq((na + 1.0) * (2.0 * nb + 1.0) / s);
  set.r_qt_duan = 0.5 * std::log(s);
  set.r_st_duan = 0.5 * std::log(2.0 * s);
  return set;
}

std::optional<double> bisection_threshold(double na, double nb,
                                          ThresholdCriterion criterion,
                                          double r_max) {
  check_noise(na, nb);
  if (!std::isfinite(r_max) || r_max <= 0.0)
    throw DomainError("r_max must be positive and finite");

  if (margin(na, nb, criterion, 1e-12) <= 0.0) return 0.0;

  // Distrust the bracket unless the margin is non-increasing along 64 samples.
  // The slack scales with the local magnitude: far past the root some margins
  // flatten to -1 plus rounding noise.
  double prev = margin(na, nb, criterion, 0.0);
  for (int i = 1; i < 64; ++i) {
    const double r = r_max * static_cast<double>(i) / 63.0;
    const double cur = margin(na, nb, criterion, r);
    const double slack = 1e-6 * std::max({1.0, std::abs(prev), std::abs(cur)});
    if (cur > prev + slack)
      throw NumericError("threshold criterion is not monotone on [0, r_max]");
    prev = cur;
  }

  if (margin(na, nb, criterion, r_max) > 0.0) return std::nullopt;

  double lo = 0.0;
  double hi = r_max;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (margin(na, nb, criterion, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gqc
