#pragma once

#include <optional>

namespace gqc {

// Critical squeezing for each criterion at fixed thermal occupations (na, nb).
// A criterion holds strictly above its threshold and fails strictly below; a
// threshold of 0 means the criterion holds for every r > 0.
struct ThresholdSet {
  double r_ent;       // partial-transpose entanglement
  double r_steer_ab;  // steering of A by measurements on B
  double r_steer_ba;
  double r_qt_duan;   // joint variance < 1
  double r_st_duan;   // joint variance < 1/2
};

enum class ThresholdCriterion {
  EntPpt,
  SteerAb,
  SteerBa,
  DuanQt,
  DuanSt,
};

// Closed forms: arccosh of the critical cosh^2 r for the first three, half a
// logarithm for the joint-variance pair.  DomainError for negative or
// non-finite occupations.
ThresholdSet closed_form_thresholds(double na, double nb);

// Root of the criterion margin by bisection on [0, r_max].  Returns 0 when the
// criterion already holds at r -> 0+, nullopt when it still fails at r_max.
// The margin is sampled at 64 points first and must be non-increasing (up to
// rounding noise); otherwise NumericError.  Converges to |hi - lo| < 1e-10.
std::optional<double> bisection_threshold(double na, double nb,
                                          ThresholdCriterion criterion,
                                          double r_max = 10.0);

}  // namespace gqc
