#include "gqc/teleport.hpp"

#include <algorithm>
#include <cmath>

#include "gqc/classify.hpp"
#include "gqc/errors.hpp"
#include "gqc/measures.hpp"

namespace gqc {

TeleportReport teleport_report(const CovarianceMatrix& cm) {
  const double c = cm.c();
  if (std::abs(c) <= 1e-12 * std::max({1.0, cm.n, cm.m}))
    throw ProductStateError("product state carries no teleportation resource");

  TeleportReport rep{};
  const double dv = duan(cm);
  rep.fidelity_sym = 1.0 / (1.0 + dv);
  rep.qt_sym = dv < 1.0;
  rep.secure = dv < 0.5;

  const double g_ab = optimal_gain_sym(cm, Direction::AGivenB);
  if (std::abs(g_ab - 1.0) <= kBoundaryBand) {
    rep.direction = TeleportDirection::Symmetric;
    rep.gbar = 1.0;
    // At unit gain both receiver variances equal n + m - 2c.
    rep.condition_residual = steering(cm, Direction::BGivenA, 1.0);
  } else if (g_ab < 1.0) {
    // A's conditional variance is the smaller one: send toward B and tune the
    // receiver gain to the larger of the two symmetric optima.
    rep.direction = TeleportDirection::AToB;
    rep.gbar = optimal_gain_sym(cm, Direction::BGivenA);
    rep.condition_residual = steering(cm, Direction::BGivenA, rep.gbar) -
                             (rep.gbar * rep.gbar - 1.0);
  } else {
    rep.direction = TeleportDirection::BToA;
    rep.gbar = g_ab;
    rep.condition_residual = steering(cm, Direction::AGivenB, rep.gbar) -
                             (rep.gbar * rep.gbar - 1.0);
  }
  if (std::abs(rep.condition_residual) < 1e-6)
    rep.f_g = 1.0 / (rep.gbar * rep.gbar);
  return rep;
}

bool secure_teleport_check(const CovarianceMatrix& cm) {
  return duan(cm) < 0.5;
}

}  // namespace gqc
