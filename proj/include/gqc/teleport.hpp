#pragma once

#include <optional>

#include "gqc/covariance.hpp"

namespace gqc {

// Which mode should hold the input state when the resource is asymmetric.
// AToB sends the input from A's side to B; the symmetric-gain test picks the
// direction with the smaller conditional variance at the receiver.
enum class TeleportDirection {
  AToB,
  BToA,
  Symmetric,
};

struct TeleportReport {
  double fidelity_sym;        // coherent-state fidelity 1 / (1 + duan) at unit gain
  bool qt_sym;                // fidelity above the classical 1/2 benchmark (duan < 1)
  bool secure;                // duan < 1/2, strict
  TeleportDirection direction;
  double gbar;                // max of the two symmetric gains (1 when symmetric)
  double condition_residual;  // receiver conditional variance minus (gbar^2 - 1)
  std::optional<double> f_g;  // gain-tuned figure 1/gbar^2, present when |residual| < 1e-6
};

// Pre: (c, -c) form and physical.  ProductStateError when c = 0 (no resource),
// FormError off form; physicality of the input is the caller's responsibility.
TeleportReport teleport_report(const CovarianceMatrix& cm);

// duan(cm) < 1/2: the joint variance regime in which teleportation exceeds the
// no-cloning bound.
bool secure_teleport_check(const CovarianceMatrix& cm);

}  // namespace gqc
