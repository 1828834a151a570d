#pragma once

#include "gqc/covariance.hpp"

namespace gqc {

// All correlation measures read one direction at a time.  AGivenB means mode B
// is measured and mode A is inferred from the outcome.
enum class Direction {
  AGivenB,
  BGivenA,
};

struct SteeringResult {
  double value;  // product of conditional inference variances
  double gain;   // linear gain that attains it
};

struct DiscordResult {
  double value;   // quantum discord, nats
  double s_cond;  // conditional von Neumann entropy of the pair
  double h_cond;  // entropy of the inferred mode after the measurement
};

struct CorrelationReport {
  double ent_ppt;    // negative iff entangled (partial-transpose test)
  double duan;       // joint quadrature variance; < 1 iff sum-criterion entangled
  double e_ab;       // inference variance product, A inferred from B
  double e_ba;
  double g_ab_opt;   // gain minimizing e_ab (c/m)
  double g_ba_opt;
  double g_sym_ab;   // gain minimizing the symmetric normalized variance; NaN for product states
  double g_sym_ba;
  double d_ab;       // discord, B measured
  double d_ba;
  double s_cond_ab;  // entropy terms behind d_ab = h_cond_ab - s_cond_ab
  double h_cond_ab;
  double s_cond_ba;
  double h_cond_ba;
};

// Partial-transpose entanglement test: (nm - c^2)^2 + 1 - (n^2 + m^2 + 2c^2).
// Negative iff the state is entangled.  Requires (c, -c) form.
double ent_ppt(const CovarianceMatrix& cm);

// Normalized two-mode variance (n - 2gc + g^2 m) / (1 + g^2) for AGivenB and
// the n <-> m mirror for BGivenA.  Evaluated in a reciprocal form for |g| > 1
// so arbitrarily large finite gains stay exact.  DomainError for non-finite g.
double ent_gain(const CovarianceMatrix& cm, double g, Direction dir);

// Gain minimizing ent_gain.  ProductStateError when c = 0.  The two directions
// satisfy g_ab * g_ba = 1, and the minimum equals d_minus_pt exactly.
double optimal_gain_sym(const CovarianceMatrix& cm, Direction dir);

// Joint quadrature variance (n + m - 2c) / 2; < 1 iff entangled by the
// sum criterion, < 1/2 in the strongly correlated regime.
double duan(const CovarianceMatrix& cm);

// Conditional inference variance at a fixed gain g:
// n + g^2 m - 2gc for AGivenB (B measured), mirrored for BGivenA.
double steering(const CovarianceMatrix& cm, Direction dir, double g);

// Minimized over the gain: value n - c^2/m at g = c/m for AGivenB.
// value < 1 demonstrates steering of the inferred mode.
SteeringResult steering(const CovarianceMatrix& cm, Direction dir);

// Gaussian quantum discord via measured-mode entropies; pre: physical cm.
DiscordResult discord(const CovarianceMatrix& cm, Direction dir);

// Bosonic entropy kernel f(x) = (x+1)/2 ln((x+1)/2) - (x-1)/2 ln((x-1)/2),
// nats.  Arguments in [1 - 1e-9, 1) clamp to 1; below that DomainError.
double entropy_f(double x);

// Every measure of the pair, one pass.
CorrelationReport report(const CovarianceMatrix& cm);

}  // namespace gqc
