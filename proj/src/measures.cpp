#include "gqc/measures.hpp"

#include <cmath>
#include <limits>

#include "gqc/errors.hpp"

namespace gqc {

namespace {

// Variance of the inferred mode for a direction.
double inferred(const CovarianceMatrix& cm, Direction dir) {
  return dir == Direction::AGivenB ? cm.n : cm.m;
}

// Variance of the measured mode.
double measured(const CovarianceMatrix& cm, Direction dir) {
  return dir == Direction::AGivenB ? cm.m : cm.n;
}

// Symplectic roots of physical inputs sit at >= 1, but discriminant rounding
// can leave a degenerate root a few 1e-7 under 1, which entropy_f would
// reject.  Pull those back onto the branch point; anything lower is a genuine
// domain violation and still errors.
double pull_to_branch(double d) {
  return (d < 1.0 && d >= 1.0 - 1e-6) ? 1.0 : d;
}

}  // namespace

double ent_ppt(const CovarianceMatrix& cm) {
  const double c = cm.c();
  const double w = cm.n * cm.m - c * c;
  return w * w + 1.0 - (cm.n * cm.n + cm.m * cm.m + 2.0 * c * c);
}

double ent_gain(const CovarianceMatrix& cm, double g, Direction dir) {
  if (!std::isfinite(g)) throw DomainError("gain must be finite");
  const double c = cm.c();
  const double a = inferred(cm, dir);
  const double b = measured(cm, dir);
  if (std::abs(g) <= 1.0)
    return (a - 2.0 * g * c + g * g * b) / (1.0 + g * g);
  // Reciprocal form: exact for any finite gain, no g^2 overflow.
  const double h = 1.0 / g;
  return (h * h * a - 2.0 * h * c + b) / (h * h + 1.0);
}

double optimal_gain_sym(const CovarianceMatrix& cm, Direction dir) {
  const double c = cm.c();
  if (c == 0.0)
    throw ProductStateError("product state has no symmetric gain");
  const double a = inferred(cm, dir);
  const double b = measured(cm, dir);
  const double d = a - b;
  return (d + std::sqrt(d * d + 4.0 * c * c)) / (2.0 * c);
}

double duan(const CovarianceMatrix& cm) {
  return (cm.n + cm.m - 2.0 * cm.c()) / 2.0;
}

double steering(const CovarianceMatrix& cm, Direction dir, double g) {
  if (!std::isfinite(g)) throw DomainError("gain must be finite");
  const double c = cm.c();
  return inferred(cm, dir) + g * (g * measured(cm, dir) - 2.0 * c);
}

SteeringResult steering(const CovarianceMatrix& cm, Direction dir) {
  const double c = cm.c();
  const double b = measured(cm, dir);
  return {inferred(cm, dir) - c * c / b, c / b};
}

DiscordResult discord(const CovarianceMatrix& cm, Direction dir) {
  const double c = cm.c();
  const double a = inferred(cm, dir);
  const double b = measured(cm, dir);
  const auto sp = symplectic_spectrum(cm);
  const double z = (a + b * a - c * c) / (b + 1.0);
  const double s_cond = entropy_f(pull_to_branch(sp.d_plus)) +
                        entropy_f(pull_to_branch(sp.d_minus)) - entropy_f(b);
  const double h_cond = entropy_f(z);
  return {h_cond - s_cond, s_cond, h_cond};
}

double entropy_f(double x) {
  if (!std::isfinite(x)) throw DomainError("entropy argument must be finite");
  if (x < 1.0 - 1e-9) throw DomainError("entropy argument below 1");
  const double q = 0.5 * (x - 1.0);
  if (q <= 0.0) return 0.0;
  return (1.0 + q) * std::log1p(q) - q * std::log(q);
}

CorrelationReport report(const CovarianceMatrix& cm) {
  const double c = cm.c();
  CorrelationReport rep{};
  rep.ent_ppt = ent_ppt(cm);
  rep.duan = duan(cm);
  const auto st_ab = steering(cm, Direction::AGivenB);
  const auto st_ba = steering(cm, Direction::BGivenA);
  rep.e_ab = st_ab.value;
  rep.e_ba = st_ba.value;
  rep.g_ab_opt = st_ab.gain;
  rep.g_ba_opt = st_ba.gain;
  if (c == 0.0) {
    rep.g_sym_ab = std::numeric_limits<double>::quiet_NaN();
    rep.g_sym_ba = std::numeric_limits<double>::quiet_NaN();
  } else {
    rep.g_sym_ab = optimal_gain_sym(cm, Direction::AGivenB);
    rep.g_sym_ba = optimal_gain_sym(cm, Direction::BGivenA);
  }
  const auto disc_ab = discord(cm, Direction::AGivenB);
  const auto disc_ba = discord(cm, Direction::BGivenA);
  rep.d_ab = disc_ab.value;
  rep.d_ba = disc_ba.value;
  rep.s_cond_ab = disc_ab.s_cond;
  rep.h_cond_ab = disc_ab.h_cond;
  rep.s_cond_ba = disc_ba.s_cond;
  rep.h_cond_ba = disc_ba.h_cond;
  return rep;
}

}  // namespace gqc
