#include "gqc/classify.hpp"

#include <algorithm>
#include <cmath>

#include "gqc/errors.hpp"

namespace gqc {

namespace {

bool on_surface(double value, double edge) {
  return std::abs(value - edge) <= kBoundaryBand;
}

}  // namespace

std::pair<ClassFlags, ClassLabel> classify(const CovarianceMatrix& cm) {
  const double c = cm.c();  // FormError early for off-form input
  ClassFlags flags;
  flags.physical = is_physical(cm);
  if (!flags.physical) return {flags, ClassLabel::Unphysical};

  flags.product = std::abs(c) <= 1e-12 * std::max({1.0, cm.n, cm.m});
  if (flags.product) return {flags, ClassLabel::Product};

  const auto rep = report(cm);
  flags.discord_ab = rep.d_ab > 0.0;
  flags.discord_ba = rep.d_ba > 0.0;
  flags.entangled_ppt = rep.ent_ppt < 0.0;
  flags.duan_entangled = rep.duan < 1.0;
  flags.steer_ab = rep.e_ab < 1.0;
  flags.steer_ba = rep.e_ba < 1.0;
  flags.two_way_steer = flags.steer_ab && flags.steer_ba;
  flags.symmetric_epr = rep.duan < 0.5;

  if (on_surface(rep.d_ab, 0.0)) flags.boundary.push_back(BoundarySurface::DiscordAb);
  if (on_surface(rep.d_ba, 0.0)) flags.boundary.push_back(BoundarySurface::DiscordBa);
  if (on_surface(rep.ent_ppt, 0.0)) flags.boundary.push_back(BoundarySurface::EntPpt);
  if (on_surface(rep.duan, 1.0)) flags.boundary.push_back(BoundarySurface::Duan);
  if (on_surface(rep.e_ab, 1.0)) flags.boundary.push_back(BoundarySurface::SteerAb);
  if (on_surface(rep.e_ba, 1.0)) flags.boundary.push_back(BoundarySurface::SteerBa);
  if (on_surface(rep.duan, 0.5)) flags.boundary.push_back(BoundarySurface::SymmetricEpr);

  if (!flags.boundary.empty()) return {flags, ClassLabel::Boundary};

  ClassLabel label = ClassLabel::DiscordOnly;
  if (flags.symmetric_epr)
    label = ClassLabel::SymmetricEpr;
  else if (flags.two_way_steer)
    label = ClassLabel::TwoWaySteer;
  else if (flags.steer_ab)
    label = ClassLabel::OneWaySteerAb;
  else if (flags.steer_ba)
    label = ClassLabel::OneWaySteerBa;
  else if (flags.duan_entangled)
    label = ClassLabel::DuanEntangled;
  else if (flags.entangled_ppt)
    label = ClassLabel::EntangledPptOnly;
  return {flags, label};
}

UnifiedSignature unified_signature(const CovarianceMatrix& cm, Direction dir) {
  const double c = cm.c();
  const double b = dir == Direction::AGivenB ? cm.m : cm.n;
  const double a = dir == Direction::AGivenB ? cm.n : cm.m;
  UnifiedSignature sig{};
  sig.e = a - c * c / b;
  sig.steering_bound = 1.0;
  sig.entanglement_bound = (cm.n + cm.m - 1.0) / b;
  if (sig.e < sig.steering_bound)
    sig.verdict = UnifiedVerdict::Steering;
  else if (sig.e < sig.entanglement_bound)
    sig.verdict = UnifiedVerdict::Entanglement;
  else
    sig.verdict = UnifiedVerdict::DiscordBeyondEntanglement;
  sig.boundary = on_surface(sig.e, sig.steering_bound) ||
                 on_surface(sig.e, sig.entanglement_bound);
  return sig;
}

}  // namespace gqc
