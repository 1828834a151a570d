#pragma once

#include <vector>

#include "gqc/covariance.hpp"
#include "gqc/measures.hpp"

namespace gqc {

// Half width of the band around every decision surface inside which a state is
// reported as sitting on the boundary instead of on either side.
inline constexpr double kBoundaryBand = 1e-9;

enum class ClassLabel {
  Unphysical,
  Product,
  DiscordOnly,
  EntangledPptOnly,
  DuanEntangled,
  OneWaySteerAb,
  OneWaySteerBa,
  TwoWaySteer,
  SymmetricEpr,
  Boundary,
};

// Decision surfaces a state can sit on (within kBoundaryBand).
enum class BoundarySurface {
  DiscordAb,
  DiscordBa,
  EntPpt,
  Duan,
  SteerAb,
  SteerBa,
  SymmetricEpr,
};

struct ClassFlags {
  bool physical = false;
  bool product = false;
  bool discord_ab = false;     // d_ab > 0
  bool discord_ba = false;
  bool entangled_ppt = false;  // ent_ppt < 0
  bool duan_entangled = false; // duan < 1
  bool steer_ab = false;       // e_ab < 1
  bool steer_ba = false;
  bool two_way_steer = false;
  bool symmetric_epr = false;  // duan < 1/2
  std::vector<BoundarySurface> boundary;  // surfaces within kBoundaryBand
};

// Decision order: unphysical and product states short-circuit; any surface hit
// yields Boundary; otherwise the strongest satisfied criterion names the
// label, from SymmetricEpr down to DiscordOnly.
std::pair<ClassFlags, ClassLabel> classify(const CovarianceMatrix& cm);

enum class UnifiedVerdict {
  Steering,
  Entanglement,
  DiscordBeyondEntanglement,
};

// One conditional-variance number read against two thresholds: e < 1 means
// steering; e < (n + m - 1)/b (b the measured mode's variance) means
// entanglement; at or above that only discord-type correlation remains.
struct UnifiedSignature {
  double e;                   // minimized inference variance product
  double steering_bound;      // always 1
  double entanglement_bound;  // (n + m - 1) / measured variance
  UnifiedVerdict verdict;
  bool boundary;              // within kBoundaryBand of either threshold
};

UnifiedSignature unified_signature(const CovarianceMatrix& cm, Direction dir);

}  // namespace gqc
