#include "gqc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gqc/errors.hpp"

namespace gqc {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string label_token(ClassLabel label) {
  switch (label) {
    case ClassLabel::Unphysical: return "UNPHYSICAL";
    case ClassLabel::Product: return "PRODUCT";
    case ClassLabel::DiscordOnly: return "DISCORD_ONLY";
    case ClassLabel::EntangledPptOnly: return "ENTANGLED_PPT_ONLY";
    case ClassLabel::DuanEntangled: return "DUAN_ENTANGLED";
    case ClassLabel::OneWaySteerAb: return "ONE_WAY_STEER_AB";
    case ClassLabel::OneWaySteerBa: return "ONE_WAY_STEER_BA";
    case ClassLabel::TwoWaySteer: return "TWO_WAY_STEER";
    case ClassLabel::SymmetricEpr: return "SYMMETRIC_EPR";
    case ClassLabel::Boundary: return "BOUNDARY";
  }
  return "UNKNOWN";
}

std::string quantity_token(Quantity q) {
  switch (q) {
    case Quantity::EntPpt: return "ENT_PPT";
    case Quantity::Duan: return "DUAN";
    case Quantity::EAb: return "E_AB";
    case Quantity::EBa: return "E_BA";
    case Quantity::DAb: return "D_AB";
    case Quantity::DBa: return "D_BA";
    case Quantity::SCond: return "S_COND";
    case Quantity::HCond: return "H_COND";
    case Quantity::Label: return "LABEL";
  }
  return "UNKNOWN";
}

std::string boundary_token(BoundarySurface s) {
  switch (s) {
    case BoundarySurface::DiscordAb: return "D_AB";
    case BoundarySurface::DiscordBa: return "D_BA";
    case BoundarySurface::EntPpt: return "ENT_PPT";
    case BoundarySurface::Duan: return "DUAN";
    case BoundarySurface::SteerAb: return "E_AB";
    case BoundarySurface::SteerBa: return "E_BA";
    case BoundarySurface::SymmetricEpr: return "SYM_EPR";
  }
  return "UNKNOWN";
}

std::string verdict_token(UnifiedVerdict v) {
  switch (v) {
    case UnifiedVerdict::Steering: return "STEERING";
    case UnifiedVerdict::Entanglement: return "ENTANGLEMENT";
    case UnifiedVerdict::DiscordBeyondEntanglement:
      return "DISCORD_BEYOND_ENTANGLEMENT";
  }
  return "UNKNOWN";
}

std::string direction_token(TeleportDirection d) {
  switch (d) {
    case TeleportDirection::AToB: return "A_TO_B";
    case TeleportDirection::BToA: return "B_TO_A";
    case TeleportDirection::Symmetric: return "SYMMETRIC";
  }
  return "UNKNOWN";
}

std::string mode_token(ScanMode m) {
  return m == ScanMode::StsNoiseGrid ? "STS_NOISE_GRID" : "RAW_NM_GRID";
}

Quantity parse_quantity(const std::string& token) {
  for (Quantity q : {Quantity::EntPpt, Quantity::Duan, Quantity::EAb,
                     Quantity::EBa, Quantity::DAb, Quantity::DBa,
                     Quantity::SCond, Quantity::HCond, Quantity::Label})
    if (quantity_token(q) == token) return q;
  throw FormError("unknown quantity token: " + token);
}

ScanMode parse_mode(const std::string& token) {
  if (token == "STS_NOISE_GRID") return ScanMode::StsNoiseGrid;
  if (token == "RAW_NM_GRID") return ScanMode::RawNmGrid;
  throw FormError("unknown scan mode token: " + token);
}

namespace {

// JSON numbers carry the same 12-digit rounding as the text formats; NaN and
// infinities dump as null.
nlohmann::ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

}  // namespace

nlohmann::ordered_json to_json(const CovarianceMatrix& cm) {
  return {{"n", num(cm.n)}, {"m", num(cm.m)}, {"c1", num(cm.c1)}, {"c2", num(cm.c2)}};
}

nlohmann::ordered_json to_json(const SymplecticSpectrum& sp) {
  return {{"i1", num(sp.i1)},         {"i2", num(sp.i2)},
          {"i3", num(sp.i3)},         {"i4", num(sp.i4)},
          {"delta", num(sp.delta)},   {"d_plus", num(sp.d_plus)},
          {"d_minus", num(sp.d_minus)}, {"d_minus_pt", num(sp.d_minus_pt)}};
}

nlohmann::ordered_json to_json(const CorrelationReport& rep) {
  return {{"ent_ppt", num(rep.ent_ppt)},
          {"duan", num(rep.duan)},
          {"e_ab", num(rep.e_ab)},
          {"e_ba", num(rep.e_ba)},
          {"g_ab_opt", num(rep.g_ab_opt)},
          {"g_ba_opt", num(rep.g_ba_opt)},
          {"g_sym_ab", num(rep.g_sym_ab)},
          {"g_sym_ba", num(rep.g_sym_ba)},
          {"d_ab", num(rep.d_ab)},
          {"d_ba", num(rep.d_ba)},
          {"s_cond_ab", num(rep.s_cond_ab)},
          {"h_cond_ab", num(rep.h_cond_ab)},
          {"s_cond_ba", num(rep.s_cond_ba)},
          {"h_cond_ba", num(rep.h_cond_ba)}};
}

nlohmann::ordered_json to_json(const ClassFlags& flags) {
  nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
  for (BoundarySurface s : flags.boundary) boundary.push_back(boundary_token(s));
  return {{"physical", flags.physical},
          {"product", flags.product},
          {"discord_ab", flags.discord_ab},
          {"discord_ba", flags.discord_ba},
          {"entangled_ppt", flags.entangled_ppt},
          {"duan_entangled", flags.duan_entangled},
          {"steer_ab", flags.steer_ab},
          {"steer_ba", flags.steer_ba},
          {"two_way_steer", flags.two_way_steer},
          {"symmetric_epr", flags.symmetric_epr},
          {"boundary", boundary}};
}

nlohmann::ordered_json to_json(const UnifiedSignature& sig) {
  return {{"e", num(sig.e)},
          {"steering_bound", num(sig.steering_bound)},
          {"entanglement_bound", num(sig.entanglement_bound)},
          {"verdict", verdict_token(sig.verdict)},
          {"boundary", sig.boundary}};
}

nlohmann::ordered_json to_json(const ThresholdSet& set) {
  return {{"r_ent", num(set.r_ent)},
          {"r_steer_ab", num(set.r_steer_ab)},
          {"r_steer_ba", num(set.r_steer_ba)},
          {"r_qt_duan", num(set.r_qt_duan)},
          {"r_st_duan", num(set.r_st_duan)}};
}

nlohmann::ordered_json to_json(const TeleportReport& rep) {
  nlohmann::ordered_json j{{"fidelity_sym", num(rep.fidelity_sym)},
                           {"qt_sym", rep.qt_sym},
                           {"secure", rep.secure},
                           {"direction", direction_token(rep.direction)},
                           {"gbar", num(rep.gbar)},
                           {"condition_residual", num(rep.condition_residual)}};
  j["f_g"] = rep.f_g ? num(*rep.f_g) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const ScanSpec& spec) {
  nlohmann::ordered_json quantities = nlohmann::ordered_json::array();
  for (Quantity q : spec.quantities) quantities.push_back(quantity_token(q));
  auto axis = [](const AxisSpec& a) {
    return nlohmann::ordered_json{
        {"lo", num(a.lo)}, {"hi", num(a.hi)}, {"steps", a.steps}};
  };
  return {{"mode", mode_token(spec.mode)},
          {"fixed", num(spec.fixed)},
          {"axis1", axis(spec.axis1)},
          {"axis2", axis(spec.axis2)},
          {"quantities", quantities}};
}

std::string scan_csv(const ScanResult& result) {
  std::string out = "axis1,axis2";
  std::vector<Quantity> numeric;
  for (Quantity q : result.spec.quantities) {
    if (q == Quantity::Label) continue;
    numeric.push_back(q);
    out += ",";
    out += quantity_token(q);
  }
  out += ",label\n";
  const std::size_t n2 = result.axis2_values.size();
  std::size_t idx = 0;
  for (double a1 : result.axis1_values) {
    for (std::size_t j = 0; j < n2; ++j) {
      out += fmt12(a1);
      out += ",";
      out += fmt12(result.axis2_values[j]);
      for (std::size_t f = 0; f < numeric.size(); ++f) {
        out += ",";
        out += fmt12(result.fields[f][idx]);
      }
      out += ",";
      out += label_token(result.labels[idx]);
      out += "\n";
      ++idx;
    }
  }
  return out;
}

nlohmann::ordered_json scan_json(const ScanResult& result) {
  nlohmann::ordered_json j;
  j["spec"] = to_json(result.spec);
  auto values = [](const std::vector<double>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (double x : v) arr.push_back(num(x));
    return arr;
  };
  j["axis1_values"] = values(result.axis1_values);
  j["axis2_values"] = values(result.axis2_values);
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::size_t slot = 0;
  for (Quantity q : result.spec.quantities) {
    if (q == Quantity::Label) continue;
    fields[quantity_token(q)] = values(result.fields[slot]);
    ++slot;
  }
  j["fields"] = fields;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (ClassLabel label : result.labels) labels.push_back(label_token(label));
  j["labels"] = labels;
  j["boundary_cells"] = result.boundary_cells;
  j["unphysical_cells"] = result.unphysical_cells;
  return j;
}

}  // namespace gqc
