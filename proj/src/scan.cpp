#include "gqc/scan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gqc/errors.hpp"

namespace gqc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_axis(const AxisSpec& axis) {
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.lo >= axis.hi)
    throw DomainError("axis range must be finite with lo < hi");
  if (axis.steps < 2) throw DomainError("axis needs at least 2 steps");
}

std::vector<double> axis_values(const AxisSpec& axis) {
  std::vector<double> values(static_cast<std::size_t>(axis.steps));
  for (int k = 0; k < axis.steps; ++k)
    values[static_cast<std::size_t>(k)] =
        axis.lo + static_cast<double>(k) * (axis.hi - axis.lo) /
                      static_cast<double>(axis.steps - 1);
  return values;
}

double pick(const CorrelationReport& rep, Quantity q) {
  switch (q) {
    case Quantity::EntPpt: return rep.ent_ppt;
    case Quantity::Duan: return rep.duan;
    case Quantity::EAb: return rep.e_ab;
    case Quantity::EBa: return rep.e_ba;
    case Quantity::DAb: return rep.d_ab;
    case Quantity::DBa: return rep.d_ba;
    case Quantity::SCond: return rep.s_cond_ab;
    case Quantity::HCond: return rep.h_cond_ab;
    case Quantity::Label: break;
  }
  return kNan;
}

}  // namespace

const std::vector<double>& ScanResult::field(Quantity q) const {
  std::size_t slot = 0;
  for (Quantity have : spec.quantities) {
    if (have == Quantity::Label) continue;
    if (have == q) return fields[slot];
    ++slot;
  }
  throw std::out_of_range("quantity was not scanned");
}

ScanResult run_scan(const ScanSpec& spec) {
  check_axis(spec.axis1);
  check_axis(spec.axis2);
  if (!std::isfinite(spec.fixed))
    throw DomainError("fixed scan parameter must be finite");
  if (spec.mode == ScanMode::StsNoiseGrid &&
      (spec.fixed < 0.0 || spec.axis1.lo < 0.0 || spec.axis2.lo < 0.0))
    throw DomainError("noise grid needs r >= 0 and non-negative occupations");

  ScanResult result;
  result.spec = spec;
  result.axis1_values = axis_values(spec.axis1);
  result.axis2_values = axis_values(spec.axis2);

  std::vector<Quantity> numeric;
  for (Quantity q : spec.quantities)
    if (q != Quantity::Label) numeric.push_back(q);

  const std::size_t cells = result.axis1_values.size() * result.axis2_values.size();
  result.fields.assign(numeric.size(), std::vector<double>(cells, kNan));
  result.labels.assign(cells, ClassLabel::Unphysical);

  std::size_t idx = 0;
  for (double a1 : result.axis1_values) {
    for (double a2 : result.axis2_values) {
      const CovarianceMatrix cm =
          spec.mode == ScanMode::StsNoiseGrid
              ? sts_covariance({spec.fixed, a1, a2})
              : CovarianceMatrix{a1, a2, spec.fixed, -spec.fixed};
      try {
        const auto [flags, label] = classify(cm);
        result.labels[idx] = label;
        if (!flags.physical) {
          ++result.unphysical_cells;
        } else {
          if (label == ClassLabel::Boundary) ++result.boundary_cells;
          const auto rep = report(cm);
          for (std::size_t f = 0; f < numeric.size(); ++f)
            result.fields[f][idx] = pick(rep, numeric[f]);
        }
      } catch (const NumericError&) {
        result.labels[idx] = ClassLabel::Unphysical;
        ++result.unphysical_cells;
      } catch (const DomainError&) {
        result.labels[idx] = ClassLabel::Unphysical;
        ++result.unphysical_cells;
      }
      ++idx;
    }
  }
  return result;
}

std::vector<CrossingPoint> extract_boundary(const ScanResult& result,
                                            Quantity quantity, double level) {
  const auto& values = result.field(quantity);
  const auto& x1 = result.axis1_values;
  const auto& x2 = result.axis2_values;
  const std::size_t n1 = x1.size();
  const std::size_t n2 = x2.size();
  auto at = [&](std::size_t i, std::size_t j) { return values[i * n2 + j]; };

  std::vector<CrossingPoint> points;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const double a = at(i, j);
      if (!std::isfinite(a)) continue;
      if (j + 1 < n2) {
        const double b = at(i, j + 1);
        if (std::isfinite(b) && (a - level) * (b - level) < 0.0) {
          const double t = (level - a) / (b - a);
          points.push_back({x1[i], x2[j] + t * (x2[j + 1] - x2[j])});
        }
      }
      if (i + 1 < n1) {
        const double b = at(i + 1, j);
        if (std::isfinite(b) && (a - level) * (b - level) < 0.0) {
          const double t = (level - a) / (b - a);
          points.push_back({x1[i] + t * (x1[i + 1] - x1[i]), x2[j]});
        }
      }
    }
  }
  return points;
}

}  // namespace gqc
