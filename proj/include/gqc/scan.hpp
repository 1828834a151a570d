#pragma once

#include <cstddef>
#include <vector>

#include "gqc/classify.hpp"
#include "gqc/covariance.hpp"

namespace gqc {

enum class ScanMode {
  StsNoiseGrid,  // axis1 = na, axis2 = nb, fixed = r
  RawNmGrid,     // axis1 = n, axis2 = m, fixed = c (c1 = c, c2 = -c)
};

enum class Quantity {
  EntPpt,
  Duan,
  EAb,
  EBa,
  DAb,
  DBa,
  SCond,  // s_cond_ab
  HCond,  // h_cond_ab
  Label,
};

struct AxisSpec {
  double lo;
  double hi;
  int steps;  // >= 2; sample k sits at lo + k*(hi - lo)/(steps - 1)
};

struct ScanSpec {
  ScanMode mode = ScanMode::StsNoiseGrid;
  double fixed = 0.0;  // r for StsNoiseGrid, c for RawNmGrid
  AxisSpec axis1{0.0, 2.0, 201};
  AxisSpec axis2{0.0, 2.0, 201};
  std::vector<Quantity> quantities;  // numeric columns; Label entries are allowed and ignored
};

// Row-major grid: cell (i, j) lives at index i*axis2.steps + j, axis1 is the
// slow index.  Unphysical cells carry NaN in every numeric field and the
// Unphysical label.  Single-threaded and deterministic: equal specs produce
// bytewise equal results.
struct ScanResult {
  ScanSpec spec;
  std::vector<double> axis1_values;
  std::vector<double> axis2_values;
  std::vector<std::vector<double>> fields;  // parallel to spec numeric quantities
  std::vector<ClassLabel> labels;
  std::size_t boundary_cells = 0;
  std::size_t unphysical_cells = 0;

  // Numeric field for a quantity in this result; throws std::out_of_range if
  // the quantity was not scanned.
  const std::vector<double>& field(Quantity q) const;
};

ScanResult run_scan(const ScanSpec& spec);

struct CrossingPoint {
  double axis1;
  double axis2;
};

// Level crossings of one scanned quantity, located by linear interpolation
// along grid edges.  Edges are visited row-major, for each cell first toward
// larger axis2 then toward larger axis1, so the output order is deterministic.
// Edges touching NaN cells are skipped.
std::vector<CrossingPoint> extract_boundary(const ScanResult& result,
                                            Quantity quantity, double level);

}  // namespace gqc
