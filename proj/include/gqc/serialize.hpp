#pragma once

#include <string>

#include "json.hpp"

#include "gqc/classify.hpp"
#include "gqc/measures.hpp"
#include "gqc/scan.hpp"
#include "gqc/teleport.hpp"
#include "gqc/thresholds.hpp"

namespace gqc {

// All serialized numbers pass through a 12-significant-digit round trip so
// equal inputs render byte-identically on every run.  Non-finite values render
// as "nan"/"inf"/"-inf" in text and null in JSON.
double round12(double x);
std::string fmt12(double x);

// Stable token spellings used in CSV, JSON and the CLI.
std::string label_token(ClassLabel label);
std::string quantity_token(Quantity q);
std::string boundary_token(BoundarySurface s);
std::string verdict_token(UnifiedVerdict v);
std::string direction_token(TeleportDirection d);
std::string mode_token(ScanMode m);

// Inverse lookups for CLI / JSON spec input; FormError on unknown tokens.
Quantity parse_quantity(const std::string& token);
ScanMode parse_mode(const std::string& token);

nlohmann::ordered_json to_json(const CovarianceMatrix& cm);
nlohmann::ordered_json to_json(const SymplecticSpectrum& sp);
nlohmann::ordered_json to_json(const CorrelationReport& rep);
nlohmann::ordered_json to_json(const ClassFlags& flags);
nlohmann::ordered_json to_json(const UnifiedSignature& sig);
nlohmann::ordered_json to_json(const ThresholdSet& set);
nlohmann::ordered_json to_json(const TeleportReport& rep);
nlohmann::ordered_json to_json(const ScanSpec& spec);

// Scan output.  CSV: header "axis1,axis2,<quantity tokens>,label", one cell
// per row in storage order.  JSON: spec echo, axis values, one flat row-major
// array per numeric quantity, the label array, and the boundary/unphysical
// cell counts.
std::string scan_csv(const ScanResult& result);
nlohmann::ordered_json scan_json(const ScanResult& result);

}  // namespace gqc
