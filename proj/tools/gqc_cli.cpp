#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqc/classify.hpp"
#include "gqc/errors.hpp"
#include "gqc/measures.hpp"
#include "gqc/scan.hpp"
#include "gqc/serialize.hpp"
#include "gqc/teleport.hpp"
#include "gqc/thresholds.hpp"

namespace {

using nlohmann::ordered_json;

// Strict comma-separated doubles: exactly `count` fields, no trailing junk.
std::vector<double> parse_fields(const std::string& text, std::size_t count,
                                 const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw gqc::FormError(what + ": cannot parse '" + item + "'");
    }
  }
  if (out.size() != count)
    throw gqc::FormError(what + ": expected " + std::to_string(count) +
                         " comma-separated values");
  return out;
}

gqc::AxisSpec parse_axis(const std::string& text, const std::string& what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3)
    throw gqc::FormError(what + ": expected lo:hi:steps");
  try {
    std::size_t used = 0;
    gqc::AxisSpec axis{};
    axis.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    axis.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    axis.steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    return axis;
  } catch (const gqc::FormError&) {
    throw;
  } catch (const std::exception&) {
    throw gqc::FormError(what + ": expected lo:hi:steps");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gqc::FormError("cannot open output file: " + out_path);
  out << text;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

// key,value rows from a flattened document; arrays join with ';'.
void csv_rows(const ordered_json& j, const std::string& prefix,
              std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      csv_rows(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out += prefix;
  out += ",";
  if (j.is_array()) {
    std::string joined;
    for (const auto& item : j) {
      if (!joined.empty()) joined += ";";
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    out += joined;
  } else if (j.is_string()) {
    out += j.get<std::string>();
  } else if (j.is_null()) {
    out += "nan";
  } else if (j.is_number_float()) {
    out += gqc::fmt12(j.get<double>());
  } else {
    out += j.dump();
  }
  out += "\n";
}

std::string csv_text(const ordered_json& j) {
  std::string out = "key,value\n";
  csv_rows(j, "", out);
  return out;
}

std::string table_text(const ordered_json& j) {
  std::string out;
  csv_rows(j, "", out);
  for (auto& ch : out)
    if (ch == ',') ch = '\t';
  return out;
}

std::string render(const ordered_json& j, const std::string& format) {
  if (format == "json") return json_text(j);
  if (format == "csv") return csv_text(j);
  return table_text(j);
}

struct StateArgs {
  std::string sts;
  std::string cm;
};

gqc::CovarianceMatrix make_state(const StateArgs& args, ordered_json& input) {
  if (!args.sts.empty() && !args.cm.empty())
    throw gqc::FormError("--sts and --cm are mutually exclusive");
  if (args.sts.empty() && args.cm.empty())
    throw gqc::FormError("one of --sts or --cm is required");
  if (!args.sts.empty()) {
    const auto v = parse_fields(args.sts, 3, "--sts");
    input = {{"kind", "sts"},
             {"r", gqc::round12(v[0])},
             {"na", gqc::round12(v[1])},
             {"nb", gqc::round12(v[2])}};
    return gqc::sts_covariance({v[0], v[1], v[2]});
  }
  const auto v = parse_fields(args.cm, 3, "--cm");
  input = {{"kind", "cm"}};
  return {v[0], v[1], v[2], -v[2]};
}

int run_analyze(const StateArgs& state, const std::string& format,
                const std::string& out_path) {
  ordered_json input;
  const gqc::CovarianceMatrix cm = make_state(state, input);

  ordered_json doc;
  doc["input"] = input;
  doc["covariance"] = gqc::to_json(cm);

  const auto [flags, label] = gqc::classify(cm);
  try {
    doc["spectrum"] = gqc::to_json(gqc::symplectic_spectrum(cm));
  } catch (const gqc::NumericError&) {
    doc["spectrum"] = nullptr;
  }
  doc["label"] = gqc::label_token(label);
  doc["flags"] = gqc::to_json(flags);

  if (flags.physical) {
    doc["measures"] = gqc::to_json(gqc::report(cm));
    doc["unified"] = {
        {"ab", gqc::to_json(gqc::unified_signature(cm, gqc::Direction::AGivenB))},
        {"ba", gqc::to_json(gqc::unified_signature(cm, gqc::Direction::BGivenA))}};
  } else {
    doc["measures"] = nullptr;
    doc["unified"] = nullptr;
  }

  if (flags.physical && !flags.product) {
    doc["teleport"] = gqc::to_json(gqc::teleport_report(cm));
  } else {
    doc["teleport"] = nullptr;
  }

  emit(render(doc, format), out_path);
  return flags.physical ? 0 : 2;
}

int run_thresholds(const StateArgs& state, const std::string& format,
                   const std::string& out_path) {
  if (state.sts.empty())
    throw gqc::FormError("thresholds requires --sts r,nA,nB (r is ignored)");
  const auto v = parse_fields(state.sts, 3, "--sts");
  ordered_json doc;
  doc["na"] = gqc::round12(v[1]);
  doc["nb"] = gqc::round12(v[2]);
  doc["thresholds"] = gqc::to_json(gqc::closed_form_thresholds(v[1], v[2]));
  emit(render(doc, format), out_path);
  return 0;
}

struct ScanArgs {
  std::string grid_na, grid_nb, grid_n, grid_m;
  std::optional<double> r, c;
  std::string spec_path;
};

gqc::ScanSpec build_scan_spec(const ScanArgs& args) {
  gqc::ScanSpec spec;
  const std::vector<gqc::Quantity> all = {
      gqc::Quantity::EntPpt, gqc::Quantity::Duan, gqc::Quantity::EAb,
      gqc::Quantity::EBa,    gqc::Quantity::DAb,  gqc::Quantity::DBa,
      gqc::Quantity::SCond,  gqc::Quantity::HCond};

  if (!args.spec_path.empty()) {
    std::ifstream in(args.spec_path);
    if (!in) throw gqc::FormError("cannot open spec file: " + args.spec_path);
    ordered_json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw gqc::FormError(std::string("spec file is not valid JSON: ") + e.what());
    }
    try {
      spec.mode = gqc::parse_mode(j.at("mode").get<std::string>());
      spec.fixed = j.at("fixed").get<double>();
      auto axis = [&](const char* key) {
        const auto& a = j.at(key);
        return gqc::AxisSpec{a.at("lo").get<double>(), a.at("hi").get<double>(),
                             a.at("steps").get<int>()};
      };
      spec.axis1 = axis("axis1");
      spec.axis2 = axis("axis2");
      if (j.contains("quantities")) {
        for (const auto& q : j.at("quantities"))
          spec.quantities.push_back(gqc::parse_quantity(q.get<std::string>()));
      } else {
        spec.quantities = all;
      }
    } catch (const nlohmann::json::exception& e) {
      throw gqc::FormError(std::string("bad scan spec: ") + e.what());
    }
    return spec;
  }

  spec.quantities = all;
  const bool raw = args.c.has_value() || !args.grid_n.empty() || !args.grid_m.empty();
  const bool sts = args.r.has_value() || !args.grid_na.empty() || !args.grid_nb.empty();
  if (raw && sts)
    throw gqc::FormError("mixing noise-grid and raw-grid flags");
  if (raw) {
    if (!args.c || args.grid_n.empty() || args.grid_m.empty())
      throw gqc::FormError("raw grid needs --c, --grid-n and --grid-m");
    spec.mode = gqc::ScanMode::RawNmGrid;
    spec.fixed = *args.c;
    spec.axis1 = parse_axis(args.grid_n, "--grid-n");
    spec.axis2 = parse_axis(args.grid_m, "--grid-m");
  } else {
    if (!args.r) throw gqc::FormError("noise grid needs --r");
    spec.mode = gqc::ScanMode::StsNoiseGrid;
    spec.fixed = *args.r;
    if (!args.grid_na.empty()) spec.axis1 = parse_axis(args.grid_na, "--grid-na");
    if (!args.grid_nb.empty()) spec.axis2 = parse_axis(args.grid_nb, "--grid-nb");
  }
  return spec;
}

int run_scan_cmd(const ScanArgs& args, const std::string& format,
                 const std::string& out_path) {
  const gqc::ScanSpec spec = build_scan_spec(args);
  const gqc::ScanResult result = gqc::run_scan(spec);
  if (format == "csv") {
    emit(gqc::scan_csv(result), out_path);
  } else if (format == "json") {
    emit(json_text(gqc::scan_json(result)), out_path);
  } else {
    ordered_json summary;
    summary["spec"] = gqc::to_json(spec);
    summary["cells"] = result.labels.size();
    summary["boundary_cells"] = result.boundary_cells;
    summary["unphysical_cells"] = result.unphysical_cells;
    emit(table_text(summary), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directional Gaussian correlations of two-mode states"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  StateArgs state;
  ScanArgs scan_args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "measures, classification and teleport figures of one state");
  analyze->add_option("--sts", state.sts, "squeezed thermal state r,nA,nB");
  analyze->add_option("--cm", state.cm, "covariance entries n,m,c (c1 = c, c2 = -c)");
  add_common(analyze);

  CLI::App* thresholds = app.add_subcommand(
      "thresholds", "critical squeezing for a noise pair");
  thresholds->add_option("--sts", state.sts,
                         "noise pair as r,nA,nB; the r component is ignored");
  add_common(thresholds);

  CLI::App* scan = app.add_subcommand("scan", "grid scan over a state family");
  scan->add_option("--grid-na", scan_args.grid_na, "nA axis lo:hi:steps");
  scan->add_option("--grid-nb", scan_args.grid_nb, "nB axis lo:hi:steps");
  scan->add_option("--r", scan_args.r, "fixed squeezing for the noise grid");
  scan->add_option("--grid-n", scan_args.grid_n, "n axis lo:hi:steps");
  scan->add_option("--grid-m", scan_args.grid_m, "m axis lo:hi:steps");
  scan->add_option("--c", scan_args.c, "fixed cross correlation for the raw grid");
  scan->add_option("--spec", scan_args.spec_path, "scan spec JSON file");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(state, format, out_path);
    if (thresholds->parsed()) return run_thresholds(state, format, out_path);
    return run_scan_cmd(scan_args, format, out_path);
  } catch (const gqc::FormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gqc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gqc::ProductStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gqc::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
