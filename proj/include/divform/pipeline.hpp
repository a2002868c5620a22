#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "divform/config.hpp"
#include "divform/eigensolve.hpp"

namespace divform {

struct Report {
  nlohmann::json doc;
  bool all_passed = true;
};

/// Optional side outputs of a run.
struct RunIO {
  std::string csv_path;  // spectrum CSV
  std::string dump_dir;  // stiffness/mass triplet dumps
};

/// Domain, fields, constants, pencil, spectrum for one configuration.
Report run_spectrum(const RunConfig& cfg, const RunIO& io = {});

/// Spectrum plus every inequality and bound applicable to the problem kind,
/// with the margin policy applied. `all_passed` is false iff some check
/// failed (skipped checks are warnings, not failures).
Report run_verify(const RunConfig& cfg, const RunIO& io = {});

struct SweepResult {
  std::vector<double> values;
  std::vector<Report> reports;
  std::string summary_csv;  // value, sigma_1..k, tightest slack
  bool all_passed = true;
};

/// Repeats run_verify with a numeric config field swept over `values`.
SweepResult run_sweep(const RunConfig& cfg, const std::string& param_path,
                      const std::vector<double>& values);

}  // namespace divform
