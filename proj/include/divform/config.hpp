#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "divform/assembly.hpp"
#include "divform/bounds.hpp"
#include "divform/domain.hpp"
#include "divform/fields.hpp"

namespace divform {

struct VerifyOptions {
  int t0_power = 1;  // 1 = printed shift, 2 = squared variant
  LowerOrderReading lower_order_reading = LowerOrderReading::printed;
  bool relax_div_term = true;
  int refinement_levels = 2;
};

struct RunConfig {
  DomainSpec domain;
  EtaPreset eta;
  TensorPreset tensor;
  ProblemKind problem = ProblemKind::scalar_second_order;
  double alpha = 0.0;
  int k = 6;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  VerifyOptions verify;

  void validate() const;  // throws std::invalid_argument
};

/// Accepts either strict JSON or the flat `section.key = value` text form
/// (comma lists for vectors, `#` comments); both map to the same schema.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// Sets a numeric field addressed by a dotted path (e.g. "problem.alpha") in
/// a config JSON document. Unknown paths are errors.
void apply_numeric_override(nlohmann::json& cfg, const std::string& path,
                            double value);

}  // namespace divform
