#pragma once

#include <string>

#include <json.hpp>

#include "divform/bounds.hpp"
#include "divform/constants.hpp"
#include "divform/eigensolve.hpp"

namespace divform {

inline constexpr const char* kToolName = "divform";
inline constexpr const char* kToolVersion = "0.1.0";

/// JSON text with numbers emitted at 17 significant digits (round-trip safe).
std::string dump_json_17(const nlohmann::json& j, int indent = 2);

/// Write-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

nlohmann::json constants_to_json(const OperatorConstants& c);
nlohmann::json spectrum_to_json(const Spectrum& s);
nlohmann::json check_to_json(const CheckRecord& r);
nlohmann::json bound_to_json(const BoundRecord& r);

/// index,eigenvalue,residual rows with a mandatory header.
std::string spectrum_csv(const Spectrum& s);

}  // namespace divform
