#include "divform/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace divform {

namespace {

using nlohmann::json;

void dump_value(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad;
        out += json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump_value(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json_17(const json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += '\n';
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename failed: " + path);
  }
}

namespace {
// Keeps NaN out of report documents so serialized text re-parses identically.
json num_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }
}  // namespace

json constants_to_json(const OperatorConstants& c) {
  return json{{"epsilon", c.epsilon}, {"delta", c.delta}, {"T0", c.T0},
              {"eta0", c.eta0},       {"C0", c.C0},       {"H0", c.H0}};
}

json spectrum_to_json(const Spectrum& s) {
  json rows = json::array();
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    rows.push_back(json{{"index", i + 1},
                        {"value", s.eigenvalues[i]},
                        {"residual", s.residuals[i]}});
  }
  return rows;
}

json check_to_json(const CheckRecord& r) {
  json j{{"name", r.name},     {"k", r.k},
         {"lhs", r.lhs},       {"rhs", r.rhs},
         {"slack", r.slack},   {"margin", r.margin},
         {"pass", r.pass},     {"skipped", r.skipped},
         {"alpha", r.alpha},   {"n", r.n},
         {"t0_power", r.t0_power}};
  if (!r.note.empty()) j["note"] = r.note;
  j["constants"] = constants_to_json(r.constants);
  j["spectrum_used"] = r.spectrum_used;
  return j;
}

json bound_to_json(const BoundRecord& r) {
  json j{{"name", r.name},
         {"k", r.k},
         {"predicted", r.predicted},
         {"observed", r.observed},
         {"gap_bound", r.gap_bound},
         {"gap_observed", r.gap_observed},
         {"margin", r.margin},
         {"pass", r.pass},
         {"skipped", r.skipped},
         {"discriminant_clamped", r.discriminant_clamped},
         {"alpha", r.alpha},
         {"n", r.n},
         {"t0_power", r.t0_power},
         {"shift", r.shift}};
  if (r.name == "fourth_order_bound") {
    j["A_k"] = r.a_k;
    j["B_k"] = r.b_k;
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["constants"] = constants_to_json(r.constants);
  j["spectrum_used"] = r.spectrum_used;
  return j;
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "index,eigenvalue,residual\n";
  char buf[96];
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", i + 1,
                  s.eigenvalues[i], s.residuals[i]);
    out += buf;
  }
  return out;
}

}  // namespace divform
