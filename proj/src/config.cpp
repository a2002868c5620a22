#include "divform/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace divform {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// One scalar token of the flat form: bool, number, or bare string.
json parse_token(const std::string& tok) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  try {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  return tok;
}

json parse_flat(const std::string& text) {
  json doc = json::object();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key or value");
    }

    json parsed;
    if (value.find(',') != std::string::npos) {
      parsed = json::array();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        parsed.push_back(parse_token(trim(item)));
      }
    } else {
      parsed = parse_token(value);
    }

    json* slot = &doc;
    std::istringstream path(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) parts.push_back(part);
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      slot = &(*slot)[parts[i]];
    }
    (*slot)[parts.back()] = parsed;
  }
  return doc;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

std::array<double, 2> get_pair(const json& j, const char* key,
                               std::array<double, 2> fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.empty() || v.size() > 2) {
    throw std::invalid_argument(std::string("config: ") + key +
                                " must be a number or a list of 1-2 numbers");
  }
  std::array<double, 2> out{v[0].get<double>(),
                            v.size() > 1 ? v[1].get<double>() : 0.0};
  return out;
}

}  // namespace

void RunConfig::validate() const {
  domain.validate();
  if (alpha < 0.0) {
    throw std::invalid_argument("config: problem.alpha must be >= 0");
  }
  if (k < 1) throw std::invalid_argument("config: solve.k must be >= 1");
  if (!(tol > 0.0) || tol > 1e-4) {
    throw std::invalid_argument("config: solve.tol must lie in (0, 1e-4]");
  }
  if (verify.t0_power != 1 && verify.t0_power != 2) {
    throw std::invalid_argument("config: verify.t0_power must be 1 or 2");
  }
  if (verify.refinement_levels < 1) {
    throw std::invalid_argument("config: verify.refinement_levels must be >= 1");
  }
}

RunConfig config_from_json(const json& doc) {
  RunConfig cfg;

  const json dom = doc.value("domain", json::object());
  const std::string kind = get_or<std::string>(dom, "kind", "box");
  if (kind == "box") {
    cfg.domain.kind = DomainKind::box;
  } else if (kind == "arc") {
    cfg.domain.kind = DomainKind::arc;
  } else {
    throw std::invalid_argument("config: domain.kind must be box or arc");
  }
  if (cfg.domain.kind == DomainKind::box) {
    const json lengths = dom.contains("lengths") ? dom.at("lengths") : json(1.0);
    if (lengths.is_number()) {
      cfg.domain.dimension = 1;
      cfg.domain.lengths = {lengths.get<double>(), 0.0};
    } else if (lengths.is_array() && lengths.size() >= 1 && lengths.size() <= 2) {
      cfg.domain.dimension = static_cast<int>(lengths.size());
      cfg.domain.lengths = {lengths[0].get<double>(),
                            lengths.size() > 1 ? lengths[1].get<double>() : 0.0};
    } else {
      throw std::invalid_argument("config: domain.lengths must list 1-2 sides");
    }
  } else {
    cfg.domain.radius = get_or<double>(dom, "radius", 1.0);
    cfg.domain.angle_span = get_or<double>(dom, "angle_span", 3.141592653589793);
    cfg.domain.dimension = 1;
  }
  cfg.domain.resolution = get_or<int>(dom, "resolution", 16);

  const json eta = doc.value("eta", json::object());
  const std::string eta_kind = get_or<std::string>(eta, "preset", "zero");
  if (eta_kind == "zero") {
    cfg.eta.kind = EtaPreset::Kind::zero;
  } else if (eta_kind == "quadratic") {
    cfg.eta.kind = EtaPreset::Kind::quadratic;
    cfg.eta.c = get_or<double>(eta, "c", 1.0);
    cfg.eta.center = get_pair(eta, "center", {0.0, 0.0});
  } else if (eta_kind == "linear") {
    cfg.eta.kind = EtaPreset::Kind::linear;
    cfg.eta.slope = get_pair(eta, "a", {0.0, 0.0});
  } else if (eta_kind == "tabulated") {
    cfg.eta.kind = EtaPreset::Kind::tabulated;
    if (!eta.contains("values") || !eta.at("values").is_array()) {
      throw std::invalid_argument("config: eta.values required for tabulated");
    }
    const auto& vals = eta.at("values");
    cfg.eta.table.resize(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) cfg.eta.table[i] = vals[i];
  } else {
    throw std::invalid_argument("config: unknown eta preset '" + eta_kind + "'");
  }

  const json ten = doc.value("tensor", json::object());
  const std::string ten_kind = get_or<std::string>(ten, "preset", "identity");
  if (ten_kind == "identity") {
    cfg.tensor.kind = TensorPreset::Kind::identity;
  } else if (ten_kind == "constant_diagonal") {
    cfg.tensor.kind = TensorPreset::Kind::constant_diagonal;
    cfg.tensor.diag = get_pair(ten, "diag", {1.0, 1.0});
    if (ten.contains("diag") && ten.at("diag").is_number()) {
      cfg.tensor.diag[1] = cfg.tensor.diag[0];
    }
  } else if (ten_kind == "rotated_diagonal") {
    cfg.tensor.kind = TensorPreset::Kind::rotated_diagonal;
    cfg.tensor.a = get_or<double>(ten, "a", 1.0);
    cfg.tensor.b = get_or<double>(ten, "b", 1.0);
    cfg.tensor.angle = get_or<double>(ten, "angle", 0.0);
  } else if (ten_kind == "varying_diagonal") {
    cfg.tensor.kind = TensorPreset::Kind::varying_diagonal;
    cfg.tensor.beta = get_or<double>(ten, "beta", 0.0);
  } else {
    throw std::invalid_argument("config: unknown tensor preset '" + ten_kind +
                                "'");
  }

  const json prob = doc.value("problem", json::object());
  const std::string pk =
      get_or<std::string>(prob, "kind", "scalar_second_order");
  if (pk == "scalar_second_order") {
    cfg.problem = ProblemKind::scalar_second_order;
  } else if (pk == "second_order_system" || pk == "vector_system") {
    cfg.problem = ProblemKind::second_order_system;
  } else if (pk == "fourth_order_clamped") {
    cfg.problem = ProblemKind::fourth_order_clamped;
  } else {
    throw std::invalid_argument("config: unknown problem kind '" + pk + "'");
  }
  cfg.alpha = get_or<double>(prob, "alpha", 0.0);

  const json solve = doc.value("solve", json::object());
  cfg.k = get_or<int>(solve, "k", 6);
  cfg.tol = get_or<double>(solve, "tol", 1e-8);
  cfg.seed = get_or<std::uint64_t>(solve, "seed", 0);

  const json verify = doc.value("verify", json::object());
  cfg.verify.t0_power = get_or<int>(verify, "t0_power", 1);
  const std::string reading =
      get_or<std::string>(verify, "lower_order_reading", "printed");
  if (reading == "printed") {
    cfg.verify.lower_order_reading = LowerOrderReading::printed;
  } else if (reading == "shifted") {
    cfg.verify.lower_order_reading = LowerOrderReading::shifted;
  } else {
    throw std::invalid_argument(
        "config: verify.lower_order_reading must be printed or shifted");
  }
  cfg.verify.relax_div_term = get_or<bool>(verify, "relax_div_term", true);
  cfg.verify.refinement_levels = get_or<int>(verify, "refinement_levels", 2);

  cfg.validate();
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  json doc;
  json& dom = doc["domain"];
  if (cfg.domain.kind == DomainKind::box) {
    dom["kind"] = "box";
    json lengths = json::array();
    for (int a = 0; a < cfg.domain.dimension; ++a) {
      lengths.push_back(cfg.domain.lengths[a]);
    }
    dom["lengths"] = lengths;
  } else {
    dom["kind"] = "arc";
    dom["radius"] = cfg.domain.radius;
    dom["angle_span"] = cfg.domain.angle_span;
  }
  dom["resolution"] = cfg.domain.resolution;

  json& eta = doc["eta"];
  switch (cfg.eta.kind) {
    case EtaPreset::Kind::zero:
      eta["preset"] = "zero";
      break;
    case EtaPreset::Kind::quadratic:
      eta["preset"] = "quadratic";
      eta["c"] = cfg.eta.c;
      eta["center"] = {cfg.eta.center[0], cfg.eta.center[1]};
      break;
    case EtaPreset::Kind::linear:
      eta["preset"] = "linear";
      eta["a"] = {cfg.eta.slope[0], cfg.eta.slope[1]};
      break;
    case EtaPreset::Kind::tabulated: {
      eta["preset"] = "tabulated";
      json vals = json::array();
      for (int i = 0; i < cfg.eta.table.size(); ++i) {
        vals.push_back(cfg.eta.table[i]);
      }
      eta["values"] = vals;
      break;
    }
  }

  json& ten = doc["tensor"];
  switch (cfg.tensor.kind) {
    case TensorPreset::Kind::identity:
      ten["preset"] = "identity";
      break;
    case TensorPreset::Kind::constant_diagonal:
      ten["preset"] = "constant_diagonal";
      ten["diag"] = {cfg.tensor.diag[0], cfg.tensor.diag[1]};
      break;
    case TensorPreset::Kind::rotated_diagonal:
      ten["preset"] = "rotated_diagonal";
      ten["a"] = cfg.tensor.a;
      ten["b"] = cfg.tensor.b;
      ten["angle"] = cfg.tensor.angle;
      break;
    case TensorPreset::Kind::varying_diagonal:
      ten["preset"] = "varying_diagonal";
      ten["beta"] = cfg.tensor.beta;
      break;
  }

  json& prob = doc["problem"];
  prob["kind"] = cfg.problem == ProblemKind::scalar_second_order
                     ? "scalar_second_order"
                     : cfg.problem == ProblemKind::second_order_system
                           ? "second_order_system"
                           : "fourth_order_clamped";
  prob["alpha"] = cfg.alpha;

  json& solve = doc["solve"];
  solve["k"] = cfg.k;
  solve["tol"] = cfg.tol;
  solve["seed"] = cfg.seed;

  json& verify = doc["verify"];
  verify["t0_power"] = cfg.verify.t0_power;
  verify["lower_order_reading"] =
      cfg.verify.lower_order_reading == LowerOrderReading::printed ? "printed"
                                                                   : "shifted";
  verify["relax_div_term"] = cfg.verify.relax_div_term;
  verify["refinement_levels"] = cfg.verify.refinement_levels;
  return doc;
}

RunConfig parse_config_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  json doc;
  if (first != std::string::npos && text[first] == '{') {
    doc = json::parse(text);
  } else {
    doc = parse_flat(text);
  }
  return config_from_json(doc);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_numeric_override(json& cfg, const std::string& path, double value) {
  json* slot = &cfg;
  std::istringstream stream(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(stream, part, '.')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty parameter path");
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!slot->contains(parts[i])) {
      throw std::invalid_argument("unknown parameter path: " + path);
    }
    slot = &slot->at(parts[i]);
  }
  if (!slot->contains(parts.back()) || !slot->at(parts.back()).is_number()) {
    throw std::invalid_argument("unknown or non-numeric parameter path: " +
                                path);
  }
  (*slot)[parts.back()] = value;
}

}  // namespace divform
