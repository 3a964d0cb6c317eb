#include "ridealog/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridealog/errors.hpp"
#include "ridealog/format.hpp"

namespace ridealog {
namespace {

std::string trim(const std::string& s) {
  const auto* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& section, const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' in [" + section + "] has a non-numeric value '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw ConfigError("key '" + key + "' in [" + section + "] has a non-numeric value '" + text + "'");
  }
  return value;
}

int parse_count(const std::string& section, const std::string& key, const std::string& text) {
  const double value = parse_number(section, key, text);
  if (value < 1 || value != std::floor(value) || value > 1 << 24) {
    throw ConfigError("key '" + key + "' in [" + section + "] must be a positive integer");
  }
  return static_cast<int>(value);
}

struct RawEntry {
  std::string key;
  std::string value;
  int line = 0;
};

using Section = std::vector<RawEntry>;

const RawEntry* find(const Section& section, const std::string& key) {
  for (const RawEntry& entry : section) {
    if (entry.key == key) {
      return &entry;
    }
  }
  return nullptr;
}

/// Moves every recognized key from `section` into config.params (or the
/// excitation map); anything left over afterwards is unknown.
class KeyReader {
 public:
  KeyReader(std::string section_name, const Section& section)
      : section_name_(std::move(section_name)), section_(section) {}

  [[nodiscard]] std::optional<double> optional(const std::string& key) {
    const RawEntry* entry = find(section_, key);
    if (entry == nullptr) {
      return std::nullopt;
    }
    consumed_.push_back(key);
    return parse_number(section_name_, key, entry->value);
  }

  [[nodiscard]] double required(const std::string& key, const std::string& kind) {
    std::optional<double> value = optional(key);
    if (!value) {
      throw ConfigError("missing required key '" + key + "' in [" + section_name_ + "] for " + kind);
    }
    return *value;
  }

  void finish() const {
    for (const RawEntry& entry : section_) {
      if (std::find(consumed_.begin(), consumed_.end(), entry.key) == consumed_.end()) {
        throw ConfigError("unknown key '" + entry.key + "' in [" + section_name_ + "] (line " +
                          std::to_string(entry.line) + ")");
      }
    }
  }

 private:
  std::string section_name_;
  const Section& section_;
  std::vector<std::string> consumed_;
};

void store(std::map<std::string, double>& target, const std::string& key,
           std::optional<double> value) {
  if (value) {
    target[key] = *value;
  }
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::TwoDof: return "two_dof";
    case ModelKind::HalfCar: return "half_car";
    case ModelKind::ThreeAxle: return "three_axle";
  }
  throw std::logic_error("unreachable model kind");
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "two_dof") return ModelKind::TwoDof;
  if (name == "half_car") return ModelKind::HalfCar;
  if (name == "three_axle") return ModelKind::ThreeAxle;
  throw ConfigError("unknown model kind '" + name + "' (expected two_dof, half_car or three_axle)");
}

RunConfig parse_config(const std::string& text) {
  // ---- raw scan ------------------------------------------------------------
  std::map<std::string, Section> sections;
  const std::vector<std::string> known_sections = {"model", "excitation", "solver", "output"};
  std::istringstream stream(text);
  std::string raw_line;
  std::string current;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const auto hash = raw_line.find('#');
    std::string line = trim(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header '" + line + "'");
      }
      current = trim(line.substr(1, line.size() - 2));
      if (std::find(known_sections.begin(), known_sections.end(), current) == known_sections.end()) {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + current + "]");
      }
      sections[current];   // a section may legitimately stay empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + line + "'");
    }
    if (current.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
    }
    RawEntry entry{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
    if (entry.key.empty() || entry.value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + line + "'");
    }
    if (find(sections[current], entry.key) != nullptr) {
      throw ConfigError("duplicate key '" + entry.key + "' in [" + current + "] (line " +
                        std::to_string(line_no) + ")");
    }
    sections[current].push_back(std::move(entry));
  }

  // ---- model kind ----------------------------------------------------------
  if (sections.find("model") == sections.end()) {
    throw ConfigError("missing [model] section");
  }
  Section model_section = sections["model"];
  const RawEntry* kind_entry = find(model_section, "kind");
  if (kind_entry == nullptr) {
    throw ConfigError("missing required key 'kind' in [model]");
  }
  RunConfig config;
  config.kind = model_kind_from_string(kind_entry->value);
  model_section.erase(std::remove_if(model_section.begin(), model_section.end(),
                                     [](const RawEntry& e) { return e.key == "kind"; }),
                      model_section.end());

  const std::string kind_name = to_string(config.kind);
  KeyReader model("model", model_section);

  // ---- model parameters ----------------------------------------------------
  if (config.kind == ModelKind::TwoDof) {
    for (const char* key : {"m1", "m2", "k1", "k2", "d1", "d2"}) {
      config.params[key] = model.required(key, kind_name);
    }
  } else {
    for (const char* key : {"m", "I_G", "m_ssd", "m_sst", "k_sd", "k_st", "d_sd", "d_st",
                            "k_rd", "k_rt", "d_rd", "d_rt", "l_d", "l_t"}) {
      config.params[key] = model.required(key, kind_name);
    }
    if (config.kind == ModelKind::ThreeAxle) {
      for (const char* key : {"m_ssm", "k_sm", "d_sm", "k_rm", "d_rm", "l_a", "l_b"}) {
        config.params[key] = model.required(key, kind_name);
      }
    }
    store(config.params, "g", model.optional("g"));
    if (std::optional<double> l = model.optional("l")) {
      const double derived = config.params["l_d"] + config.params["l_t"];
      if (std::abs(*l - derived) > 1e-9 * std::max(std::abs(derived), 1.0)) {
        throw ConfigError("key 'l' in [model] contradicts l_d + l_t (" + format_full(*l) +
                          " vs " + format_full(derived) + ")");
      }
      // redundant once checked; dropped so equal setups compare equal
    }
  }
  model.finish();

  // ---- excitation ----------------------------------------------------------
  if (sections.find("excitation") == sections.end()) {
    throw ConfigError("missing [excitation] section");
  }
  KeyReader excitation("excitation", sections["excitation"]);
  if (config.kind == ModelKind::TwoDof) {
    config.excitation_values["omega"] = excitation.required("omega", kind_name);
    config.excitation_values["f_amplitude"] = excitation.required("f_amplitude", kind_name);
    config.excitation_values["f_phase"] = excitation.optional("f_phase").value_or(0.0);
  } else {
    config.excitation_values["Y"] = excitation.required("Y", kind_name);
    config.excitation_values["lambda"] = excitation.required("lambda", kind_name);
    const std::optional<double> v = excitation.optional("v");
    const std::optional<double> v_kmh = excitation.optional("v_kmh");
    if (v && v_kmh) {
      throw ConfigError("keys 'v' and 'v_kmh' in [excitation] are mutually exclusive");
    }
    if (!v && !v_kmh) {
      throw ConfigError("missing required key 'v' (or 'v_kmh') in [excitation] for " + kind_name);
    }
    config.excitation_values["v"] = v ? *v : *v_kmh / 3.6;
  }
  excitation.finish();

  // ---- solver --------------------------------------------------------------
  if (sections.find("solver") != sections.end()) {
    const Section& solver_section = sections["solver"];
    KeyReader solver("solver", solver_section);
    if (std::optional<double> tol = solver.optional("tolerance")) {
      if (*tol <= 0) {
        throw ConfigError("key 'tolerance' in [solver] must be positive");
      }
      config.solver.tolerance = *tol;
    }
    if (const RawEntry* entry = find(solver_section, "periods")) {
      (void)solver.optional("periods");
      config.solver.periods = parse_count("solver", "periods", entry->value);
    }
    if (const RawEntry* entry = find(solver_section, "samples")) {
      (void)solver.optional("samples");
      config.solver.samples = parse_count("solver", "samples", entry->value);
    }
    config.solver.sweep_from = solver.optional("sweep_from");
    config.solver.sweep_to = solver.optional("sweep_to");
    if (const RawEntry* entry = find(solver_section, "sweep_points")) {
      (void)solver.optional("sweep_points");
      config.solver.sweep_points = parse_count("solver", "sweep_points", entry->value);
    }
    solver.finish();
  }

  // ---- output --------------------------------------------------------------
  if (sections.find("output") != sections.end()) {
    for (const RawEntry& entry : sections["output"]) {
      if (entry.key == "netlist") {
        config.output.netlist = entry.value;
      } else if (entry.key == "solution") {
        config.output.solution = entry.value;
      } else if (entry.key == "sweep") {
        config.output.sweep = entry.value;
      } else if (entry.key == "timeseries") {
        config.output.timeseries = entry.value;
      } else {
        throw ConfigError("unknown key '" + entry.key + "' in [output] (line " +
                          std::to_string(entry.line) + ")");
      }
    }
  }

  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

namespace {

double fetch(const std::map<std::string, double>& values, const std::string& key) {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw ConfigError("internal: key '" + key + "' missing from parsed config");
  }
  return it->second;
}

double fetch_or(const std::map<std::string, double>& values, const std::string& key,
                double fallback) {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

}  // namespace

TwoDofParams RunConfig::two_dof_params() const {
  if (kind != ModelKind::TwoDof) {
    throw ConfigError("config holds a " + to_string(kind) + " model, not two_dof");
  }
  TwoDofParams p;
  p.m1 = fetch(params, "m1");
  p.m2 = fetch(params, "m2");
  p.k1 = fetch(params, "k1");
  p.k2 = fetch(params, "k2");
  p.d1 = fetch(params, "d1");
  p.d2 = fetch(params, "d2");
  p.f_amplitude = fetch(excitation_values, "f_amplitude");
  p.f_phase = fetch_or(excitation_values, "f_phase", 0.0);
  return p;
}

HalfCarParams RunConfig::half_car_params() const {
  if (kind != ModelKind::HalfCar) {
    throw ConfigError("config holds a " + to_string(kind) + " model, not half_car");
  }
  HalfCarParams p;
  p.m = fetch(params, "m");
  p.I_G = fetch(params, "I_G");
  p.m_ssd = fetch(params, "m_ssd");
  p.m_sst = fetch(params, "m_sst");
  p.k_sd = fetch(params, "k_sd");
  p.k_st = fetch(params, "k_st");
  p.d_sd = fetch(params, "d_sd");
  p.d_st = fetch(params, "d_st");
  p.k_rd = fetch(params, "k_rd");
  p.k_rt = fetch(params, "k_rt");
  p.d_rd = fetch(params, "d_rd");
  p.d_rt = fetch(params, "d_rt");
  p.l_d = fetch(params, "l_d");
  p.l_t = fetch(params, "l_t");
  p.g = fetch_or(params, "g", p.g);
  return p;
}

ThreeAxleParams RunConfig::three_axle_params() const {
  if (kind != ModelKind::ThreeAxle) {
    throw ConfigError("config holds a " + to_string(kind) + " model, not three_axle");
  }
  ThreeAxleParams p;
  p.m = fetch(params, "m");
  p.I_G = fetch(params, "I_G");
  p.m_ssd = fetch(params, "m_ssd");
  p.m_ssm = fetch(params, "m_ssm");
  p.m_sst = fetch(params, "m_sst");
  p.k_sd = fetch(params, "k_sd");
  p.k_sm = fetch(params, "k_sm");
  p.k_st = fetch(params, "k_st");
  p.d_sd = fetch(params, "d_sd");
  p.d_sm = fetch(params, "d_sm");
  p.d_st = fetch(params, "d_st");
  p.k_rd = fetch(params, "k_rd");
  p.k_rm = fetch(params, "k_rm");
  p.k_rt = fetch(params, "k_rt");
  p.d_rd = fetch(params, "d_rd");
  p.d_rm = fetch(params, "d_rm");
  p.d_rt = fetch(params, "d_rt");
  p.l_d = fetch(params, "l_d");
  p.l_t = fetch(params, "l_t");
  p.l_a = fetch(params, "l_a");
  p.l_b = fetch(params, "l_b");
  p.g = fetch_or(params, "g", p.g);
  return p;
}

SecondOrderModel RunConfig::build_model() const {
  switch (kind) {
    case ModelKind::TwoDof: return build_two_dof(two_dof_params());
    case ModelKind::HalfCar: return build_half_car(half_car_params());
    case ModelKind::ThreeAxle: return build_three_axle(three_axle_params());
  }
  throw std::logic_error("unreachable model kind");
}

ExcitationSpec RunConfig::excitation() const {
  if (kind == ModelKind::TwoDof) {
    return ExcitationSpec::forced(fetch(excitation_values, "omega"));
  }
  HarmonicRoadExcitation road;
  road.Y = fetch(excitation_values, "Y");
  road.lambda = fetch(excitation_values, "lambda");
  road.v = fetch(excitation_values, "v");
  return ExcitationSpec::roadway(road);
}

std::string write_canonical(const RunConfig& config) {
  std::ostringstream out;
  const auto emit = [&out](const std::string& key, double value) {
    out << key << " = " << format_full(value) << '\n';
  };

  out << "[model]\n";
  out << "kind = " << to_string(config.kind) << '\n';
  std::vector<std::string> order;
  if (config.kind == ModelKind::TwoDof) {
    order = {"m1", "m2", "k1", "k2", "d1", "d2"};
  } else if (config.kind == ModelKind::HalfCar) {
    order = {"m", "I_G", "m_ssd", "m_sst", "k_sd", "k_st", "d_sd", "d_st",
             "k_rd", "k_rt", "d_rd", "d_rt", "l_d", "l_t", "g"};
  } else {
    order = {"m", "I_G", "m_ssd", "m_ssm", "m_sst", "k_sd", "k_sm", "k_st",
             "d_sd", "d_sm", "d_st", "k_rd", "k_rm", "k_rt", "d_rd", "d_rm", "d_rt",
             "l_d", "l_t", "l_a", "l_b", "g"};
  }
  for (const std::string& key : order) {
    const auto it = config.params.find(key);
    if (it != config.params.end()) {
      emit(key, it->second);
    }
  }

  out << "\n[excitation]\n";
  for (const char* key : {"Y", "lambda", "v", "omega", "f_amplitude", "f_phase"}) {
    const auto it = config.excitation_values.find(key);
    if (it != config.excitation_values.end()) {
      emit(key, it->second);
    }
  }

  out << "\n[solver]\n";
  emit("tolerance", config.solver.tolerance);
  emit("periods", config.solver.periods);
  emit("samples", config.solver.samples);
  if (config.solver.sweep_from) {
    emit("sweep_from", *config.solver.sweep_from);
  }
  if (config.solver.sweep_to) {
    emit("sweep_to", *config.solver.sweep_to);
  }
  if (config.solver.sweep_points) {
    emit("sweep_points", *config.solver.sweep_points);
  }

  const bool any_output = !config.output.netlist.empty() || !config.output.solution.empty() ||
                          !config.output.sweep.empty() || !config.output.timeseries.empty();
  if (any_output) {
    out << "\n[output]\n";
    const auto emit_path = [&out](const char* key, const std::string& value) {
      if (!value.empty()) {
        out << key << " = " << value << '\n';
      }
    };
    emit_path("netlist", config.output.netlist);
    emit_path("solution", config.output.solution);
    emit_path("sweep", config.output.sweep);
    emit_path("timeseries", config.output.timeseries);
  }

  return out.str();
}

}  // namespace ridealog
