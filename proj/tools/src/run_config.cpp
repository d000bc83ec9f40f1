#include "run_config.hpp"

#include "csv.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace casimir_cli {

using casimir::ValidationError;

std::vector<double> GridSpec::points() const {
  if (count < 1) throw ValidationError("grid: count must be >= 1");
  if (!(start > 0.0) || !(stop >= start)) {
    throw ValidationError("grid: need 0 < start <= stop");
  }
  if (count == 1) return {start};
  std::vector<double> pts(count);
  if (log_spacing) {
    const double step = std::log(stop / start) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = start * std::exp(step * i);
  } else {
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = start + step * i;
  }
  pts.front() = start;
  pts.back() = stop;
  return pts;
}

std::string GridSpec::str() const {
  std::ostringstream ss;
  ss << format_sci(start) << ":" << format_sci(stop) << ":" << count
     << (log_spacing ? ":log" : ":lin");
  return ss.str();
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ':')) parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ValidationError("grid '" + text + "': expected start:stop:count[:log]");
  }
  GridSpec g;
  try {
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.count = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw ValidationError("grid '" + text + "': non-numeric field");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log_spacing = true;
    } else if (parts[3] == "lin") {
      g.log_spacing = false;
    } else {
      throw ValidationError("grid '" + text + "': spacing must be 'log' or 'lin'");
    }
  }
  g.points();  // validate eagerly
  return g;
}

void RunConfig::apply_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config file " + path + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "model") {
        model = value.get<std::string>();
      } else if (key == "omega_p") {
        omega_p = value.get<double>();
      } else if (key == "gamma") {
        gamma = value.get<double>();
      } else if (key == "table") {
        table_path = value.get<std::string>();
      } else if (key == "tail") {
        tail = value.get<std::string>();
      } else if (key == "T") {
        temperature = value.get<double>();
      } else if (key == "a") {
        a_single = value.get<double>();
      } else if (key == "a_grid") {
        a_grid = parse_grid(value.get<std::string>());
      } else if (key == "rel_tol") {
        quad.rel_tol = value.get<double>();
      } else if (key == "abs_tol") {
        quad.abs_tol = value.get<double>();
      } else if (key == "max_subdivisions") {
        quad.max_subdivisions = value.get<int>();
      } else if (key == "out") {
        out = value.get<std::string>();
      } else {
        throw ValidationError("config file " + path + ": unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("config file " + path + ": key '" + key + "': " + e.what());
    }
  }
}

casimir::DielectricModel RunConfig::make_model() const {
  using casimir::DielectricModel;
  if (model == "drude") {
    return DielectricModel::drude(omega_p, gamma);
  }
  if (model == "plasma") {
    return DielectricModel::plasma(omega_p);
  }
  if (model == "tabulated") {
    if (table_path.empty()) {
      throw ValidationError("tabulated model requires --table <path>");
    }
    casimir::OpticalTable table = casimir::OpticalTable::load(table_path);
    casimir::Extrapolation ext;
    if (tail == "drude") {
      ext.kind = casimir::TailKind::Drude;
    } else if (tail == "plasma") {
      ext.kind = casimir::TailKind::Plasma;
    } else {
      throw ValidationError("--tail must be 'drude' or 'plasma', got '" + tail + "'");
    }
    ext.params = {omega_p, gamma};
    return DielectricModel::tabulated(std::move(table), ext);
  }
  throw ValidationError("--model must be drude, plasma or tabulated, got '" + model + "'");
}

std::vector<double> RunConfig::separations() const {
  if (a_grid) return a_grid->points();
  if (a_single) {
    if (!(*a_single > 0.0)) throw ValidationError("--a must be positive");
    return {*a_single};
  }
  return {1e-6};
}

std::string RunConfig::describe_grid() const {
  if (a_grid) return a_grid->str();
  if (a_single) return format_sci(*a_single);
  return format_sci(1e-6);
}

}  // namespace casimir_cli
