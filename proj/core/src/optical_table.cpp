#include <casimir/dielectric.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace casimir {
namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_row(const std::string& line, const std::string& origin,
                              long lineno) {
  std::string cleaned = line;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream ss(cleaned);
  std::vector<double> out;
  double v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  if (ss.clear(), ss >> rest) {
    throw ValidationError(origin + ":" + std::to_string(lineno) +
                          ": non-numeric field '" + rest + "'");
  }
  return out;
}

}  // namespace

OpticalTable::OpticalTable(std::vector<double> omega, std::vector<double> im_eps)
    : omega_(std::move(omega)), im_eps_(std::move(im_eps)) {
  if (omega_.size() != im_eps_.size()) {
    throw ValidationError("OpticalTable: omega/im_eps size mismatch");
  }
  if (omega_.size() < 2) {
    throw ValidationError("OpticalTable: need at least 2 samples");
  }
  for (size_t i = 0; i < omega_.size(); ++i) {
    if (!(omega_[i] > 0.0) || !std::isfinite(omega_[i])) {
      throw ValidationError("OpticalTable: omega values must be positive and finite");
    }
    if (!(im_eps_[i] >= 0.0) || !std::isfinite(im_eps_[i])) {
      throw ValidationError("OpticalTable: im_eps values must be >= 0 and finite");
    }
    if (i > 0 && !(omega_[i] > omega_[i - 1])) {
      throw ValidationError("OpticalTable: omega must be strictly increasing (sample " +
                            std::to_string(i + 1) + ")");
    }
  }
}

OpticalTable OpticalTable::parse(std::istream& in, const std::string& origin) {
  enum class Columns { Unknown, ImEps, NK } columns = Columns::Unknown;
  std::vector<double> omega, im_eps;
  std::string line;
  long lineno = 0;
  long last_data_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string lowered = [&] {
        std::string s = t;
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        return s;
      }();
      if (lowered.find("columns:") != std::string::npos) {
        if (lowered.find("im_eps") != std::string::npos) {
          columns = Columns::ImEps;
        } else if (lowered.find(" n,") != std::string::npos ||
                   lowered.find(",n,") != std::string::npos ||
                   lowered.find(", n,") != std::string::npos) {
          columns = Columns::NK;
        } else {
          throw ValidationError(origin + ":" + std::to_string(lineno) +
                                ": unrecognized columns header '" + t + "'");
        }
      }
      continue;
    }
    if (columns == Columns::Unknown) {
      throw ValidationError(origin + ":" + std::to_string(lineno) +
                            ": data before a '# columns: ...' header line");
    }
    const std::vector<double> row = parse_row(t, origin, lineno);
    const size_t expected = columns == Columns::ImEps ? 2 : 3;
    if (row.size() != expected) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(expected) + " fields, got " +
                            std::to_string(row.size()));
    }
    const double w = row[0];
    const double imeps = columns == Columns::ImEps ? row[1] : 2.0 * row[1] * row[2];
    if (!omega.empty() && !(w > omega.back())) {
      throw ValidationError(origin + ":" + std::to_string(lineno) +
                            ": rows must be sorted ascending in omega");
    }
    omega.push_back(w);
    im_eps.push_back(imeps);
    last_data_line = lineno;
  }
  if (omega.size() < 2) {
    throw ValidationError(origin + ":" + std::to_string(std::max(last_data_line, lineno)) +
                          ": need at least 2 data rows");
  }
  return OpticalTable(std::move(omega), std::move(im_eps));
}

OpticalTable OpticalTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open optical table file: " + path);
  }
  return parse(in, path);
}

double OpticalTable::interpolate(double omega) const {
  if (omega < omega_.front() || omega > omega_.back()) {
    throw DomainError("OpticalTable::interpolate: omega outside tabulated range");
  }
  const auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
  size_t hi = std::min<size_t>(it - omega_.begin(), omega_.size() - 1);
  if (hi == 0) hi = 1;
  const size_t lo = hi - 1;
  const double w0 = omega_[lo], w1 = omega_[hi];
  const double f0 = im_eps_[lo], f1 = im_eps_[hi];
  if (f0 > 0.0 && f1 > 0.0) {
    const double t = std::log(omega / w0) / std::log(w1 / w0);
    return f0 * std::exp(t * std::log(f1 / f0));
  }
  const double t = (omega - w0) / (w1 - w0);  // linear when a sample is zero
  return f0 + t * (f1 - f0);
}

}  // namespace casimir
