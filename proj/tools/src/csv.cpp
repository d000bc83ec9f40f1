#include "csv.hpp"

#include <casimir/errors.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace casimir_cli {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void CsvDoc::meta(const std::string& key, const std::string& value) {
  lines_.push_back("# " + key + ": " + value);
}

void CsvDoc::columns(const std::vector<std::string>& names) {
  std::string line = "# columns: ";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) line += ",";
    line += names[i];
  }
  lines_.push_back(line);
  n_columns_ = names.size();
}

void CsvDoc::row(const std::vector<double>& values) {
  if (n_columns_ != 0 && values.size() != n_columns_) {
    throw casimir::Error("CsvDoc: row width does not match columns header");
  }
  std::string line;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) line += ",";
    line += format_sci(values[i]);
  }
  lines_.push_back(line);
}

std::string CsvDoc::str() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

void CsvDoc::write(const std::string& path) const {
  if (path.empty() || path == "-") {
    std::cout << str();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw casimir::ValidationError("cannot open output file: " + tmp.string());
    }
    out << str();
    if (!out.flush()) {
      throw casimir::Error("failed writing output file: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw casimir::Error("failed to move " + tmp.string() + " to " + target.string() +
                         ": " + ec.message());
  }
}

}  // namespace casimir_cli
