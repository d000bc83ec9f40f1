#pragma once

#include <string>
#include <vector>

namespace casimir_cli {

/// Scientific notation with 9 significant digits; round-trips doubles.
std::string format_sci(double v);

/// CSV document with '#'-prefixed metadata lines followed by a
/// '# columns: ...' header and data rows. Deterministic byte output.
class CsvDoc {
 public:
  void meta(const std::string& key, const std::string& value);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);

  std::string str() const;

  /// Writes to path atomically (temp file + rename); "-" or "" means stdout.
  void write(const std::string& path) const;

 private:
  std::vector<std::string> lines_;
  size_t n_columns_ = 0;
};

}  // namespace casimir_cli
