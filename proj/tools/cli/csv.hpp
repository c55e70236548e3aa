#ifndef STEKLOV_CLI_CSV_HPP
#define STEKLOV_CLI_CSV_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>

#include "steklov/errors.hpp"

namespace steklov::cli {

/// CSV with a one-line header, 17 significant digits and '\n' line endings.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out_ << header << '\n';
  }

  void row(std::initializer_list<double> values) { row("", values); }

  /// A row led by a text cell; an empty label is omitted.
  void row(const std::string& label, std::initializer_list<double> values) {
    std::string line = label;
    bool first = label.empty();
    for (double v : values) {
      if (!first) line += ',';
      first = false;
      line += number(v);
    }
    out_ << line << '\n';
  }

  static std::string number(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
  }

 private:
  std::ofstream out_;
};

}  // namespace steklov::cli

#endif  // STEKLOV_CLI_CSV_HPP
