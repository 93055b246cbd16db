#ifndef FQRANK_TOOLS_OUTPUT_RECORD_H_
#define FQRANK_TOOLS_OUTPUT_RECORD_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fqrank/exact.h"

namespace fqrank::cli {

// One output value. Rationals are rendered as "num/den"; their 12-digit
// decimal companion is a separate Real cell.
struct Cell {
  enum class Kind { kInt, kBig, kRatio, kReal, kText, kBool };
  Kind kind = Kind::kText;
  std::string text;

  static Cell integer(std::int64_t v);
  static Cell big(const BigCount& v);
  static Cell ratio(const Rational& v);
  static Cell real(double v);
  static Cell decimal(const Rational& v);
  static Cell str(std::string v);
  static Cell boolean(bool v);
};

enum class Format { kCsv, kJson };

// A table plus a parameter echo and a summary block. CSV puts the echo and
// the summary on '#' lines ahead of the header row; JSON nests them under
// "params" and "summary".
struct Record {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void param(std::string key, Cell value) { params.emplace_back(std::move(key), std::move(value)); }
  void note(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }
  // Adds `key` as num/den and `key_decimal` as a 12-digit decimal.
  void note_rational(const std::string& key, const Rational& value);
};

void write_record(std::ostream& os, const Record& record, Format format);

// 12 significant digits.
std::string format_real(double v);

}  // namespace fqrank::cli

#endif  // FQRANK_TOOLS_OUTPUT_RECORD_H_
