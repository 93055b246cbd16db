#include "output_record.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace fqrank::cli {

Cell Cell::integer(std::int64_t v) { return {Kind::kInt, std::to_string(v)}; }
Cell Cell::big(const BigCount& v) { return {Kind::kBig, v.get_str()}; }
Cell Cell::ratio(const Rational& v) { return {Kind::kRatio, to_num_den(v)}; }
Cell Cell::real(double v) { return {Kind::kReal, format_real(v)}; }
Cell Cell::decimal(const Rational& v) { return {Kind::kReal, to_decimal(v, 12)}; }
Cell Cell::str(std::string v) { return {Kind::kText, std::move(v)}; }
Cell Cell::boolean(bool v) { return {Kind::kBool, v ? "true" : "false"}; }

void Record::note_rational(const std::string& key, const Rational& value) {
  note(key, Cell::ratio(value));
  note(key + "_decimal", Cell::decimal(value));
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kInt:
      return std::stoll(c.text);
    case Cell::Kind::kReal:
      return std::stod(c.text);
    case Cell::Kind::kBool:
      return c.text == "true";
    case Cell::Kind::kBig:
    case Cell::Kind::kRatio:
    case Cell::Kind::kText:
      break;
  }
  return c.text;
}

void write_csv(std::ostream& os, const Record& r) {
  os << "# command=" << r.command;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v.text;
  os << '\n';
  for (const auto& [k, v] : r.summary) os << "# " << k << '=' << v.text << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].text;
    os << '\n';
  }
}

void write_json(std::ostream& os, const Record& r) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) doc["params"][k] = to_json(v);
  doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) doc["summary"][k] = to_json(v);
  doc["columns"] = r.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = to_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace

void write_record(std::ostream& os, const Record& record, Format format) {
  if (format == Format::kJson) {
    write_json(os, record);
  } else {
    write_csv(os, record);
  }
}

}  // namespace fqrank::cli
