#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace xxff::cli {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  throw std::logic_error("unknown provenance");
}

Provenance parse_provenance(const std::string& text) {
  if (text == "PAPER") return Provenance::Paper;
  if (text == "TRIVIAL") return Provenance::Trivial;
  if (text == "DERIVED") return Provenance::Derived;
  throw std::invalid_argument("unknown provenance tag: " + text);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int Report::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.passed; }));
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

void Report::check_abs(std::string name, double expected, double actual, double tolerance, Provenance p) {
  const bool ok = std::fabs(actual - expected) <= tolerance;
  records.push_back({std::move(name), format_double(expected), format_double(actual), tolerance, ok, p});
}

void Report::check_rel(std::string name, double expected, double actual, double tolerance, Provenance p) {
  const bool ok = std::fabs(actual / expected - 1.0) <= tolerance;
  records.push_back({std::move(name), format_double(expected), format_double(actual), tolerance, ok, p});
}

void Report::check_exact(std::string name, const BigRational& expected, const BigRational& actual,
                         Provenance p) {
  records.push_back({std::move(name), xxff::to_string(expected), xxff::to_string(actual), 0.0, expected == actual, p});
}

void Report::check(std::string name, std::string expected, std::string actual, bool ok, Provenance p,
                   double tolerance) {
  records.push_back({std::move(name), std::move(expected), std::move(actual), tolerance, ok, p});
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  tables.insert(tables.end(), other.tables.begin(), other.tables.end());
  coefficients.insert(coefficients.end(), other.coefficients.begin(), other.coefficients.end());
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"name", rec.name},
                       {"expected", rec.expected},
                       {"actual", rec.actual},
                       {"tolerance", rec.tolerance},
                       {"pass", rec.passed},
                       {"provenance", to_string(rec.provenance)}});
  }
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  json coeffs = json::array();
  for (const auto& c : r.coefficients) {
    coeffs.push_back({{"parity", c.parity},
                      {"power", c.power},
                      {"numerator", c.numerator},
                      {"denominator", c.denominator},
                      {"extrapolated", c.extrapolated}});
  }
  return {{"command", r.command},
          {"version", r.version},
          {"records", records},
          {"tables", tables},
          {"coefficients", coeffs},
          {"summary", {{"passed", r.passed()}, {"failed", r.failed()}, {"total", r.records.size()}}}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  for (const auto& rec : j.at("records")) {
    r.records.push_back({rec.at("name").get<std::string>(), rec.at("expected").get<std::string>(),
                         rec.at("actual").get<std::string>(), rec.at("tolerance").get<double>(),
                         rec.at("pass").get<bool>(), parse_provenance(rec.at("provenance").get<std::string>())});
  }
  for (const auto& t : j.at("tables")) {
    r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                        t.at("rows").get<std::vector<std::vector<std::string>>>()});
  }
  for (const auto& c : j.at("coefficients")) {
    r.coefficients.push_back({c.at("parity").get<std::string>(), c.at("power").get<int>(),
                              c.at("numerator").get<std::string>(), c.at("denominator").get<std::string>(),
                              c.at("extrapolated").get<bool>()});
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << '\n';
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
  for (const auto& t : r.tables) {
    write_row(os, t.columns);
    for (const auto& row : t.rows) write_row(os, row);
    os << '\n';
  }
  if (!r.coefficients.empty()) {
    write_row(os, {"parity", "power", "numerator", "denominator", "extrapolated"});
    for (const auto& c : r.coefficients) {
      write_row(os, {c.parity, std::to_string(c.power), c.numerator, c.denominator,
                     c.extrapolated ? "true" : "false"});
    }
    os << '\n';
  }
  write_row(os, {"record", "expected", "actual", "tolerance", "pass", "provenance"});
  for (const auto& rec : r.records) {
    write_row(os, {rec.name, rec.expected, rec.actual, format_double(rec.tolerance),
                   rec.passed ? "PASS" : "FAIL", to_string(rec.provenance)});
  }
}

}  // namespace xxff::cli
