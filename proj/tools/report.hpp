#pragma once

#include "xxff/numerics/rational.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace xxff::cli {

/// Where an expected value comes from: a pinned reference value, a
/// trivial identity, or derived independently.
enum class Provenance { Paper, Trivial, Derived };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

struct Record {
  std::string name;
  std::string expected;
  std::string actual;
  double tolerance = 0.0;
  bool passed = false;
  Provenance provenance = Provenance::Derived;

  bool operator==(const Record&) const = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

/// One entry of an exact coefficient table.
struct Coefficient {
  std::string parity;  // "uniform" or "staggered"
  int power = 0;
  std::string numerator;
  std::string denominator;
  bool extrapolated = false;

  bool operator==(const Coefficient&) const = default;
};

struct Report {
  std::string command;
  std::string version;
  std::vector<Record> records;
  std::vector<Table> tables;
  std::vector<Coefficient> coefficients;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }

  /// |actual - expected| <= tolerance.
  void check_abs(std::string name, double expected, double actual, double tolerance, Provenance p);
  /// |actual / expected - 1| <= tolerance.
  void check_rel(std::string name, double expected, double actual, double tolerance, Provenance p);
  void check_exact(std::string name, const BigRational& expected, const BigRational& actual,
                   Provenance p);
  /// Free-form predicate with its own descriptions of both sides.
  void check(std::string name, std::string expected, std::string actual, bool passed,
             Provenance p, double tolerance = 0.0);

  void append(const Report& other);

  bool operator==(const Report&) const = default;
};

/// 17 significant digits, "." decimal separator, locale independent.
std::string format_double(double v);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Each table as a header row plus data rows, then the coefficient table if
/// any, then the records; blocks are separated by one empty line.
void write_csv(std::ostream& os, const Report& r);

}  // namespace xxff::cli
