#pragma once

#include "report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace xxff::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Everything a run depends on. Unset sizes take per-command defaults.
struct RunConfig {
  std::string command;
  std::string level = "quick";
  std::string format = "csv";
  std::optional<std::string> out;
  std::optional<int> L;
  std::optional<int> m_max;
  std::optional<int> x_max;
  std::optional<int> order;
  std::optional<int> cutoff;
  bool golden = false;
  /// The invocation as typed, echoed into the report.
  std::string echo;
};

Report cmd_constants();
Report cmd_prefactors(int m_max);
Report cmd_formfactor(int L, int m_max, bool golden);
Report cmd_series(int order);
Report cmd_exact(int x_max, int order);
Report cmd_sum_identity(int cutoff);
Report cmd_compare(int x_max, int m_max, int order);
Report cmd_verify(const std::string& level);

/// Validates the configuration, runs the command and stamps command echo and
/// version. Throws UsageError on invalid sizes.
Report run(const RunConfig& config);

}  // namespace xxff::cli
