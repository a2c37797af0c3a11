#include "xxff/toeplitz/residual_report.hpp"

#include "xxff/luttinger/prefactors.hpp"
#include "xxff/numerics/fit.hpp"
#include "xxff/numerics/special_functions.hpp"
#include "xxff/toeplitz/asymptotic_series.hpp"
#include "xxff/toeplitz/cauchy_product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xxff::toeplitz {

ResidualReport series_residual_report(const std::vector<int>& x_values, int m_max, int order) {
  if (x_values.size() < 2) throw std::invalid_argument("series_residual_report: need two or more x values");
  if (std::any_of(x_values.begin(), x_values.end(), [](int x) { return x < 8; })) {
    throw std::invalid_argument("series_residual_report: x values must be >= 8");
  }
  const int x_max = *std::max_element(x_values.begin(), x_values.end());
  const auto table = exact_G_table(x_max);
  const auto expansion = exact_expansion(order);
  const double c0 = constants().c0;

  ResidualReport r{m_max, order, {}, 0.0, 0.0};
  std::vector<double> xs, residuals;
  for (int x : x_values) {
    ResidualRow row{};
    row.x = x;
    row.exact = table[static_cast<std::size_t>(x - 1)];
    row.luttinger = luttinger::luttinger_prediction_G(x, m_max, c0);
    row.series = expansion.evaluate(x);
    row.luttinger_residual = row.exact - row.luttinger;
    row.series_relative_residual = (row.series - row.exact) / row.exact;
    r.max_series_relative_residual =
        std::max(r.max_series_relative_residual, std::fabs(row.series_relative_residual));
    xs.push_back(x);
    residuals.push_back(row.luttinger_residual);
    r.rows.push_back(row);
  }
  r.fitted_exponent = -fit_log_log_slope(xs, residuals);
  return r;
}

}  // namespace xxff::toeplitz
