#ifndef BICYL_REPORT_HPP
#define BICYL_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bicyl/quadrature.hpp"
#include "bicyl/qmc.hpp"

namespace bicyl {

/// One intersection depth with exact, approximate and (optionally) QMC values.
struct SweepRow {
  double delta = 0.0;
  double v_exact = 0.0;
  double a_exact = 0.0;
  double v_approx = 0.0;
  double a_approx = 0.0;
  std::optional<double> v_err_pct;  // absent when v_exact == 0
  std::optional<double> a_err_pct;
  std::optional<double> v_qmc;
  std::optional<double> a_qmc;
};

SweepRow make_row(double delta, const QuadratureSpec& quad = {},
                  const std::optional<QmcSpec>& qmc = std::nullopt);

/// `steps` depths evenly spaced over [from, to], endpoints included.
/// Requires 0 <= from < to <= 1 and steps >= 2.
std::vector<double> sweep_deltas(double from, double to, int steps);

std::vector<SweepRow> sweep(double from, double to, int steps, const QuadratureSpec& quad = {},
                            const std::optional<QmcSpec>& qmc = std::nullopt);

/// printf("%.6g")
std::string format_sig6(double x);

/// Header plus one LF-terminated line per row. QMC columns are written when
/// any row carries QMC values.
std::string to_csv(const std::vector<SweepRow>& rows);
/// JSON array of row objects with the CSV field names; values rounded to six
/// significant digits, missing relative errors as null.
std::string to_json(const std::vector<SweepRow>& rows);

/// Reference grid: depths with three-decimal V', A' and the relative errors
/// (percent) of the closed-form approximations.
struct ReferenceRow {
  double delta;
  double v_prime;
  double v_err_pct;
  double a_prime;
  double a_err_pct;
};

extern const std::array<ReferenceRow, 9> kReferenceTable;

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct ValidationOptions {
  int log2_samples = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Multiplies every tolerance. Only tests set this to something other than 1.
  double tolerance_scale = 1.0;
};

std::vector<CheckResult> run_validation(const ValidationOptions& opts = {});

}  // namespace bicyl

#endif  // BICYL_REPORT_HPP
