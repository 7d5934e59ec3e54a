#include "bicyl/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bicyl/analytic.hpp"
#include "bicyl/errors.hpp"

namespace bicyl {

const std::array<ReferenceRow, 9> kReferenceTable = {{
    {0.1, 0.015, -9.4, 0.612, -2.2},
    {0.2, 0.056, -12.8, 1.190, -3.8},
    {0.3, 0.120, -14.8, 1.732, -4.9},
    {0.4, 0.199, -15.4, 2.232, -5.3},
    {0.5, 0.290, -14.8, 2.688, -5.2},
    {0.6, 0.387, -12.9, 3.093, -4.6},
    {0.7, 0.481, -9.9, 3.440, -3.6},
    {0.8, 0.567, -6.3, 3.719, -2.3},
    {0.9, 0.635, -2.4, 3.916, -0.9},
}};

SweepRow make_row(double delta, const QuadratureSpec& quad, const std::optional<QmcSpec>& qmc) {
  SweepRow row;
  row.delta = delta;
  row.v_exact = reduced_volume(delta, quad).value;
  row.a_exact = reduced_area(delta, quad).value;
  row.v_approx = approx_volume(delta);
  row.a_approx = approx_area(delta);
  if (row.v_exact > 0.0) {
    row.v_err_pct = relative_error_pct(row.v_exact, row.v_approx);
  }
  if (row.a_exact > 0.0) {
    row.a_err_pct = relative_error_pct(row.a_exact, row.a_approx);
  }
  if (qmc) {
    const auto est = estimate_reduced(delta, 1.0, *qmc);
    row.v_qmc = est.v_prime;
    row.a_qmc = est.a_prime;
  }
  return row;
}

std::vector<double> sweep_deltas(double from, double to, int steps) {
  if (!(from >= 0.0 && to <= 1.0)) {
    throw DomainError("sweep range must lie within [0, 1]");
  }
  if (!(from < to)) {
    throw DomainError("sweep needs from < to (a single point would repeat)");
  }
  if (steps < 2) {
    throw ParameterError("sweep needs at least 2 steps");
  }
  std::vector<double> deltas(static_cast<std::size_t>(steps));
  const double span = to - from;
  for (int i = 0; i < steps; ++i) {
    deltas[static_cast<std::size_t>(i)] = from + span * i / (steps - 1);
  }
  deltas.back() = to;
  return deltas;
}

std::vector<SweepRow> sweep(double from, double to, int steps, const QuadratureSpec& quad,
                            const std::optional<QmcSpec>& qmc) {
  std::vector<SweepRow> rows;
  for (double delta : sweep_deltas(from, to, steps)) {
    rows.push_back(make_row(delta, quad, qmc));
  }
  return rows;
}

std::string format_sig6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

bool has_qmc(const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) {
    if (r.v_qmc || r.a_qmc) {
      return true;
    }
  }
  return false;
}

std::string opt_field(const std::optional<double>& x) { return x ? format_sig6(*x) : std::string(); }

nlohmann::json rounded(const std::optional<double>& x) {
  if (!x) {
    return nullptr;
  }
  return std::stod(format_sig6(*x));
}

}  // namespace

std::string to_csv(const std::vector<SweepRow>& rows) {
  const bool qmc = has_qmc(rows);
  std::string out = "delta,v_exact,a_exact,v_approx,a_approx,v_err_pct,a_err_pct";
  out += qmc ? ",v_qmc,a_qmc\n" : "\n";
  for (const auto& r : rows) {
    out += format_sig6(r.delta) + ',' + format_sig6(r.v_exact) + ',' + format_sig6(r.a_exact) +
           ',' + format_sig6(r.v_approx) + ',' + format_sig6(r.a_approx) + ',' +
           opt_field(r.v_err_pct) + ',' + opt_field(r.a_err_pct);
    if (qmc) {
      out += ',' + opt_field(r.v_qmc) + ',' + opt_field(r.a_qmc);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<SweepRow>& rows) {
  auto array = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj;
    obj["delta"] = rounded(r.delta);
    obj["v_exact"] = rounded(r.v_exact);
    obj["a_exact"] = rounded(r.a_exact);
    obj["v_approx"] = rounded(r.v_approx);
    obj["a_approx"] = rounded(r.a_approx);
    obj["v_err_pct"] = rounded(r.v_err_pct);
    obj["a_err_pct"] = rounded(r.a_err_pct);
    if (r.v_qmc) {
      obj["v_qmc"] = rounded(r.v_qmc);
    }
    if (r.a_qmc) {
      obj["a_qmc"] = rounded(r.a_qmc);
    }
    array.push_back(std::move(obj));
  }
  return array.dump(2) + '\n';
}

namespace {

CheckResult absolute_check(std::string name, double observed, double expected, double tol) {
  return {std::move(name), std::abs(observed - expected) <= tol, observed, expected, tol};
}

CheckResult relative_check(std::string name, double observed, double expected, double rel_tol) {
  const double tol = rel_tol * std::abs(expected);
  return {std::move(name), std::abs(observed - expected) <= tol, observed, expected, tol};
}

std::string depth_label(double delta) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", delta);
  return buf;
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& opts) {
  const double scale = opts.tolerance_scale;
  std::vector<CheckResult> checks;

  for (const auto& ref : kReferenceTable) {
    const auto label = depth_label(ref.delta);
    const double v = reduced_volume(ref.delta).value;
    const double a = reduced_area(ref.delta).value;
    checks.push_back(absolute_check("table V'(" + label + ")", v, ref.v_prime, 5e-4 * scale));
    checks.push_back(absolute_check("table A'(" + label + ")", a, ref.a_prime, 5e-4 * scale));
    checks.push_back(absolute_check("table V' err% (" + label + ")",
                                    relative_error_pct(v, approx_volume(ref.delta)), ref.v_err_pct,
                                    0.1 * scale));
    checks.push_back(absolute_check("table A' err% (" + label + ")",
                                    relative_error_pct(a, approx_area(ref.delta)), ref.a_err_pct,
                                    0.1 * scale));
  }

  checks.push_back(absolute_check("closed form V'(1)", reduced_volume(1.0).value, 2.0 / 3.0, 0.0));
  checks.push_back(absolute_check("closed form A'(1)", reduced_area(1.0).value, 4.0, 0.0));
  const double near_one = 1.0 - 1e-9;
  checks.push_back(absolute_check("quadrature V'(1-1e-9)", reduced_volume(near_one).value,
                                  2.0 / 3.0, 1e-6 * scale));
  checks.push_back(
      absolute_check("quadrature A'(1-1e-9)", reduced_area(near_one).value, 4.0, 1e-6 * scale));

  QmcSpec qmc;
  qmc.log2_samples = opts.log2_samples;
  qmc.scramble_seed = opts.seed;
  qmc.threads = opts.threads;
  for (double delta : {0.25, 0.5, 0.75, 1.0}) {
    const auto label = depth_label(delta);
    const auto est = estimate_reduced(delta, 1.0, qmc);
    checks.push_back(relative_check("qmc V'(" + label + ")", est.v_prime,
                                    reduced_volume(delta).value, 0.015 * scale));
    checks.push_back(relative_check("qmc A'(" + label + ")", est.a_prime,
                                    reduced_area(delta).value, 0.015 * scale));
  }
  return checks;
}

}  // namespace bicyl
