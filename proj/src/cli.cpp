#include "bicyl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bicyl/analytic.hpp"
#include "bicyl/errors.hpp"
#include "bicyl/qmc.hpp"
#include "bicyl/report.hpp"

namespace bicyl::cli {

namespace {

std::string fixed(double x, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

int resolve_threads(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 1) {
      throw UsageError("--threads must be at least 1");
    }
    return *flag;
  }
  if (const char* env = std::getenv("BICYL_THREADS"); env != nullptr && *env != '\0') {
    int n = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, n);
    if (ec != std::errc() || ptr != end || n < 1) {
      throw UsageError("BICYL_THREADS must be a positive integer");
    }
    return n;
  }
  return 1;
}

QmcSpec make_qmc(int log2, const std::optional<std::uint64_t>& seed, int threads) {
  QmcSpec spec;
  spec.log2_samples = log2;
  spec.scramble_seed = seed;
  spec.threads = threads;
  spec.validate();
  return spec;
}

struct Common {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Scramble seed (unscrambled Sobol points when omitted)");
  cmd->add_option("--threads", c.threads, "Worker threads for QMC (env BICYL_THREADS)");
}

// reduced ---------------------------------------------------------------------

struct ReducedArgs {
  double delta = 0.0;
  std::optional<int> qmc_log2;
  bool json = false;
  bool csv = false;
  Common common;
};

void print_reduced_human(const SweepRow& row, std::ostream& out) {
  auto line = [&out](const std::string& key, const std::string& value) {
    out << key << std::string(14 - std::min<std::size_t>(13, key.size()), ' ') << value << '\n';
  };
  line("delta", format_sig6(row.delta));
  line("V'", fixed(row.v_exact, 6));
  line("V'_approx", fixed(row.v_approx, 6));
  line("V'_err_pct", row.v_err_pct ? fixed(*row.v_err_pct, 2) : "n/a");
  line("A'", fixed(row.a_exact, 6));
  line("A'_approx", fixed(row.a_approx, 6));
  line("A'_err_pct", row.a_err_pct ? fixed(*row.a_err_pct, 2) : "n/a");
  if (row.v_qmc) {
    line("V'_qmc", fixed(*row.v_qmc, 6));
  }
  if (row.a_qmc) {
    line("A'_qmc", fixed(*row.a_qmc, 6));
  }
}

int cmd_reduced(const ReducedArgs& args, std::ostream& out) {
  if (args.json && args.csv) {
    throw UsageError("--json and --csv are mutually exclusive");
  }
  if (!(args.delta >= 0.0 && args.delta <= 1.0)) {
    throw UsageError("delta must lie in [0, 1]");
  }
  std::optional<QmcSpec> qmc;
  if (args.qmc_log2) {
    qmc = make_qmc(*args.qmc_log2, args.common.seed, resolve_threads(args.common.threads));
  }
  const auto row = make_row(args.delta, {}, qmc);
  if (args.json) {
    out << to_json({row});
  } else if (args.csv) {
    out << to_csv({row});
  } else {
    print_reduced_human(row, out);
  }
  return kSuccess;
}

// sweep -----------------------------------------------------------------------

struct SweepArgs {
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
  std::optional<int> qmc_log2;
  bool json = false;
  Common common;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  std::vector<double> deltas;
  try {
    deltas = sweep_deltas(args.from, args.to, args.steps);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::optional<QmcSpec> qmc;
  if (args.qmc_log2) {
    qmc = make_qmc(*args.qmc_log2, args.common.seed, resolve_threads(args.common.threads));
  }
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) {
    rows.push_back(make_row(delta, {}, qmc));
  }
  out << (args.json ? to_json(rows) : to_csv(rows));
  return kSuccess;
}

// estimate --------------------------------------------------------------------

struct EstimateArgs {
  std::string c1;
  std::string c2;
  std::string file;
  int log2 = 20;
  std::string containment = "capsule";
  bool json = false;
  Common common;
};

nlohmann::json estimate_pair(const Cylinderd& c1, const Cylinderd& c2, const QmcSpec& spec) {
  const auto vol = estimate_intersection_volume(c1, c2, spec);
  const auto area = estimate_intersection_area(c1, c2, spec);
  return {
      {"volume", vol.value},
      {"area", area.value},
      {"samples", vol.n_used},
      {"volume_hit_fraction", vol.hit_fraction},
      {"area_hit_fraction_1", area.hit_fraction_1},
      {"area_hit_fraction_2", area.hit_fraction_2},
  };
}

void print_estimate_human(const nlohmann::json& r, std::ostream& out) {
  out << "samples       " << r["samples"].get<std::uint64_t>() << " per set\n";
  out << "V_est         " << format_sig6(r["volume"].get<double>()) << "  (hit fraction "
      << format_sig6(r["volume_hit_fraction"].get<double>()) << ")\n";
  out << "A_est         " << format_sig6(r["area"].get<double>()) << "  (hit fractions "
      << format_sig6(r["area_hit_fraction_1"].get<double>()) << ", "
      << format_sig6(r["area_hit_fraction_2"].get<double>()) << ")\n";
}

Cylinderd cylinder_from_json(const nlohmann::json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 7) {
    throw UsageError(where + ": expected an array of 7 numbers");
  }
  std::string text;
  for (std::size_t i = 0; i < 7; ++i) {
    if (!value[i].is_number()) {
      throw UsageError(where + ": element " + std::to_string(i) + " is not a number");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value[i].get<double>());
    text += (i ? "," : "") + std::string(buf);
  }
  return parse_cylinder(text, where);
}

int cmd_estimate(const EstimateArgs& args, std::ostream& out) {
  QmcSpec spec;
  try {
    spec = make_qmc(args.log2, args.common.seed, resolve_threads(args.common.threads));
    spec.containment = parse_containment(args.containment);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }

  if (!args.file.empty()) {
    if (!args.c1.empty() || !args.c2.empty()) {
      throw UsageError("--file cannot be combined with --c1/--c2");
    }
    std::ifstream in(args.file);
    if (!in) {
      throw UsageError("cannot open --file " + args.file);
    }
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("--file: malformed JSON: " + std::string(e.what()));
    }
    if (!doc.is_array()) {
      throw UsageError("--file: expected a JSON array of {\"c1\": [...], \"c2\": [...]} objects");
    }
    auto results = nlohmann::json::array();
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto where = "--file[" + std::to_string(i) + "]";
      if (!doc[i].is_object() || !doc[i].contains("c1") || !doc[i].contains("c2")) {
        throw UsageError(where + ": expected an object with c1 and c2");
      }
      const auto c1 = cylinder_from_json(doc[i]["c1"], where + ".c1");
      const auto c2 = cylinder_from_json(doc[i]["c2"], where + ".c2");
      results.push_back(estimate_pair(c1, c2, spec));
    }
    if (args.json) {
      out << results.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < results.size(); ++i) {
        out << "# pair " << i << '\n';
        print_estimate_human(results[i], out);
      }
    }
    return kSuccess;
  }

  if (args.c1.empty() || args.c2.empty()) {
    throw UsageError("estimate needs --c1 and --c2 (or --file)");
  }
  const auto c1 = parse_cylinder(args.c1, "--c1");
  const auto c2 = parse_cylinder(args.c2, "--c2");
  const auto result = estimate_pair(c1, c2, spec);
  if (args.json) {
    out << result.dump(2) << '\n';
  } else {
    print_estimate_human(result, out);
  }
  return kSuccess;
}

// validate --------------------------------------------------------------------

struct ValidateArgs {
  int log2 = 20;
  std::uint64_t seed = 1;
  std::optional<int> threads;
  double tolerance_scale = 1.0;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  ValidationOptions opts;
  opts.log2_samples = args.log2;
  opts.seed = args.seed;
  opts.threads = resolve_threads(args.threads);
  opts.tolerance_scale = args.tolerance_scale;
  try {
    make_qmc(opts.log2_samples, opts.seed, opts.threads);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  const auto checks = run_validation(opts);
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    std::string name = c.name;
    name.resize(std::max<std::size_t>(name.size(), 26), ' ');
    out << (c.passed ? "PASS  " : "FAIL  ") << name << " observed " << fixed(c.observed, 3)
        << "  expected " << fixed(c.expected, 3) << "  |diff| "
        << sci(std::abs(c.observed - c.expected)) << "  tol " << sci(c.tolerance) << '\n';
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kSuccess : kValidationFailed;
}

}  // namespace

Cylinderd parse_cylinder(const std::string& text, const std::string& option) {
  static constexpr std::array<const char*, 7> kFields = {"ax", "ay", "az", "bx", "by", "bz", "r"};
  std::array<double, 7> v{};
  std::size_t field = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (true) {
    if (field == v.size()) {
      throw UsageError(option + ": expected 7 comma-separated values ax,ay,az,bx,by,bz,r");
    }
    const char* stop = std::find(p, end, ',');
    const auto [ptr, ec] = std::from_chars(p, stop, v[field]);
    if (ec != std::errc() || ptr != stop || !std::isfinite(v[field])) {
      throw UsageError(option + ": field " + kFields[field] + " is not a finite number");
    }
    ++field;
    if (stop == end) {
      break;
    }
    p = stop + 1;
  }
  if (field != v.size()) {
    throw UsageError(option + ": expected 7 comma-separated values ax,ay,az,bx,by,bz,r, got " +
                     std::to_string(field));
  }
  if (!(v[6] > 0.0)) {
    throw UsageError(option + ": field r must be positive");
  }
  const Vec3d a(v[0], v[1], v[2]);
  const Vec3d b(v[3], v[4], v[5]);
  if (a == b) {
    throw UsageError(option + ": fields a and b coincide (degenerate axis)");
  }
  return Cylinderd(a, b, v[6]);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection volume and surface area of two finite cylinders"};
  app.name("bicyl");
  app.require_subcommand(1);

  ReducedArgs reduced;
  auto* reduced_cmd = app.add_subcommand("reduced", "Exact, approximate and QMC values at one depth");
  reduced_cmd->add_option("delta", reduced.delta, "Intersection depth H/D in [0, 1]")->required();
  reduced_cmd->add_option("--qmc", reduced.qmc_log2, "Also run QMC with 2^m samples");
  reduced_cmd->add_flag("--json", reduced.json, "JSON output");
  reduced_cmd->add_flag("--csv", reduced.csv, "CSV output");
  add_common(reduced_cmd, reduced.common);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV table of V', A' over evenly spaced depths");
  sweep_cmd->add_option("--from", sweep_args.from, "First depth")->required();
  sweep_cmd->add_option("--to", sweep_args.to, "Last depth")->required();
  sweep_cmd->add_option("--steps", sweep_args.steps, "Number of depths (>= 2)")->required();
  sweep_cmd->add_option("--qmc", sweep_args.qmc_log2, "Add QMC columns with 2^m samples");
  sweep_cmd->add_flag("--json", sweep_args.json, "JSON instead of CSV");
  add_common(sweep_cmd, sweep_args.common);

  EstimateArgs estimate;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "QMC volume and area estimates for two arbitrary cylinders");
  estimate_cmd->add_option("--c1", estimate.c1, "First cylinder ax,ay,az,bx,by,bz,r");
  estimate_cmd->add_option("--c2", estimate.c2, "Second cylinder ax,ay,az,bx,by,bz,r");
  estimate_cmd->add_option("--file", estimate.file,
                           "JSON array of {\"c1\": [7 numbers], \"c2\": [7 numbers]}");
  estimate_cmd->add_option("--log2", estimate.log2, "log2 of the sample count")
      ->capture_default_str();
  estimate_cmd->add_option("--containment", estimate.containment, "capsule | strict")
      ->capture_default_str();
  estimate_cmd->add_flag("--json", estimate.json, "JSON output");
  add_common(estimate_cmd, estimate.common);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Self-check against reference values");
  validate_cmd->add_option("--log2", validate.log2, "log2 of the QMC sample count")
      ->capture_default_str();
  validate_cmd->add_option("--seed", validate.seed, "Scramble seed")->capture_default_str();
  validate_cmd->add_option("--threads", validate.threads, "Worker threads for QMC");
  validate_cmd->add_option("--tolerance-scale", validate.tolerance_scale)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*reduced_cmd) {
      return cmd_reduced(reduced, out);
    }
    if (*sweep_cmd) {
      return cmd_sweep(sweep_args, out);
    }
    if (*estimate_cmd) {
      return cmd_estimate(estimate, out);
    }
    return cmd_validate(validate, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const AccuracyError& e) {
    err << "numerical failure: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    return kNumericalFailure;
  } catch (const IntegrandDomainError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace bicyl::cli
