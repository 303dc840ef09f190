// biqo: quantumness measures for a pair of nonorthogonal pure states.
//
// Subcommands: quantify, curve, verify, maximize, simulate. Exit codes:
// 0 success / verification PASS, 1 verification FAIL, 2 usage error,
// 3 I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "biqo/capacity.hpp"
#include "biqo/cloning.hpp"
#include "biqo/ensemble.hpp"
#include "biqo/optimize.hpp"
#include "biqo/report.hpp"
#include "biqo/tradeoff.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Overlap argument shared by the subcommands that take one; --theta-degrees
// is a convenience spelling converted to x = cos(theta) before dispatch.
struct OverlapArg {
  double overlap = -1.0;
  double theta_degrees = -1.0;
  CLI::Option *overlap_opt = nullptr;
  CLI::Option *theta_opt = nullptr;

  void attach(CLI::App *cmd, bool required = true) {
    overlap_opt = cmd->add_option("--overlap", overlap,
                                  "Overlap <psi0|psi1> in [0, 1]");
    theta_opt = cmd->add_option("--theta-degrees", theta_degrees,
                                "Angle between the states in degrees");
    overlap_opt->excludes(theta_opt);
    theta_opt->excludes(overlap_opt);
    if (required) {
      cmd->callback([this, cmd] {
        if (!*overlap_opt && !*theta_opt)
          throw CLI::RequiredError(cmd->get_name() +
                                   " requires --overlap or --theta-degrees");
      });
    }
  }

  double value() const {
    if (theta_opt != nullptr && *theta_opt)
      return std::cos(theta_degrees * kPi / 180.0);
    return overlap;
  }

  bool given() const {
    return (overlap_opt != nullptr && *overlap_opt) ||
           (theta_opt != nullptr && *theta_opt);
  }
};

std::uint64_t default_seed() {
  const char *env = std::getenv("BIQO_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw CLI::ValidationError("BIQO_SEED", "must be a nonnegative integer");
  return v;
}

// ------------------------------------------------------------------ quantify

int run_quantify(double x, const std::string &format) {
  const biqo::MeasureReport r = biqo::make_measure_report(x);
  if (format == "json") {
    json j;
    j["x"] = r.x;
    j["p_e"] = r.p_e;
    j["c1"] = r.c1;
    j["c_inf"] = r.c_inf;
    j["q"] = r.q;
    j["d_at_mi"] = r.d_at_mi;
    j["f_g"] = r.f_g;
    j["f_l"] = r.f_l;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "x        " << fixed6(r.x) << "\n"
              << "p_e      " << fixed6(r.p_e) << "\n"
              << "c1       " << fixed6(r.c1) << "\n"
              << "c_inf    " << fixed6(r.c_inf) << "\n"
              << "q        " << fixed6(r.q) << "\n"
              << "d_at_mi  " << fixed6(r.d_at_mi) << "\n"
              << "f_g      " << fixed6(r.f_g) << "\n"
              << "f_l      " << fixed6(r.f_l) << "\n";
  }
  return kExitPass;
}

// --------------------------------------------------------------------- curve

double measure_value(const std::string &measure, double x) {
  if (measure == "pe") return biqo::helstrom_error(biqo::make_ensemble(x));
  if (measure == "c1") return biqo::c1_closed(x);
  if (measure == "cinf") return biqo::c_inf_closed(x);
  if (measure == "q") return biqo::quantumness_q(x);
  if (measure == "dmi") return biqo::d_at_max_info(x);
  if (measure == "fg") return biqo::global_fidelity_closed(x);
  return biqo::local_fidelity_closed(x); // fl
}

int run_curve(const std::string &measure, std::size_t steps, double overlap,
              bool overlap_given, const std::string &out_path,
              const std::string &format) {
  std::vector<std::pair<double, double>> rows;
  std::string abscissa = "x", ordinate = measure;

  if (measure == "tradeoff") {
    if (!overlap_given)
      throw CLI::RequiredError("curve --measure tradeoff requires --overlap");
    abscissa = "p";
    ordinate = "d";
    const double pe = biqo::helstrom_error(biqo::make_ensemble(overlap));
    for (std::size_t j = 0; j <= steps; ++j) {
      const double p =
          pe + (0.5 - pe) * static_cast<double>(j) / static_cast<double>(steps);
      rows.emplace_back(p, biqo::disturbance_curve(overlap, p));
    }
  } else {
    for (std::size_t j = 0; j <= steps; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(steps);
      rows.emplace_back(x, measure_value(measure, x));
    }
  }

  std::string body;
  if (format == "json") {
    json arr = json::array();
    for (const auto &[a, b] : rows) {
      json row;
      row[abscissa] = a;
      row[ordinate] = b;
      arr.push_back(row);
    }
    body = arr.dump();
    body += "\n";
  } else {
    body = abscissa + "," + ordinate + "\n";
    for (const auto &[a, b] : rows) body += sig12(a) + "," + sig12(b) + "\n";
  }

  if (out_path.empty()) {
    std::cout << body;
    return kExitPass;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.is_open()) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  out << body;
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitPass;
}

// -------------------------------------------------------------------- verify

int run_verify(const std::string &target, double x, std::size_t angle_steps,
               std::size_t prior_steps, std::size_t restarts,
               std::size_t probe_dim, bool at_max_info, double p_eve,
               bool p_eve_given, std::uint64_t seed,
               const std::string &format) {
  double closed = 0.0, oracle = 0.0, tolerance = 0.0;
  json extra;

  if (target == "c1") {
    closed = biqo::c1_closed(x);
    oracle = biqo::accessible_info_oracle(x, angle_steps, prior_steps);
    tolerance = 1e-4;
  } else if (target == "cinf") {
    closed = biqo::c_inf_closed(x);
    const auto r = biqo::holevo_prior_oracle(x, prior_steps);
    oracle = r.bits;
    tolerance = 1e-6;
    extra["argmax_prior"] = r.argmax_prior;
  } else if (target == "tradeoff") {
    biqo::EavesdropConfig cfg;
    cfg.x = x;
    cfg.p_eve = (at_max_info || !p_eve_given)
                    ? biqo::helstrom_error(biqo::make_ensemble(x))
                    : p_eve;
    cfg.probe_dim = probe_dim;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const biqo::EavesdropResult r = biqo::probe_oracle(cfg);
    closed = biqo::disturbance_curve(x, cfg.p_eve);
    oracle = r.d;
    tolerance = 2e-3;
    extra["p_eve"] = cfg.p_eve;
    extra["p_achieved"] = r.p_achieved;
    extra["converged"] = r.converged;
  } else { // clone-global | clone-local
    const bool global = target == "clone-global";
    const biqo::CloneCandidate c = biqo::cloning_oracle(
        x, global ? biqo::CloneObjective::Global : biqo::CloneObjective::Local,
        restarts, seed);
    closed = global ? biqo::global_fidelity_closed(x)
                    : biqo::local_fidelity_closed(x);
    oracle = global ? c.f_global : c.f_local;
    tolerance = 2e-3;
    extra["feasible"] = c.feasible;
    extra["marginal_residual"] = c.marginal_residual;
    extra["overlap_residual"] = c.overlap_residual;
  }

  const double deviation = std::abs(oracle - closed);
  const bool pass = deviation <= tolerance;

  if (format == "json") {
    json j;
    j["target"] = target;
    j["x"] = x;
    j["closed_form"] = closed;
    j["oracle"] = oracle;
    j["deviation"] = deviation;
    j["tolerance"] = tolerance;
    j["result"] = pass ? "PASS" : "FAIL";
    for (auto &[key, value] : extra.items()) j[key] = value;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "target       " << target << "\n"
              << "x            " << fixed6(x) << "\n"
              << "closed_form  " << fixed6(closed) << "\n"
              << "oracle       " << fixed6(oracle) << "\n"
              << "deviation    " << sig12(deviation) << "\n"
              << "tolerance    " << sig12(tolerance) << "\n";
    for (auto &[key, value] : extra.items()) {
      std::string pad(key.size() < 13 ? 13 - key.size() : 1, ' ');
      std::cout << key << pad
                << (value.is_number() ? sig12(value.get<double>())
                                      : value.dump())
                << "\n";
    }
    std::cout << "result       " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------------------ maximize

int run_maximize(const std::string &measure, double tol,
                 const std::string &format) {
  std::function<double(double)> f;
  double reference = 0.0;
  if (measure == "q") {
    f = biqo::quantumness_q;
    reference = 1.0 / std::sqrt(2.0);
  } else if (measure == "dmi") {
    f = biqo::d_at_max_info;
    reference = 1.0 / std::sqrt(2.0);
  } else if (measure == "fg-deficit") {
    f = [](double x) { return 1.0 - biqo::global_fidelity_closed(x); };
    reference = 1.0 / std::sqrt(3.0);
  } else { // fl-deficit
    f = [](double x) { return 1.0 - biqo::local_fidelity_closed(x); };
    reference = 0.5;
  }

  const biqo::ScalarSearchResult r =
      biqo::golden_section_max(f, 0.01, 0.99, tol);
  const double offset = std::abs(r.argmax - reference);

  if (format == "json") {
    json j;
    j["measure"] = measure;
    j["argmax"] = r.argmax;
    j["value"] = r.value;
    j["reference"] = reference;
    j["offset_from_reference"] = offset;
    j["iterations"] = r.iterations;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "measure                " << measure << "\n"
              << "argmax                 " << fixed6(r.argmax) << "\n"
              << "value                  " << fixed6(r.value) << "\n"
              << "reference              " << fixed6(reference) << "\n"
              << "offset_from_reference  " << sig12(offset) << "\n";
  }
  return kExitPass;
}

// ------------------------------------------------------------------ simulate

int run_simulate(double x, std::size_t rounds, std::uint64_t seed,
                 const std::string &eve_mode, std::size_t restarts,
                 std::size_t probe_dim, const std::string &format) {
  std::optional<biqo::EavesdropResult> eve;
  if (eve_mode == "on") {
    biqo::EavesdropConfig cfg;
    cfg.x = x;
    cfg.p_eve = biqo::helstrom_error(biqo::make_ensemble(x)); // max info
    cfg.probe_dim = probe_dim;
    cfg.restarts = restarts;
    cfg.seed = seed;
    eve = biqo::probe_oracle(cfg);
  }

  const biqo::B92Stats st =
      biqo::simulate_b92(x, rounds, eve ? &*eve : nullptr, seed);

  if (format == "json") {
    json j;
    j["x"] = x;
    j["rounds"] = st.rounds;
    j["seed"] = st.seed;
    j["eve"] = st.eve_present;
    j["bob_failures"] = st.bob_failures;
    j["disturbance_emp"] = st.disturbance_rate;
    j["disturbance_expected"] = st.expected_disturbance;
    j["disturbance_stderr"] = st.disturbance_stderr;
    if (st.eve_error_rate) {
      j["eve_errors"] = *st.eve_errors;
      j["eve_error_emp"] = *st.eve_error_rate;
      j["eve_error_expected"] = *st.expected_eve_error;
      j["eve_error_stderr"] = *st.eve_error_stderr;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "x                     " << fixed6(x) << "\n"
              << "rounds                " << st.rounds << "\n"
              << "seed                  " << st.seed << "\n"
              << "eve                   " << (st.eve_present ? "on" : "off")
              << "\n"
              << "disturbance_emp       " << fixed6(st.disturbance_rate) << "\n"
              << "disturbance_expected  " << fixed6(st.expected_disturbance)
              << "\n"
              << "disturbance_stderr    " << fixed6(st.disturbance_stderr)
              << "\n";
    if (st.eve_error_rate) {
      std::cout << "eve_error_emp         " << fixed6(*st.eve_error_rate)
                << "\n"
                << "eve_error_expected    " << fixed6(*st.expected_eve_error)
                << "\n"
                << "eve_error_stderr      " << fixed6(*st.eve_error_stderr)
                << "\n";
    }
  }
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantumness measures of a pair of nonorthogonal pure states"};
  app.require_subcommand(1);

  // quantify
  auto *quantify =
      app.add_subcommand("quantify", "All closed-form measures at one overlap");
  OverlapArg q_x;
  q_x.attach(quantify);
  std::string q_format = "text";
  quantify->add_option("--format", q_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // curve
  auto *curve = app.add_subcommand("curve", "Tabulate a measure over a grid");
  std::string c_measure;
  curve->add_option("--measure", c_measure, "Measure to tabulate")
      ->required()
      ->check(CLI::IsMember(
          {"pe", "c1", "cinf", "q", "dmi", "fg", "fl", "tradeoff"}));
  std::size_t c_steps = 100;
  curve->add_option("--steps", c_steps, "Grid intervals (rows = steps + 1)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  OverlapArg c_x;
  c_x.attach(curve, /*required=*/false); // only the tradeoff sweep needs it
  std::string c_out;
  curve->add_option("--out", c_out, "Output path (default: stdout)");
  std::string c_format = "csv";
  curve->add_option("--format", c_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto *verify = app.add_subcommand(
      "verify", "Run a brute-force oracle against its closed form");
  std::string v_target;
  verify->add_option("--target", v_target, "What to verify")
      ->required()
      ->check(CLI::IsMember(
          {"c1", "cinf", "tradeoff", "clone-global", "clone-local"}));
  OverlapArg v_x;
  v_x.attach(verify);
  std::size_t v_angle_steps = 360, v_prior_steps = 200, v_restarts = 20,
              v_probe_dim = 4;
  verify->add_option("--angle-steps", v_angle_steps,
                     "Measurement-angle grid size (c1)");
  verify->add_option("--prior-steps", v_prior_steps,
                     "Prior grid size (c1, cinf)");
  verify->add_option("--restarts", v_restarts,
                     "Search restarts (tradeoff, clone-*)");
  verify->add_option("--probe-dim", v_probe_dim, "Probe dimension (tradeoff)");
  bool v_at_max_info = false;
  verify->add_flag("--at-max-info", v_at_max_info,
                   "Pin Eve's error to helstrom_error(x) (tradeoff)");
  double v_p_eve = 0.0;
  CLI::Option *v_p_eve_opt = verify->add_option(
      "--p-eve", v_p_eve, "Eve's target error probability (tradeoff)");
  std::uint64_t v_seed = 0;
  CLI::Option *v_seed_opt =
      verify->add_option("--seed", v_seed, "Search seed (default: BIQO_SEED)");
  std::string v_format = "text";
  verify->add_option("--format", v_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // maximize
  auto *maximize = app.add_subcommand(
      "maximize", "Golden-section search for a most-quantum overlap");
  std::string m_measure;
  maximize->add_option("--measure", m_measure, "Measure to maximize")
      ->required()
      ->check(CLI::IsMember({"q", "dmi", "fg-deficit", "fl-deficit"}));
  double m_tol = 1e-6;
  maximize->add_option("--tol", m_tol, "Bracket tolerance")
      ->check(CLI::PositiveNumber);
  std::string m_format = "text";
  maximize->add_option("--format", m_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // simulate
  auto *simulate = app.add_subcommand(
      "simulate", "Monte Carlo rounds of the two-state key protocol");
  OverlapArg s_x;
  s_x.attach(simulate);
  std::size_t s_rounds = 100000;
  simulate->add_option("--rounds", s_rounds, "Number of rounds")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4000000000}));
  std::string s_eve = "off";
  simulate->add_option("--eve", s_eve, "Attach the max-info probe: on or off")
      ->check(CLI::IsMember({"on", "off"}));
  std::uint64_t s_seed = 0;
  CLI::Option *s_seed_opt = simulate->add_option(
      "--seed", s_seed, "Round seed (default: BIQO_SEED, else 0)");
  std::size_t s_restarts = 20, s_probe_dim = 4;
  simulate->add_option("--restarts", s_restarts, "Probe search restarts");
  simulate->add_option("--probe-dim", s_probe_dim, "Probe dimension");
  std::string s_format = "text";
  simulate->add_option("--format", s_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);

    if (quantify->parsed()) return run_quantify(q_x.value(), q_format);
    if (curve->parsed())
      return run_curve(c_measure, c_steps, c_x.given() ? c_x.value() : -1.0,
                       c_x.given(), c_out, c_format);
    if (verify->parsed())
      return run_verify(v_target, v_x.value(), v_angle_steps, v_prior_steps,
                        v_restarts, v_probe_dim, v_at_max_info, v_p_eve,
                        static_cast<bool>(*v_p_eve_opt),
                        *v_seed_opt ? v_seed : default_seed(), v_format);
    if (maximize->parsed()) return run_maximize(m_measure, m_tol, m_format);
    if (simulate->parsed())
      return run_simulate(s_x.value(), s_rounds,
                          *s_seed_opt ? s_seed : default_seed(), s_eve,
                          s_restarts, s_probe_dim, s_format);
    return kExitUsage;
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const biqo::DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
