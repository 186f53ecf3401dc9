#include "secnoma/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "secnoma/experiments.hpp"
#include "secnoma/oracle.hpp"

namespace secnoma {

namespace {

constexpr int kUsageError = 2;

struct InstanceOptions {
  std::vector<std::string> sets;
  double gamma_m = 0.0;
  double gamma_n = 0.0;
  std::uint64_t seed = 1;
};

void add_instance_options(CLI::App* cmd, InstanceOptions& o) {
  cmd->add_option("--set", o.sets, "Parameter override key=value (config-file keys)");
  cmd->add_option("--gamma-m", o.gamma_m, "Normalized AP gain of user m, 1/W");
  cmd->add_option("--gamma-n", o.gamma_n, "Normalized AP gain of user n, 1/W");
  cmd->add_option("--seed", o.seed, "Seed for a drawn channel when gains are not given");
}

struct Instance {
  SystemParams params;
  ChannelRealization ch;
};

Instance build_instance(const InstanceOptions& o) {
  SweepConfig c;
  for (const std::string& s : o.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    apply_config_entry(c, s.substr(0, eq), s.substr(eq + 1));
  }
  validate(c.base);
  Instance in{c.base, {}};
  if (o.gamma_m > 0.0 || o.gamma_n > 0.0) {
    if (!(o.gamma_m > 0.0 && o.gamma_n > 0.0))
      throw ConfigError("--gamma-m and --gamma-n must both be positive");
    if (o.gamma_m > o.gamma_n) throw ConfigError("--gamma-m must not exceed --gamma-n");
    in.ch = make_channel(o.gamma_m, o.gamma_n, in.params);
  } else {
    Rng rng(derive_seed(o.seed, 0));
    in.ch = sample_channels(in.params, rng);
  }
  return in;
}

void print(std::ostream& out, const char* key, double v) {
  out << key << " = " << format_double(v) << '\n';
}

void print_channel(std::ostream& out, const ChannelRealization& ch) {
  print(out, "gamma_ap_m", ch.gamma_ap_m);
  print(out, "gamma_ap_n", ch.gamma_ap_n);
}

void print_user(std::ostream& out, const char* u, const UserAllocation& a) {
  const std::string p(u);
  print(out, ("ell_" + p).c_str(), a.ell);
  print(out, ("power_" + p).c_str(), a.power);
  print(out, ("rt_" + p).c_str(), a.rates.rt);
  print(out, ("rs_" + p).c_str(), a.rates.rs);
  print(out, ("re_" + p).c_str(), a.rates.re());
}

void print_infeasible(std::ostream& out, const char* kind, UserId user, double margin,
                      const std::string& what) {
  out << "feasible = no\n"
      << "failure = " << kind << '\n'
      << "blocking_user = " << to_string(user) << '\n';
  print(out, "margin", margin);
  out << "reason = " << what << '\n';
}

int run_solve_p1(const InstanceOptions& o) {
  const Instance in = build_instance(o);
  print_channel(std::cout, in.ch);
  try {
    const Solution s = solve_p1(in.ch, in.params);
    std::cout << "feasible = yes\n";
    print_user(std::cout, "m", s.alloc.m);
    print_user(std::cout, "n", s.alloc.n);
    print(std::cout, "energy_m", s.energy_m);
    print(std::cout, "energy_n", s.energy_n);
    print(std::cout, "weighted_energy", s.weighted_energy);
    print(std::cout, "outage_m", s.outage_m.value_or(0.0));
    print(std::cout, "outage_n", s.outage_n.value_or(0.0));
  } catch (const InfeasibleProblem& e) {
    print_infeasible(std::cout, "problem", e.user(), e.margin(), e.what());
  }
  return 0;
}

int run_solve_p2(const InstanceOptions& o) {
  const Instance in = build_instance(o);
  print_channel(std::cout, in.ch);
  try {
    const OutageSolution s = solve_p2(in.ch, in.params);
    std::cout << "feasible = yes\n";
    print_user(std::cout, "m", s.alloc.m);
    print_user(std::cout, "n", s.alloc.n);
    print(std::cout, "energy_m", s.energy_m);
    print(std::cout, "energy_n", s.energy_n);
    print(std::cout, "x_m", s.x_m);
    print(std::cout, "x_n", s.x_n);
    print(std::cout, "outage_m", s.outage_m);
    print(std::cout, "outage_n", s.outage_n);
    if (s.degenerate_m) std::cout << "degenerate_m = yes\n";
    if (s.degenerate_n) std::cout << "degenerate_n = yes\n";
  } catch (const InfeasibleProblem& e) {
    print_infeasible(std::cout, "problem", e.user(), e.margin(), e.what());
  }
  return 0;
}

int run_defaults() {
  const SystemParams p = default_params();
  const UserParams& u = p.user_m;
  std::cout << "# reference scenario; the same keys are accepted in sweep configs\n"
            << "bandwidth = " << format_double(p.bandwidth) << "  # Hz\n"
            << "block_time = " << format_double(p.block_time) << "  # s\n"
            << "pathloss_exp = " << format_double(p.pathloss_exp) << '\n'
            << "noise_ap_dbm = -70  # " << format_double(p.noise_ap) << " W\n"
            << "noise_eve_dbm = -70  # " << format_double(p.noise_eve) << " W\n"
            << "outage_eps = " << format_double(p.outage_eps) << '\n'
            << "cycles_per_bit = " << format_double(u.cycles_per_bit) << '\n'
            << "capacitance_coeff = " << format_double(u.capacitance_coeff) << '\n'
            << "task_bits = " << format_double(u.task_bits) << "  # bits\n"
            << "max_local_bits = " << format_double(u.max_local_bits) << "  # bits\n"
            << "distance_ap = " << format_double(u.distance_ap) << "  # m\n"
            << "distance_eve = " << format_double(u.distance_eve) << "  # m\n"
            << "energy_weight = " << format_double(u.energy_weight) << '\n'
            << "energy_budget = " << format_double(u.energy_budget) << "  # J\n"
            << "circuit_power = " << format_double(u.circuit_power) << "  # W\n";
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Secure NOMA-MEC resource allocation solvers and sweeps", "secnoma"};
  app.require_subcommand(1);

  InstanceOptions p1_opts, p2_opts;
  auto* p1 = app.add_subcommand("solve-p1", "Minimize weighted sum energy for one channel");
  add_instance_options(p1, p1_opts);
  auto* p2 = app.add_subcommand("solve-p2", "Minimize secrecy outage for one channel");
  add_instance_options(p2, p2_opts);

  std::string config_path, out_path;
  unsigned threads = 1;
  auto* sweep = app.add_subcommand("sweep", "Run a Monte-Carlo sweep and write CSV");
  sweep->add_option("--config", config_path, "Sweep config file")->required();
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  SuiteOptions suite;
  auto* verify = app.add_subcommand("verify", "Run the brute-force and Monte-Carlo oracles");
  verify->add_flag("--quick", suite.quick, "Smaller instance counts and grids");
  verify->add_option("--seed", suite.seed, "Oracle seed");
  verify->add_option("--threads", suite.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* defaults = app.add_subcommand("defaults", "Print the reference parameter set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*p1) return run_solve_p1(p1_opts);
    if (*p2) return run_solve_p2(p2_opts);
    if (*defaults) return run_defaults();
    if (*verify) return run_oracle_suite(suite, std::cout) ? 0 : 1;
    if (*sweep) {
      SweepConfig c = load_sweep_config(config_path);
      if (const auto seed = seed_from_env()) c.master_seed = *seed;
      emit_csv(run_sweep(c, threads), out_path);
      std::cout << "wrote " << out_path << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}

}  // namespace secnoma
