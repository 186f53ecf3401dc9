#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secnoma/baselines.hpp"

namespace secnoma {

enum class Scenario { p1_energy, p2_outage };
enum class SweptParam { task_bits, eve_distance, outage_eps, energy_budget };
enum class Scheme { proposed, full_offload, oma, no_eve };

const char* to_string(Scenario s);
const char* to_string(SweptParam p);
const char* to_string(Scheme s);

/// Environment variable that replaces a sweep's master seed.
inline constexpr const char* kSeedEnvVar = "SECNOMA_SEED";

struct SweepConfig {
  Scenario scenario = Scenario::p1_energy;
  SweptParam swept_param = SweptParam::task_bits;
  std::vector<double> grid;
  std::size_t n_realizations = 1000;
  std::uint64_t master_seed = 1;
  std::vector<Scheme> schemes{Scheme::proposed, Scheme::full_offload, Scheme::oma,
                              Scheme::no_eve};
  SystemParams base = default_params();
};

/// Flat `key = value` text; `#` starts a comment. Sweep keys: scenario,
/// swept_param, grid (comma list), n_realizations, master_seed, schemes
/// (comma list). Parameter keys: bandwidth, block_time, pathloss_exp,
/// noise_ap_dbm, noise_eve_dbm, outage_eps, and the per-user keys task_bits,
/// max_local_bits, cycles_per_bit, capacitance_coeff, energy_weight,
/// energy_budget, circuit_power, distance_ap, distance_eve, which set both
/// users unless prefixed with `m.` or `n.`. Throws ConfigError.
SweepConfig parse_sweep_config(std::istream& in);
/// Applies one `key = value` entry; throws ConfigError on unknown keys.
void apply_config_entry(SweepConfig& config, const std::string& key, const std::string& value);
SweepConfig load_sweep_config(const std::string& path);

/// Throws ConfigError on an empty or unsorted grid, no realizations, no
/// schemes, a scheme the scenario does not define, or invalid parameters at
/// any grid value.
void validate(const SweepConfig& config);

/// Parameters at one grid value. A task_bits sweep also sets the local cap
/// to 0.8 of the task.
SystemParams params_at(const SweepConfig& config, double value);

/// Seed from kSeedEnvVar, if set. Throws ConfigError when it is not an
/// unsigned 64-bit integer.
std::optional<std::uint64_t> seed_from_env();

/// Metrics of one scheme on one realization. Energy scenario: per-user
/// energies and the weighted objective. Outage scenario: per-user outage
/// probabilities and their sum.
struct Outcome {
  bool feasible = false;
  double metric_m = 0.0;
  double metric_n = 0.0;
  double metric_sum = 0.0;
};

Outcome evaluate_scheme(Scenario scenario, Scheme scheme, const ChannelRealization& ch,
                        const SystemParams& params);

struct SweepRow {
  double param = 0.0;
  Scheme scheme = Scheme::proposed;
  double metric_m = 0.0;  ///< NaN when no realization is feasible
  double metric_n = 0.0;
  double metric_sum = 0.0;
  double infeasible_frac = 0.0;
  std::size_t n_effective = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  ///< grid-major, schemes in config order
  std::vector<double> grid;
  std::vector<Scheme> schemes;
  std::size_t n_realizations = 0;
  std::vector<Outcome> outcomes;  ///< per (grid value, scheme, realization)

  const Outcome& outcome(std::size_t g, std::size_t s, std::size_t i) const {
    return outcomes[(g * schemes.size() + s) * n_realizations + i];
  }
};

/// Realization i draws its channel from derive_seed(master_seed, i), so every
/// scheme and grid value sees the same fading. Averages skip infeasible
/// realizations and are accumulated in index order for any thread count.
SweepResult run_sweep(const SweepConfig& config, unsigned threads = 1);

void write_csv(const SweepResult& result, std::ostream& out);
/// Throws IoError when the file cannot be written.
void emit_csv(const SweepResult& result, const std::string& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace secnoma
