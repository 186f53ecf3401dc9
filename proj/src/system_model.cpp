#include "secnoma/system_model.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace secnoma {

SystemParams default_params() { return SystemParams{}; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid parameter: " + what);
}

void validate_user(const UserParams& u, const char* label) {
  const std::string p = std::string("user ") + label + ": ";
  require(u.task_bits > 0, p + "task_bits must be positive");
  require(u.max_local_bits >= 0 && u.max_local_bits < u.task_bits,
          p + "max_local_bits must lie in [0, task_bits)");
  require(u.cycles_per_bit > 0, p + "cycles_per_bit must be positive");
  require(u.capacitance_coeff > 0, p + "capacitance_coeff must be positive");
  require(u.energy_weight > 0, p + "energy_weight must be positive");
  require(u.energy_budget > 0, p + "energy_budget must be positive");
  require(u.circuit_power >= 0, p + "circuit_power must be nonnegative");
  require(u.distance_ap > 0, p + "distance_ap must be positive");
  require(u.distance_eve > 0, p + "distance_eve must be positive");
}

}  // namespace

void validate(const SystemParams& params) {
  require(params.bandwidth > 0, "bandwidth must be positive");
  require(params.block_time > 0, "block_time must be positive");
  require(params.pathloss_exp > 0, "pathloss_exp must be positive");
  require(params.noise_ap > 0, "noise_ap must be positive");
  require(params.noise_eve > 0, "noise_eve must be positive");
  require(params.outage_eps > 0 && params.outage_eps < 1, "outage_eps must lie in (0, 1)");
  validate_user(params.user_m, "m");
  validate_user(params.user_n, "n");
}

double dbm_to_watts(double level_dbm) { return std::pow(10.0, (level_dbm - 30.0) / 10.0); }

ChannelRealization make_channel(double gamma_ap_m, double gamma_ap_n,
                                const SystemParams& params) {
  ChannelRealization ch;
  ch.gamma_ap_m = gamma_ap_m;
  ch.gamma_ap_n = gamma_ap_n;
  ch.mean_eve_gain_m = std::pow(params.user_m.distance_eve, -params.pathloss_exp);
  ch.mean_eve_gain_n = std::pow(params.user_n.distance_eve, -params.pathloss_exp);
  return ch;
}

ChannelRealization sample_channels(const SystemParams& params, Rng& rng) {
  // |g|^2 ~ Exp(1) for a unit-power Rayleigh coefficient.
  const double first = rng.exponential() *
                       std::pow(params.user_m.distance_ap, -params.pathloss_exp) /
                       params.noise_ap;
  const double second = rng.exponential() *
                        std::pow(params.user_n.distance_ap, -params.pathloss_exp) /
                        params.noise_ap;
  // Weaker gain becomes user m; a tie keeps the draw order.
  if (second < first) return make_channel(second, first, params);
  return make_channel(first, second, params);
}

ApSinr sinr_ap(double p_m, double p_n, const ChannelRealization& ch) {
  ApSinr s;
  s.user_m = ch.gamma_ap_m * p_m;
  s.user_n = ch.gamma_ap_n * p_n / (1.0 + s.user_m);
  return s;
}

double capacity_ap(double sinr) { return std::log2(1.0 + sinr); }

double optimal_cpu_frequency(double bits, double cycles_per_bit, double block_time) {
  return cycles_per_bit * bits / block_time;
}

double local_energy(double bits, const UserParams& user, double block_time) {
  const double cycles = user.cycles_per_bit * bits;
  return user.capacitance_coeff * cycles * cycles * cycles / (block_time * block_time);
}

double offload_energy(double power, double circuit_power, double block_time) {
  return (power + circuit_power) * block_time;
}

}  // namespace secnoma
