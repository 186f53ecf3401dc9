#pragma once

#include "secnoma/errors.hpp"
#include "secnoma/random.hpp"

namespace secnoma {

/// Per-user task, hardware and geometry constants.
struct UserParams {
  double task_bits = 2e5;          ///< L, bits
  double max_local_bits = 1.6e5;   ///< largest locally computable share, bits
  double cycles_per_bit = 1e3;     ///< CPU cycles per input bit
  double capacitance_coeff = 1e-28;  ///< effective switched capacitance
  double energy_weight = 1.0;
  double energy_budget = 0.55;     ///< joules, used by the outage problem
  double circuit_power = 0.0;      ///< watts
  double distance_ap = 60.0;       ///< meters
  double distance_eve = 100.0;     ///< meters
};

/// Static scenario constants. Noise powers are stored in watts.
struct SystemParams {
  double bandwidth = 1e6;   ///< hertz
  double block_time = 0.1;  ///< seconds
  double pathloss_exp = 4.0;
  double noise_ap = 1e-10;   ///< watts
  double noise_eve = 1e-10;  ///< watts
  double outage_eps = 0.1;   ///< tolerated secrecy outage probability
  UserParams user_m;
  UserParams user_n;

  const UserParams& user(UserId u) const { return u == UserId::m ? user_m : user_n; }
  UserParams& user(UserId u) { return u == UserId::m ? user_m : user_n; }
};

/// The reference scenario: B = 1 MHz, T = 0.1 s, path-loss exponent 4,
/// -70 dBm noise at AP and eavesdropper, c = 1e3, capacitance 1e-28,
/// L = 2e5, local cap 1.6e5, AP at 60 m, eavesdropper at 100 m, eps = 0.1.
SystemParams default_params();

/// Throws ConfigError naming the first violated constraint.
void validate(const SystemParams& params);

/// One fading draw. AP gains are normalized by the AP noise power and
/// SIC-ordered (gamma_ap_m <= gamma_ap_n). Solvers see only the mean of the
/// eavesdropper gains.
struct ChannelRealization {
  double gamma_ap_m = 0.0;  ///< 1/W
  double gamma_ap_n = 0.0;  ///< 1/W
  double mean_eve_gain_m = 0.0;
  double mean_eve_gain_n = 0.0;
};

double dbm_to_watts(double level_dbm);

ChannelRealization sample_channels(const SystemParams& params, Rng& rng);

/// Channel for explicit AP gains (1/W), with eavesdropper means from geometry.
/// The gains are assigned as given; callers own the SIC ordering.
ChannelRealization make_channel(double gamma_ap_m, double gamma_ap_n,
                                const SystemParams& params);

struct ApSinr {
  double user_n = 0.0;  ///< decoded first, sees user m as interference
  double user_m = 0.0;  ///< decoded after SIC
};

ApSinr sinr_ap(double p_m, double p_n, const ChannelRealization& ch);

/// log2(1 + sinr), bits/s/Hz.
double capacity_ap(double sinr);

/// Common per-cycle frequency that finishes `bits` within `block_time`.
double optimal_cpu_frequency(double bits, double cycles_per_bit, double block_time);

/// Energy of computing `bits` locally at the optimal frequency.
double local_energy(double bits, const UserParams& user, double block_time);

double offload_energy(double power, double circuit_power, double block_time);

}  // namespace secnoma
