#pragma once

#include <cstdint>

#include "secnoma/random.hpp"
#include "secnoma/system_model.hpp"

namespace secnoma {

/// Wyner code rates of one user, bits/s/Hz.
struct RatePair {
  double rt = 0.0;  ///< codeword transmission rate
  double rs = 0.0;  ///< confidential data rate

  /// Redundancy rate spent on confusing the eavesdropper.
  double re() const { return rt - rs; }
};

/// Lower bounds on the slack functions that are equivalent to
/// "secrecy outage probability <= eps" (1/W).
struct OutageThresholds {
  double user_m = 0.0;
  double user_n = 0.0;
};

/// ln(1/eps) / (noise_eve * d_e^pathloss_exp).
double outage_threshold(double eps, double noise_eve, double distance_eve, double pathloss_exp);

OutageThresholds outage_thresholds(const SystemParams& params);

/// Closed-form secrecy outage probability of user m when its codeword rate
/// equals its AP capacity. Returns 1 when the rate pair leaves no redundancy.
double outage_prob_m(double p_m, double rs_m, const ChannelRealization& ch,
                     const SystemParams& params);

/// Same for user n, whose AP capacity is limited by user m's interference.
double outage_prob_n(double p_m, double p_n, double rs_n, const ChannelRealization& ch,
                     const SystemParams& params);

/// Slack functions of the two outage constraints; the constraints hold iff
/// user_n >= thresholds.user_n and user_m >= thresholds.user_m.
struct SecrecySlack {
  double user_m = 0.0;
  double user_n = 0.0;
};

SecrecySlack constraint_slack(double p_m, double p_n, double rs_m, double rs_n,
                              const ChannelRealization& ch);

struct OutageEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t outages = 0;
  std::uint64_t draws = 0;
};

/// Direct Monte-Carlo evaluation of Pr{rt - rs < log2(1 + |h_e|^2 p / noise)}
/// with |h_e|^2 ~ Exp(mean d_e^-pathloss_exp). Draws are split into fixed-size
/// chunks with their own sub-streams, so `threads` does not change the result.
OutageEstimate empirical_outage(const RatePair& rates, double power, double distance_eve,
                                const SystemParams& params, std::uint64_t n_draws, Rng& rng,
                                unsigned threads = 1);

}  // namespace secnoma
