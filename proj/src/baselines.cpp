#include "secnoma/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace secnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTauMin = 0.01;
constexpr double kTauMax = 0.99;
constexpr double kTauTolerance = 1e-4;
constexpr std::size_t kTauScanPoints = 33;

double gamma_of(UserId u, const ChannelRealization& ch) {
  return u == UserId::m ? ch.gamma_ap_m : ch.gamma_ap_n;
}

double threshold_of(UserId u, const OutageThresholds& t) {
  return u == UserId::m ? t.user_m : t.user_n;
}

double slot_rate(double ell, const UserParams& up, double tau, const SystemParams& params) {
  return (up.task_bits - ell) / (params.bandwidth * tau * params.block_time);
}

/// Smallest slot share that lets user u meet its outage constraint at its
/// largest local share. Returns +inf when no share suffices.
double min_slot_share(UserId u, const ChannelRealization& ch, const SystemParams& params,
                      const OutageThresholds& thr) {
  const UserParams& up = params.user(u);
  const double a = threshold_of(u, thr);
  const double g = gamma_of(u, ch);
  if (a <= 0.0) return 0.0;
  if (!(g > a)) return kInf;
  return (up.task_bits - up.max_local_bits) /
         (params.bandwidth * params.block_time * std::log2(g / a));
}

}  // namespace

Solution solve_full_offloading_energy(const ChannelRealization& ch, const SystemParams& params) {
  Solution s = solution_at_partition(0.0, 0.0, ch, params, outage_thresholds(params));
  return s;
}

OutageSolution solve_full_offloading_outage(const ChannelRealization& ch,
                                            const SystemParams& params) {
  return budget_allocation_at(0.0, 0.0, ch, params);
}

std::variant<Solution, OutageSolution> solve_full_offloading(const ChannelRealization& ch,
                                                             const SystemParams& params,
                                                             Objective objective) {
  if (objective == Objective::energy) return solve_full_offloading_energy(ch, params);
  return solve_full_offloading_outage(ch, params);
}

double single_user_secure_power(double rs, double gamma, double threshold) {
  const double x = std::exp2(rs);
  const double den = gamma - threshold * x;
  if (!(den > 0.0)) return kInf;
  return (x - 1.0) / den;
}

Minimum oma_user_energy(UserId user, double tau, const ChannelRealization& ch,
                        const SystemParams& params, const PartitionSearch& search) {
  const UserParams& up = params.user(user);
  const double gamma = gamma_of(user, ch);
  const double a = threshold_of(user, outage_thresholds(params));
  const double T = params.block_time;
  auto cost = [&](double ell) {
    const double p = single_user_secure_power(slot_rate(ell, up, tau, params), gamma, a);
    if (p == kInf) return kInf;
    return up.energy_weight * (local_energy(ell, up, T) + p * tau * T);
  };
  return minimize_partition(cost, up.max_local_bits, search);
}

double oma_energy_at(double tau_m, const ChannelRealization& ch, const SystemParams& params,
                     const PartitionSearch& search) {
  if (!(tau_m > 0.0 && tau_m < 1.0)) return kInf;
  const Minimum m = oma_user_energy(UserId::m, tau_m, ch, params, search);
  if (m.value == kInf) return kInf;
  return m.value + oma_user_energy(UserId::n, 1.0 - tau_m, ch, params, search).value;
}

OmaSolution solve_oma_energy(const ChannelRealization& ch, const SystemParams& params,
                             const PartitionSearch& search) {
  const OutageThresholds thr = outage_thresholds(params);
  const double lo_m = min_slot_share(UserId::m, ch, params, thr);
  const double lo_n = min_slot_share(UserId::n, ch, params, thr);
  const double lower = std::max(kTauMin, lo_m);
  const double upper = std::min(kTauMax, 1.0 - lo_n);
  if (!(upper > lower)) {
    const UserId blocking = lo_m >= lo_n ? UserId::m : UserId::n;
    throw InfeasiblePartition(blocking, upper - lower,
                              "no TDMA slot split admits both outage constraints");
  }

  auto objective = [&](double tau) { return oma_energy_at(tau, ch, params, search); };
  Minimum best;
  const double scan_step = (upper - lower) / static_cast<double>(kTauScanPoints - 1);
  for (std::size_t i = 0; i < kTauScanPoints; ++i) {
    const double tau = i + 1 == kTauScanPoints ? upper : lower + scan_step * static_cast<double>(i);
    const double v = objective(tau);
    if (v < best.value) best = {tau, v};
  }
  if (best.value == kInf) {
    throw InfeasiblePartition(UserId::m, 0.0, "no TDMA slot split admits both outage constraints");
  }
  const Minimum refined = golden_section(objective, std::max(lower, best.x - scan_step),
                                         std::min(upper, best.x + scan_step), kTauTolerance);
  if (refined.value < best.value) best = refined;

  OmaSolution s;
  s.tau_m = best.x;
  s.weighted_energy = best.value;
  const double T = params.block_time;
  for (UserId u : {UserId::m, UserId::n}) {
    const UserParams& up = params.user(u);
    const double tau = u == UserId::m ? s.tau_m : s.tau_n();
    const Minimum part = oma_user_energy(u, tau, ch, params, search);
    OmaUser& ou = u == UserId::m ? s.m : s.n;
    ou.ell = part.x;
    ou.rates.rs = slot_rate(part.x, up, tau, params);
    ou.power = single_user_secure_power(ou.rates.rs, gamma_of(u, ch), threshold_of(u, thr));
    ou.rates.rt = capacity_ap(gamma_of(u, ch) * ou.power);
    ou.energy = local_energy(part.x, up, T) + (ou.power + up.circuit_power) * tau * T;
    const double eve = params.noise_eve * std::pow(up.distance_eve, params.pathloss_exp);
    const double x2 = std::exp2(ou.rates.rs);
    ou.x = (1.0 + gamma_of(u, ch) * ou.power - x2) * eve / (x2 * ou.power);
    ou.outage = ou.x < 0.0 ? 1.0 : std::exp(-ou.x);
  }
  return s;
}

OmaSolution solve_oma_outage(const ChannelRealization& ch, const SystemParams& params) {
  OmaSolution s;
  s.tau_m = 0.5;
  const double T = params.block_time;
  for (UserId u : {UserId::m, UserId::n}) {
    const UserParams& up = params.user(u);
    const double tau = u == UserId::m ? s.tau_m : s.tau_n();
    const double local = local_energy(up.max_local_bits, up, T);
    const double spare = up.energy_budget - local;
    if (!(spare > 0.0)) {
      throw InfeasibleProblem(u, spare,
                              std::string("energy budget of user ") + to_string(u) +
                                  " does not exceed the cost of its largest local share");
    }
    OmaUser& ou = u == UserId::m ? s.m : s.n;
    ou.ell = up.max_local_bits;
    ou.power = spare / (tau * T);
    ou.rates.rs = slot_rate(ou.ell, up, tau, params);
    ou.rates.rt = capacity_ap(gamma_of(u, ch) * ou.power);
    ou.energy = local + (ou.power + up.circuit_power) * tau * T;
    const double eve = params.noise_eve * std::pow(up.distance_eve, params.pathloss_exp);
    const double x2 = std::exp2(ou.rates.rs);
    ou.x = (1.0 + gamma_of(u, ch) * ou.power - x2) * eve / (x2 * ou.power);
    ou.outage = ou.x < 0.0 ? 1.0 : std::min(1.0, std::exp(-ou.x));
    s.weighted_energy += up.energy_weight * (local + ou.power * tau * T);
  }
  return s;
}

OmaSolution solve_oma(const ChannelRealization& ch, const SystemParams& params,
                      Objective objective) {
  return objective == Objective::energy ? solve_oma_energy(ch, params) : solve_oma_outage(ch, params);
}

Solution solve_no_eavesdropper(const ChannelRealization& ch, const SystemParams& params,
                               const PartitionSearch& search) {
  Solution s = solve_p1(ch, params, OutageThresholds{0.0, 0.0}, search);
  s.outage_m.reset();
  s.outage_n.reset();
  return s;
}

}  // namespace secnoma
