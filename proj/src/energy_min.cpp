#include "secnoma/energy_min.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace secnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PowerOutcome {
  PowerPair powers;
  bool feasible = true;
  UserId failed = UserId::m;
  double margin = 0.0;
};

PowerOutcome closed_form_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                                const SystemParams& params, const OutageThresholds& thr) {
  PowerOutcome out;
  const double xm = std::exp2(secrecy_rate_for_partition(
      ell_m, params.user_m.task_bits, params.bandwidth, params.block_time));
  const double den_m = ch.gamma_ap_m - thr.user_m * xm;
  if (!(den_m > 0.0)) {
    out.feasible = false;
    out.failed = UserId::m;
    out.margin = den_m;
    return out;
  }
  out.powers.p_m = (xm - 1.0) / den_m;

  const double interference = 1.0 + ch.gamma_ap_m * out.powers.p_m;
  const double xn = std::exp2(secrecy_rate_for_partition(
      ell_n, params.user_n.task_bits, params.bandwidth, params.block_time));
  const double den_n = ch.gamma_ap_n - interference * thr.user_n * xn;
  if (!(den_n > 0.0)) {
    out.feasible = false;
    out.failed = UserId::n;
    out.margin = den_n;
    return out;
  }
  out.powers.p_n = interference * (xn - 1.0) / den_n;
  return out;
}

double weighted_user_energy(const UserParams& u, double ell, double power, double T) {
  return u.energy_weight * (local_energy(ell, u, T) + power * T);
}

}  // namespace

double secrecy_rate_for_partition(double ell, double task_bits, double bandwidth,
                                  double block_time) {
  return (task_bits - ell) / (bandwidth * block_time);
}

PowerPair optimal_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                         const SystemParams& params) {
  return optimal_powers(ell_m, ell_n, ch, params, outage_thresholds(params));
}

PowerPair optimal_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                         const SystemParams& params, const OutageThresholds& thresholds) {
  const PowerOutcome out = closed_form_powers(ell_m, ell_n, ch, params, thresholds);
  if (!out.feasible) {
    throw InfeasiblePartition(out.failed, out.margin,
                              std::string("no finite power meets the outage constraint of user ") +
                                  to_string(out.failed));
  }
  return out.powers;
}

CodewordRates codeword_rates(double p_m, double p_n, const ChannelRealization& ch) {
  const ApSinr sinr = sinr_ap(p_m, p_n, ch);
  return {capacity_ap(sinr.user_m), capacity_ap(sinr.user_n)};
}

Verdict check_feasibility_p1(const ChannelRealization& ch, const SystemParams& params) {
  return check_feasibility_p1(ch, params, outage_thresholds(params));
}

Verdict check_feasibility_p1(const ChannelRealization& ch, const SystemParams& params,
                             const OutageThresholds& thresholds) {
  const PowerOutcome out =
      closed_form_powers(params.user_m.max_local_bits, params.user_n.max_local_bits, ch, params,
                         thresholds);
  if (out.feasible) return Verdict::ok();
  return Verdict::fail(out.failed, out.margin,
                       std::string("outage constraint of user ") + to_string(out.failed) +
                           " unattainable even at the largest local share");
}

double p1_objective(double ell_m, double ell_n, const ChannelRealization& ch,
                    const SystemParams& params, const OutageThresholds& thresholds) {
  const PowerOutcome out = closed_form_powers(ell_m, ell_n, ch, params, thresholds);
  if (!out.feasible) return kInf;
  const double T = params.block_time;
  return weighted_user_energy(params.user_m, ell_m, out.powers.p_m, T) +
         weighted_user_energy(params.user_n, ell_n, out.powers.p_n, T);
}

Solution solution_at_partition(double ell_m, double ell_n, const ChannelRealization& ch,
                               const SystemParams& params, const OutageThresholds& thresholds,
                               bool with_outage) {
  const PowerPair p = optimal_powers(ell_m, ell_n, ch, params, thresholds);
  const CodewordRates rt = codeword_rates(p.p_m, p.p_n, ch);
  const double T = params.block_time;
  const auto& um = params.user_m;
  const auto& un = params.user_n;

  Solution s;
  s.alloc.m = {ell_m, p.p_m,
               {rt.rt_m, secrecy_rate_for_partition(ell_m, um.task_bits, params.bandwidth, T)}};
  s.alloc.n = {ell_n, p.p_n,
               {rt.rt_n, secrecy_rate_for_partition(ell_n, un.task_bits, params.bandwidth, T)}};
  s.energy_m = local_energy(ell_m, um, T) + offload_energy(p.p_m, um.circuit_power, T);
  s.energy_n = local_energy(ell_n, un, T) + offload_energy(p.p_n, un.circuit_power, T);
  s.weighted_energy = weighted_user_energy(um, ell_m, p.p_m, T) +
                      weighted_user_energy(un, ell_n, p.p_n, T);
  if (with_outage) {
    // Zero power only happens with nothing to offload, which cannot leak.
    s.outage_m = p.p_m > 0.0 ? outage_prob_m(p.p_m, s.alloc.m.rates.rs, ch, params) : 0.0;
    s.outage_n = p.p_n > 0.0 ? outage_prob_n(p.p_m, p.p_n, s.alloc.n.rates.rs, ch, params) : 0.0;
  }
  return s;
}

Solution solve_p1(const ChannelRealization& ch, const SystemParams& params,
                  const PartitionSearch& search) {
  return solve_p1(ch, params, outage_thresholds(params), search);
}

Solution solve_p1(const ChannelRealization& ch, const SystemParams& params,
                  const OutageThresholds& thresholds, const PartitionSearch& search) {
  const Verdict verdict = check_feasibility_p1(ch, params, thresholds);
  if (!verdict) throw InfeasibleProblem(*verdict.user, verdict.margin, verdict.reason);

  const double max_m = params.user_m.max_local_bits;
  const double max_n = params.user_n.max_local_bits;

  // Nested 1-D searches: every candidate ell_m gets its own optimal ell_n.
  // The optimal ell_n shifts by several bits per bit of ell_m, so a fixed
  // inner window around a coarse 2-D optimum is not enough.
  auto best_n_for = [&](double ell_m) {
    return minimize_partition(
        [&](double ell_n) { return p1_objective(ell_m, ell_n, ch, params, thresholds); }, max_n,
        search);
  };
  const Minimum outer =
      minimize_partition([&](double ell_m) { return best_n_for(ell_m).value; }, max_m, search);
  const double best_m = outer.x;
  const double best_n = best_n_for(best_m).x;

  Solution s = solution_at_partition(best_m, best_n, ch, params, thresholds);
  s.verdict = verdict;
  return s;
}

}  // namespace secnoma
