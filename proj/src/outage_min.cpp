#include "secnoma/outage_min.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace secnoma {

namespace {

double outage_from_exponent(double x) { return x < 0.0 ? 1.0 : std::min(1.0, std::exp(-x)); }

}  // namespace

OutageExponents outage_exponents(const Allocation& alloc, const ChannelRealization& ch,
                                 const SystemParams& params) {
  const double p_m = alloc.m.power;
  const double p_n = alloc.n.power;
  if (!(p_m > 0.0) || !(p_n > 0.0))
    throw NonPositivePower("outage_exponents: powers must be positive");
  const double eve_m = params.noise_eve * std::pow(params.user_m.distance_eve, params.pathloss_exp);
  const double eve_n = params.noise_eve * std::pow(params.user_n.distance_eve, params.pathloss_exp);
  const double xm = std::exp2(alloc.m.rates.rs);
  const double xn = std::exp2(alloc.n.rates.rs);
  OutageExponents e;
  e.x_m = (1.0 + ch.gamma_ap_m * p_m - xm) * eve_m / (xm * p_m);
  e.x_n = (1.0 - xn + ch.gamma_ap_n * p_n / (1.0 + ch.gamma_ap_m * p_m)) * eve_n / (xn * p_n);
  return e;
}

Verdict check_feasibility_p2(const SystemParams& params) {
  for (UserId u : {UserId::m, UserId::n}) {
    const UserParams& up = params.user(u);
    const double deficit =
        up.energy_budget - local_energy(up.max_local_bits, up, params.block_time);
    if (!(deficit > 0.0)) {
      return Verdict::fail(u, deficit,
                           std::string("energy budget of user ") + to_string(u) +
                               " does not exceed the cost of its largest local share");
    }
  }
  return Verdict::ok();
}

OutageSolution budget_allocation_at(double ell_m, double ell_n, const ChannelRealization& ch,
                                    const SystemParams& params) {
  const double T = params.block_time;
  OutageSolution s;
  for (UserId u : {UserId::m, UserId::n}) {
    const UserParams& up = params.user(u);
    const double ell = u == UserId::m ? ell_m : ell_n;
    const double spare = up.energy_budget - local_energy(ell, up, T);
    if (!(spare > 0.0)) {
      throw InfeasibleProblem(u, spare,
                              std::string("no energy left for offloading by user ") + to_string(u));
    }
    UserAllocation& a = u == UserId::m ? s.alloc.m : s.alloc.n;
    a.ell = ell;
    a.power = spare / T;
    a.rates.rs = secrecy_rate_for_partition(ell, up.task_bits, params.bandwidth, T);
  }
  const CodewordRates rt = codeword_rates(s.alloc.m.power, s.alloc.n.power, ch);
  s.alloc.m.rates.rt = rt.rt_m;
  s.alloc.n.rates.rt = rt.rt_n;

  const OutageExponents x = outage_exponents(s.alloc, ch, params);
  s.x_m = x.x_m;
  s.x_n = x.x_n;
  s.outage_m = outage_from_exponent(x.x_m);
  s.outage_n = outage_from_exponent(x.x_n);
  s.degenerate_m = x.x_m < 0.0;
  s.degenerate_n = x.x_n < 0.0;
  s.energy_m = local_energy(ell_m, params.user_m, T) +
               offload_energy(s.alloc.m.power, params.user_m.circuit_power, T);
  s.energy_n = local_energy(ell_n, params.user_n, T) +
               offload_energy(s.alloc.n.power, params.user_n.circuit_power, T);
  return s;
}

OutageSolution solve_p2(const ChannelRealization& ch, const SystemParams& params) {
  const Verdict verdict = check_feasibility_p2(params);
  if (!verdict) throw InfeasibleProblem(*verdict.user, verdict.margin, verdict.reason);
  OutageSolution s =
      budget_allocation_at(params.user_m.max_local_bits, params.user_n.max_local_bits, ch, params);
  s.verdict = verdict;
  return s;
}

}  // namespace secnoma
