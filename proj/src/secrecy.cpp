#include "secnoma/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "secnoma/parallel.hpp"

namespace secnoma {

namespace {

double outage_from_phi(double phi, double eve_pathloss) {
  // Negative threshold: the eavesdropper always out-rates the redundancy.
  if (!(phi > 0.0)) return 1.0;
  return std::clamp(std::exp(-phi * eve_pathloss), 0.0, 1.0);
}

double eve_pathloss(const UserParams& u, const SystemParams& params) {
  return std::pow(u.distance_eve, params.pathloss_exp);
}

constexpr std::uint64_t kDrawsPerChunk = 1u << 16;

}  // namespace

double outage_threshold(double eps, double noise_eve, double distance_eve, double pathloss_exp) {
  return std::log(1.0 / eps) / (noise_eve * std::pow(distance_eve, pathloss_exp));
}

OutageThresholds outage_thresholds(const SystemParams& params) {
  return {outage_threshold(params.outage_eps, params.noise_eve, params.user_m.distance_eve,
                           params.pathloss_exp),
          outage_threshold(params.outage_eps, params.noise_eve, params.user_n.distance_eve,
                           params.pathloss_exp)};
}

double outage_prob_m(double p_m, double rs_m, const ChannelRealization& ch,
                     const SystemParams& params) {
  if (!(p_m > 0.0)) throw NonPositivePower("outage_prob_m: p_m must be positive");
  const double x = std::exp2(rs_m);
  const double phi = (1.0 + ch.gamma_ap_m * p_m - x) / (x * p_m) * params.noise_eve;
  return outage_from_phi(phi, eve_pathloss(params.user_m, params));
}

double outage_prob_n(double p_m, double p_n, double rs_n, const ChannelRealization& ch,
                     const SystemParams& params) {
  if (!(p_n > 0.0)) throw NonPositivePower("outage_prob_n: p_n must be positive");
  if (p_m < 0.0) throw NonPositivePower("outage_prob_n: p_m must be nonnegative");
  const double x = std::exp2(rs_n);
  const double interference = 1.0 + ch.gamma_ap_m * p_m;
  const double phi = (interference + ch.gamma_ap_n * p_n - interference * x) /
                     (interference * x * p_n) * params.noise_eve;
  return outage_from_phi(phi, eve_pathloss(params.user_n, params));
}

SecrecySlack constraint_slack(double p_m, double p_n, double rs_m, double rs_n,
                              const ChannelRealization& ch) {
  if (!(p_m > 0.0) || !(p_n > 0.0))
    throw NonPositivePower("constraint_slack: powers must be positive");
  const double xm = std::exp2(rs_m);
  const double xn = std::exp2(rs_n);
  const double interference = 1.0 + ch.gamma_ap_m * p_m;
  SecrecySlack s;
  s.user_m = (1.0 + ch.gamma_ap_m * p_m - xm) / (xm * p_m);
  s.user_n = ((interference + ch.gamma_ap_n * p_n) / interference - xn) / (xn * p_n);
  return s;
}

OutageEstimate empirical_outage(const RatePair& rates, double power, double distance_eve,
                                const SystemParams& params, std::uint64_t n_draws, Rng& rng,
                                unsigned threads) {
  const double rate = std::pow(distance_eve, params.pathloss_exp);
  const double redundancy = rates.re();
  const std::uint64_t base = rng.next_u64();
  const std::size_t chunks = static_cast<std::size_t>((n_draws + kDrawsPerChunk - 1) / kDrawsPerChunk);
  std::vector<std::uint64_t> counts(chunks, 0);

  parallel_for(chunks, threads, [&](std::size_t c) {
    Rng stream(derive_seed(base, c));
    const std::uint64_t begin = c * kDrawsPerChunk;
    const std::uint64_t end = std::min<std::uint64_t>(n_draws, begin + kDrawsPerChunk);
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double eve_gain = stream.exponential(rate);
      const double eve_capacity = std::log2(1.0 + eve_gain * power / params.noise_eve);
      if (redundancy < eve_capacity) ++hits;
    }
    counts[c] = hits;
  });

  OutageEstimate out;
  out.draws = n_draws;
  for (auto c : counts) out.outages += c;
  if (n_draws == 0) return out;
  const double n = static_cast<double>(n_draws);
  out.estimate = static_cast<double>(out.outages) / n;
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / n);
  return out;
}

}  // namespace secnoma
