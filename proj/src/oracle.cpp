#include "secnoma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace secnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double relative(double value, double reference) {
  return reference != 0.0 ? std::abs(value - reference) / std::abs(reference)
                          : std::abs(value - reference);
}

double rate_for(double ell, const UserParams& u, const SystemParams& p) {
  return (u.task_bits - ell) / (p.bandwidth * p.block_time);
}

double grid_point(double max_bits, std::size_t i, std::size_t n) {
  if (n < 2) return max_bits;
  if (i + 1 == n) return max_bits;
  return max_bits * static_cast<double>(i) / static_cast<double>(n - 1);
}

template <class V>
std::string kv(const char* key, V value) {
  std::ostringstream s;
  s << key << '=' << value;
  return s.str();
}

double eve_factor(const UserParams& u, const SystemParams& p) {
  return p.noise_eve * std::pow(u.distance_eve, p.pathloss_exp);
}

}  // namespace

PowerGridReport grid_verify_closed_form_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                                    const SystemParams& params, std::size_t grid_n) {
  PowerGridReport r;
  r.claimed = optimal_powers(ell_m, ell_n, ch, params);
  const OutageThresholds a = outage_thresholds(params);
  const double rs_m = rate_for(ell_m, params.user_m, params);
  const double rs_n = rate_for(ell_n, params.user_n, params);
  const double wm = params.user_m.energy_weight;
  const double wn = params.user_n.energy_weight;
  const double pm0 = r.claimed.p_m;
  const double pn0 = r.claimed.p_n;
  if (!(pm0 > 0.0 && pn0 > 0.0)) {
    r.passed = pm0 == 0.0 && pn0 == 0.0 && rs_m == 0.0 && rs_n == 0.0;
    return r;
  }

  const SecrecySlack at = constraint_slack(pm0, pn0, rs_m, rs_n, ch);
  // Thresholds near zero make a relative residual meaningless; measure
  // against the leading term of the slack instead.
  const double lead_m = ch.gamma_ap_m / std::exp2(rs_m);
  const double lead_n = ch.gamma_ap_n / ((1.0 + ch.gamma_ap_m * pm0) * std::exp2(rs_n));
  r.residual_m = std::abs(at.user_m - a.user_m) /
                 (std::abs(a.user_m) >= 1e-6 * lead_m ? std::abs(a.user_m) : lead_m);
  r.residual_n = std::abs(at.user_n - a.user_n) /
                 (std::abs(a.user_n) >= 1e-6 * lead_n ? std::abs(a.user_n) : lead_n);

  std::vector<double> factor(grid_n, 1.0);
  if (grid_n > 1) {
    for (std::size_t i = 0; i < grid_n; ++i) {
      const double t = (2.0 * static_cast<double>(i) - static_cast<double>(grid_n - 1)) /
                       static_cast<double>(grid_n - 1);
      factor[i] = std::pow(4.0, t);
    }
  }
  const double cost0 = wm * pm0 + wn * pn0;
  const double tol_m = 1e-12 * std::abs(a.user_m);
  const double tol_n = 1e-12 * std::abs(a.user_n);
  r.tightest_gap = kInf;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double pm = pm0 * factor[i];
    for (std::size_t j = 0; j < grid_n; ++j) {
      const double pn = pn0 * factor[j];
      const SecrecySlack s = constraint_slack(pm, pn, rs_m, rs_n, ch);
      if (s.user_m < a.user_m - tol_m || s.user_n < a.user_n - tol_n) continue;
      const double gap = (wm * pm + wn * pn - cost0) / cost0;
      r.tightest_gap = std::min(r.tightest_gap, gap);
      if (gap < -1e-6) ++r.violations;
    }
  }
  r.passed = r.violations == 0 && r.residual_m <= 1e-9 && r.residual_n <= 1e-9;
  return r;
}

P1Report grid_verify_p1(const ChannelRealization& ch, const SystemParams& params,
                        std::size_t partition_grid_n) {
  P1Report r;
  const OutageThresholds a = outage_thresholds(params);
  const UserParams& um = params.user_m;
  const UserParams& un = params.user_n;
  const double T = params.block_time;
  const std::size_t n = std::max<std::size_t>(1, partition_grid_n);

  struct Column {
    double ell, x, local;
  };
  std::vector<Column> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double ell = grid_point(un.max_local_bits, j, n);
    cols[j] = {ell, std::exp2(rate_for(ell, un, params)), local_energy(ell, un, T)};
  }

  r.grid_value = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double ell_m = grid_point(um.max_local_bits, i, n);
    const double xm = std::exp2(rate_for(ell_m, um, params));
    const double den_m = ch.gamma_ap_m - a.user_m * xm;
    if (!(den_m > 0.0)) continue;
    const double pm = (xm - 1.0) / den_m;
    const double k = 1.0 + ch.gamma_ap_m * pm;
    const double base = um.energy_weight * (local_energy(ell_m, um, T) + pm * T);
    for (const Column& c : cols) {
      const double den_n = ch.gamma_ap_n - k * a.user_n * c.x;
      if (!(den_n > 0.0)) continue;
      const double pn = k * (c.x - 1.0) / den_n;
      const double v = base + un.energy_weight * (c.local + pn * T);
      if (v < r.grid_value) {
        r.grid_value = v;
        r.grid_ell_m = ell_m;
        r.grid_ell_n = c.ell;
      }
    }
  }

  try {
    r.solver_value = solve_p1(ch, params).weighted_energy;
  } catch (const InfeasibleProblem&) {
    r.solver_value = kInf;
  }
  if (r.grid_value == kInf) {
    r.gap = 0.0;
    r.passed = true;
    return r;
  }
  r.gap = (r.solver_value - r.grid_value) / r.grid_value;
  r.passed = r.gap <= 1e-6;
  return r;
}

OutageReport verify_outage_closed_forms(const ChannelRealization& ch, const SystemParams& params,
                                        const Allocation& alloc, std::uint64_t n_draws, Rng& rng,
                                        unsigned threads) {
  auto judge = [&](double closed, const RatePair& rates, double power, double d_e) {
    OutageCheck c;
    c.closed = closed;
    c.empirical = empirical_outage(rates, power, d_e, params, n_draws, rng, threads);
    double se = c.empirical.std_error;
    if (se == 0.0) se = std::sqrt(closed * (1.0 - closed) / static_cast<double>(n_draws));
    c.tolerance = 3.0 * se;
    c.passed = std::abs(c.closed - c.empirical.estimate) <= c.tolerance;
    return c;
  };
  OutageReport r;
  r.m = judge(outage_prob_m(alloc.m.power, alloc.m.rates.rs, ch, params), alloc.m.rates,
              alloc.m.power, params.user_m.distance_eve);
  r.n = judge(outage_prob_n(alloc.m.power, alloc.n.power, alloc.n.rates.rs, ch, params),
              alloc.n.rates, alloc.n.power, params.user_n.distance_eve);
  r.passed = r.m.passed && r.n.passed;
  return r;
}

P2Report grid_verify_p2(const ChannelRealization& ch, const SystemParams& params,
                        std::size_t grid_n) {
  P2Report r;
  const OutageSolution claim = solve_p2(ch, params);
  const UserParams& um = params.user_m;
  const UserParams& un = params.user_n;
  const double T = params.block_time;
  const double em = eve_factor(um, params);
  const double en = eve_factor(un, params);
  const double pm0 = claim.alloc.m.power;
  const double pn0 = claim.alloc.n.power;
  const double rs_m0 = claim.alloc.m.rates.rs;
  const double rs_n0 = claim.alloc.n.rates.rs;

  const SecrecySlack at = constraint_slack(pm0, pn0, rs_m0, rs_n0, ch);
  const double xm0 = at.user_m * em;
  const double xn0 = at.user_n * en;

  r.budget_residual =
      std::max(relative(local_energy(claim.alloc.m.ell, um, T) + pm0 * T, um.energy_budget),
               relative(local_energy(claim.alloc.n.ell, un, T) + pn0 * T, un.energy_budget));

  r.worst_m = -kInf;
  r.worst_n = -kInf;
  const std::size_t n = std::max<std::size_t>(1, grid_n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ell = grid_point(um.max_local_bits, i, n);
    const double pm = (um.energy_budget - local_energy(ell, um, T)) / T;
    if (!(pm > 0.0)) continue;
    const double x = constraint_slack(pm, pn0, rate_for(ell, um, params), rs_n0, ch).user_m * em;
    r.worst_m = std::max(r.worst_m, x - xm0);
    if (x > xm0 + 1e-9) ++r.violations;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double ell = grid_point(un.max_local_bits, j, n);
    const double pn = (un.energy_budget - local_energy(ell, un, T)) / T;
    if (!(pn > 0.0)) continue;
    const double x = constraint_slack(pm0, pn, rs_m0, rate_for(ell, un, params), ch).user_n * en;
    r.worst_n = std::max(r.worst_n, x - xn0);
    if (x > xn0 + 1e-9) ++r.violations;
  }
  for (double f : {0.25, 0.5, 0.9, 0.999}) {
    const SecrecySlack s = constraint_slack(f * pm0, f * pn0, rs_m0, rs_n0, ch);
    // User n is re-evaluated against user m's claimed power.
    const double xn = constraint_slack(pm0, f * pn0, rs_m0, rs_n0, ch).user_n * en;
    if (!(s.user_m * em < xm0) || !(xn < xn0)) r.sub_budget_ok = false;
  }
  r.passed = r.violations == 0 && r.sub_budget_ok && r.budget_residual <= 1e-12;
  return r;
}

ChannelRealization draw_feasible_channel(const SystemParams& params, Rng& rng,
                                         std::size_t max_tries) {
  Verdict last;
  for (std::size_t i = 0; i < max_tries; ++i) {
    const ChannelRealization ch = sample_channels(params, rng);
    last = check_feasibility_p1(ch, params);
    if (last) return ch;
  }
  throw InfeasibleProblem(last.user.value_or(UserId::m), last.margin,
                          "no feasible channel within the draw limit");
}

bool run_oracle_suite(const SuiteOptions& options, std::ostream& out) {
  const SystemParams params = default_params();
  const std::size_t t2_count = options.quick ? 10 : 100;
  const std::size_t t2_grid = options.quick ? 100 : 500;
  const std::size_t p1_count = options.quick ? 3 : 20;
  const std::size_t p1_grid = options.quick ? 200 : 1000;
  const std::size_t mc_count = options.quick ? 4 : 50;
  const std::uint64_t mc_draws = options.quick ? 100000 : 1000000;
  const std::size_t p2_count = options.quick ? 10 : 50;
  const std::size_t p2_grid = options.quick ? 500 : 2000;
  bool all = true;

  auto line = [&](const char* name, bool ok, std::size_t count, auto&&... extra) {
    out << (ok ? "PASS " : "FAIL ") << name << " instances=" << count;
    ((out << ' ' << extra), ...);
    out << '\n';
    all = all && ok;
  };

  {
    std::size_t bad = 0;
    double min_gap = kInf, max_res = 0.0;
    for (std::size_t i = 0; i < t2_count; ++i) {
      Rng rng(derive_seed(options.seed, i));
      const ChannelRealization ch = draw_feasible_channel(params, rng);
      double lm = params.user_m.max_local_bits, ln = params.user_n.max_local_bits;
      for (int tries = 0; tries < 1000; ++tries) {
        const double cm = rng.uniform() * params.user_m.max_local_bits;
        const double cn = rng.uniform() * params.user_n.max_local_bits;
        try {
          optimal_powers(cm, cn, ch, params);
          lm = cm;
          ln = cn;
          break;
        } catch (const InfeasiblePartition&) {
        }
      }
      const PowerGridReport r = grid_verify_closed_form_powers(lm, ln, ch, params, t2_grid);
      if (!r.passed) ++bad;
      min_gap = std::min(min_gap, r.tightest_gap);
      max_res = std::max({max_res, r.residual_m, r.residual_n});
    }
    line("closed_form_power_grid", bad == 0, t2_count, kv("failures", bad), kv("min_gap", min_gap),
         kv("max_residual", max_res));
  }
  {
    std::size_t bad = 0;
    double worst = -kInf;
    for (std::size_t i = 0; i < p1_count; ++i) {
      Rng rng(derive_seed(options.seed ^ 0x5031u, i));
      const ChannelRealization ch = draw_feasible_channel(params, rng);
      const P1Report r = grid_verify_p1(ch, params, p1_grid);
      if (!r.passed) ++bad;
      worst = std::max(worst, r.gap);
    }
    line("p1_partition_grid", bad == 0, p1_count, kv("failures", bad), kv("worst_gap", worst));
  }
  {
    std::size_t bad = 0;
    double worst_z = 0.0;
    for (std::size_t i = 0; i < mc_count; ++i) {
      Rng rng(derive_seed(options.seed ^ 0x4d43u, i));
      SystemParams p = params;
      p.user_m.energy_budget = 0.2 + 0.8 * rng.uniform();
      p.user_n.energy_budget = 0.2 + 0.8 * rng.uniform();
      const ChannelRealization ch = draw_feasible_channel(p, rng);
      const Allocation alloc = i % 2 == 0 ? solve_p1(ch, p).alloc : solve_p2(ch, p).alloc;
      const OutageReport r = verify_outage_closed_forms(ch, p, alloc, mc_draws, rng,
                                                        options.threads);
      if (!r.passed) ++bad;
      for (const OutageCheck* c : {&r.m, &r.n}) {
        if (c->tolerance > 0.0)
          worst_z = std::max(worst_z, 3.0 * std::abs(c->closed - c->empirical.estimate) /
                                          c->tolerance);
      }
    }
    line("outage_closed_forms", bad == 0, mc_count, kv("failures", bad), kv("max_z", worst_z));
  }
  {
    std::size_t bad = 0;
    double worst = -kInf, residual = 0.0;
    for (std::size_t i = 0; i < p2_count; ++i) {
      Rng rng(derive_seed(options.seed ^ 0x5032u, i));
      SystemParams p = params;
      p.user_m.energy_budget = 0.2 + 0.8 * rng.uniform();
      p.user_n.energy_budget = 0.2 + 0.8 * rng.uniform();
      const ChannelRealization ch = sample_channels(p, rng);
      const P2Report r = grid_verify_p2(ch, p, p2_grid);
      if (!r.passed) ++bad;
      worst = std::max({worst, r.worst_m, r.worst_n});
      residual = std::max(residual, r.budget_residual);
    }
    line("p2_lexicographic_grid", bad == 0, p2_count, kv("failures", bad), kv("worst_excess", worst),
         kv("budget_residual", residual));
  }
  return all;
}

}  // namespace secnoma
