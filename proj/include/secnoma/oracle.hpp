#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "secnoma/energy_min.hpp"
#include "secnoma/outage_min.hpp"

namespace secnoma {

/// Brute-force checks of the closed-form solvers. Judgements are made with
/// system_model and secrecy primitives only; the solvers supply nothing but
/// the claim under test.

struct PowerGridReport {
  bool passed = true;
  std::size_t violations = 0;  ///< strictly cheaper grid points that are feasible
  /// Relative cost gap of the cheapest feasible grid point (>= 0 when the
  /// claim is optimal on the grid); +inf when no grid point is feasible.
  double tightest_gap = 0.0;
  double residual_m = 0.0;  ///< |g2 - a2| / a2 at the claimed powers
  double residual_n = 0.0;  ///< |g1 - a1| / a1
  PowerPair claimed;
};

/// Log-spaced grid_n x grid_n power grid over [p*/4, 4 p*] per axis around
/// the closed-form powers of partition (ell_m, ell_n).
PowerGridReport grid_verify_closed_form_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                                    const SystemParams& params, std::size_t grid_n);

struct P1Report {
  bool passed = true;
  double solver_value = 0.0;
  double grid_value = 0.0;
  double grid_ell_m = 0.0;
  double grid_ell_n = 0.0;
  double gap = 0.0;  ///< (solver - grid) / grid; must be <= 1e-6
};

/// Exhaustive partition grid with the inner powers recomputed here.
P1Report grid_verify_p1(const ChannelRealization& ch, const SystemParams& params,
                        std::size_t partition_grid_n);

struct OutageCheck {
  double closed = 0.0;
  OutageEstimate empirical;
  double tolerance = 0.0;  ///< 3 standard errors
  bool passed = true;
};

struct OutageReport {
  bool passed = true;
  OutageCheck m;
  OutageCheck n;
};

/// Closed-form outage of both users against direct Monte-Carlo draws of the
/// eavesdropper gains. When the plug-in standard error vanishes (estimate 0
/// or 1) the tolerance uses the binomial error at the closed-form value.
OutageReport verify_outage_closed_forms(const ChannelRealization& ch, const SystemParams& params,
                                        const Allocation& alloc, std::uint64_t n_draws, Rng& rng,
                                        unsigned threads = 1);

struct P2Report {
  bool passed = true;
  std::size_t violations = 0;
  double worst_m = 0.0;  ///< max over grid of x_m(grid) - x_m(claimed)
  double worst_n = 0.0;
  double budget_residual = 0.0;  ///< max relative |local + pT - E| / E
  bool sub_budget_ok = true;     ///< every under-spending power lowers x_m
};

/// Lexicographic check: user m's exponent over its partition grid, then user
/// n's given user m's claimed allocation.
P2Report grid_verify_p2(const ChannelRealization& ch, const SystemParams& params,
                        std::size_t grid_n);

/// A channel drawn at `params` that passes the energy-problem feasibility test.
/// Throws InfeasibleProblem after `max_tries` failed draws.
ChannelRealization draw_feasible_channel(const SystemParams& params, Rng& rng,
                                         std::size_t max_tries = 100000);

struct SuiteOptions {
  bool quick = false;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

/// Runs every oracle on seeded random instances and writes one line per
/// check. Returns true when all pass.
bool run_oracle_suite(const SuiteOptions& options, std::ostream& out);

}  // namespace secnoma
