#pragma once

#include "secnoma/energy_min.hpp"

namespace secnoma {

/// Negative log secrecy outage probabilities; larger is more secure.
struct OutageExponents {
  double x_m = 0.0;
  double x_n = 0.0;
};

OutageExponents outage_exponents(const Allocation& alloc, const ChannelRealization& ch,
                                 const SystemParams& params);

/// Feasible iff each budget strictly exceeds the cost of computing the
/// largest local share (the remainder must be offloaded with positive power).
Verdict check_feasibility_p2(const SystemParams& params);

struct OutageSolution {
  Allocation alloc;
  double outage_m = 1.0;
  double outage_n = 1.0;
  double x_m = 0.0;
  double x_n = 0.0;
  double energy_m = 0.0;  ///< local + offload, circuit power included
  double energy_n = 0.0;
  Verdict verdict;
  /// Exponent is negative: rs > rt, outage clamped to 1.
  bool degenerate_m = false;
  bool degenerate_n = false;
};

/// Priority-based outage minimization: user m first, then user n given
/// user m's allocation. Throws InfeasibleProblem per check_feasibility_p2.
OutageSolution solve_p2(const ChannelRealization& ch, const SystemParams& params);

/// Budget-exhausting allocation at a fixed partition: each user spends all of
/// E_k - local energy on transmission. Throws InfeasibleProblem when a
/// budget does not cover the local share.
OutageSolution budget_allocation_at(double ell_m, double ell_n, const ChannelRealization& ch,
                                    const SystemParams& params);

}  // namespace secnoma
