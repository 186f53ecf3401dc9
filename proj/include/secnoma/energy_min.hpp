#pragma once

#include <optional>
#include <string>

#include "secnoma/search.hpp"
#include "secnoma/secrecy.hpp"
#include "secnoma/system_model.hpp"

namespace secnoma {

struct UserAllocation {
  double ell = 0.0;    ///< locally computed bits
  double power = 0.0;  ///< transmit power, watts
  RatePair rates;
};

struct Allocation {
  UserAllocation m;
  UserAllocation n;

  const UserAllocation& user(UserId u) const { return u == UserId::m ? m : n; }
};

/// Feasibility verdict. On failure `user` names the blocking user and
/// `margin` the value of the failed strict inequality (<= 0).
struct Verdict {
  bool feasible = true;
  std::optional<UserId> user;
  double margin = 0.0;
  std::string reason;

  explicit operator bool() const { return feasible; }

  static Verdict ok() { return {}; }
  static Verdict fail(UserId u, double margin, std::string reason) {
    return {false, u, margin, std::move(reason)};
  }
};

struct Solution {
  Allocation alloc;
  double energy_m = 0.0;         ///< local + offload, circuit power included
  double energy_n = 0.0;
  double weighted_energy = 0.0;  ///< objective; circuit power excluded
  std::optional<double> outage_m;  ///< empty when there is no eavesdropper
  std::optional<double> outage_n;
  Verdict verdict;
};

/// Confidential rate that carries the offloaded L - ell bits within one block.
double secrecy_rate_for_partition(double ell, double task_bits, double bandwidth,
                                  double block_time);

struct PowerPair {
  double p_m = 0.0;
  double p_n = 0.0;
};

/// Minimum powers meeting both outage constraints with equality at a fixed
/// partition. Throws InfeasiblePartition when a denominator is nonpositive.
PowerPair optimal_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                         const SystemParams& params);

/// Same closed form under explicit thresholds (zero thresholds model the
/// eavesdropper-free design).
PowerPair optimal_powers(double ell_m, double ell_n, const ChannelRealization& ch,
                         const SystemParams& params, const OutageThresholds& thresholds);

/// Codeword rates at AP capacity for the given powers.
struct CodewordRates {
  double rt_m = 0.0;
  double rt_n = 0.0;
};

CodewordRates codeword_rates(double p_m, double p_n, const ChannelRealization& ch);

/// Exact feasibility test: both power denominators at the largest local
/// shares, where the required rates (and user m's interference) are smallest.
Verdict check_feasibility_p1(const ChannelRealization& ch, const SystemParams& params);
Verdict check_feasibility_p1(const ChannelRealization& ch, const SystemParams& params,
                             const OutageThresholds& thresholds);

/// Weighted sum energy minimization. Throws InfeasibleProblem when
/// check_feasibility_p1 fails.
Solution solve_p1(const ChannelRealization& ch, const SystemParams& params,
                  const PartitionSearch& search = {});

Solution solve_p1(const ChannelRealization& ch, const SystemParams& params,
                  const OutageThresholds& thresholds, const PartitionSearch& search = {});

/// Closed-form inner solution at a fixed partition, packaged as a Solution.
/// Throws InfeasiblePartition. Outage probabilities are filled in only when
/// `with_outage` is set.
Solution solution_at_partition(double ell_m, double ell_n, const ChannelRealization& ch,
                               const SystemParams& params, const OutageThresholds& thresholds,
                               bool with_outage = true);

/// Objective value at a partition, +inf where the partition is infeasible.
double p1_objective(double ell_m, double ell_n, const ChannelRealization& ch,
                    const SystemParams& params, const OutageThresholds& thresholds);

}  // namespace secnoma
