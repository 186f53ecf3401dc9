#pragma once

#include <variant>

#include "secnoma/energy_min.hpp"
#include "secnoma/outage_min.hpp"

namespace secnoma {

enum class Objective { energy, outage };

/// Secure NOMA with every bit offloaded (both local shares pinned at zero).
/// Energy: throws InfeasiblePartition like optimal_powers.
Solution solve_full_offloading_energy(const ChannelRealization& ch, const SystemParams& params);
/// Outage: the whole budget goes to transmission.
OutageSolution solve_full_offloading_outage(const ChannelRealization& ch,
                                            const SystemParams& params);
std::variant<Solution, OutageSolution> solve_full_offloading(const ChannelRealization& ch,
                                                             const SystemParams& params,
                                                             Objective objective);

/// Power that meets a single-user outage constraint with equality at
/// confidential rate `rs`: (2^rs - 1) / (gamma - threshold * 2^rs); +inf when
/// the denominator is nonpositive.
double single_user_secure_power(double rs, double gamma, double threshold);

struct OmaUser {
  double ell = 0.0;
  double power = 0.0;
  RatePair rates;
  double energy = 0.0;  ///< local + slot transmission, circuit power while transmitting
  double x = 0.0;       ///< outage exponent (outage objective only)
  double outage = 0.0;  ///< outage probability (outage objective only)
};

/// TDMA baseline: user m transmits for tau_m * T, user n for the rest; local
/// computing runs over the whole block for both.
struct OmaSolution {
  double tau_m = 0.5;
  OmaUser m;
  OmaUser n;
  double weighted_energy = 0.0;
  Verdict verdict;

  double tau_n() const { return 1.0 - tau_m; }
  const OmaUser& user(UserId u) const { return u == UserId::m ? m : n; }
};

/// Best weighted energy of one user offloading alone in a slot of length
/// tau * T, over its partition. value = +inf when infeasible.
Minimum oma_user_energy(UserId user, double tau, const ChannelRealization& ch,
                        const SystemParams& params, const PartitionSearch& search = {});

/// Weighted OMA energy at a fixed slot split; +inf when either user is infeasible.
double oma_energy_at(double tau_m, const ChannelRealization& ch, const SystemParams& params,
                     const PartitionSearch& search = {});

/// Energy objective with the slot split optimized over [0.01, 0.99].
/// Throws InfeasiblePartition when no split admits both users.
OmaSolution solve_oma_energy(const ChannelRealization& ch, const SystemParams& params,
                             const PartitionSearch& search = {});

/// Outage objective with equal slots, full local shares, budgets exhausted.
/// Throws InfeasibleProblem when a budget does not cover the local share.
OmaSolution solve_oma_outage(const ChannelRealization& ch, const SystemParams& params);

OmaSolution solve_oma(const ChannelRealization& ch, const SystemParams& params,
                      Objective objective);

/// Conventional design without an eavesdropper: the energy problem with the
/// outage constraints dropped. Outage fields stay empty.
Solution solve_no_eavesdropper(const ChannelRealization& ch, const SystemParams& params,
                               const PartitionSearch& search = {});

}  // namespace secnoma
