#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "secnoma/system_model.hpp"

using namespace secnoma;
using doctest::Approx;

TEST_CASE("dbm conversion") {
  // 10^((x - 30) / 10) evaluated by hand.
  CHECK(dbm_to_watts(-70.0) == Approx(1e-10).epsilon(1e-12));
  CHECK(dbm_to_watts(0.0) == Approx(1e-3).epsilon(1e-12));
  CHECK(dbm_to_watts(30.0) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reference parameters") {
  const SystemParams p = default_params();
  CHECK(p.bandwidth == 1e6);
  CHECK(p.block_time == 0.1);
  CHECK(p.pathloss_exp == 4.0);
  CHECK(p.noise_ap == Approx(dbm_to_watts(-70.0)).epsilon(1e-12));
  CHECK(p.outage_eps == 0.1);
  for (const UserParams* u : {&p.user_m, &p.user_n}) {
    CHECK(u->task_bits == 2e5);
    CHECK(u->max_local_bits == 1.6e5);
    CHECK(u->cycles_per_bit == 1e3);
    CHECK(u->capacitance_coeff == 1e-28);
    CHECK(u->distance_ap == 60.0);
    CHECK(u->distance_eve == 100.0);
    CHECK(u->circuit_power == 0.0);
  }
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("validation rejects out-of-range fields") {
  SystemParams p = default_params();
  p.outage_eps = 1.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = default_params();
  p.user_n.max_local_bits = p.user_n.task_bits;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = default_params();
  p.user_m.energy_budget = 0.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = default_params();
  p.user_m.circuit_power = -1.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
}

TEST_CASE("channel sampling") {
  const SystemParams p = default_params();
  Rng rng(11);
  const int n = 1000000;
  double sum = 0.0;
  const double scale = std::pow(60.0, -4.0) / 1e-10;
  bool ordered = true;
  for (int i = 0; i < n / 2; ++i) {
    const ChannelRealization ch = sample_channels(p, rng);
    ordered = ordered && ch.gamma_ap_m <= ch.gamma_ap_n;
    sum += ch.gamma_ap_m + ch.gamma_ap_n;
  }
  CHECK(ordered);
  // Sum of both users is order-free, so its mean is the unordered mean.
  const double mean_g = sum / n / scale;
  CHECK(mean_g >= 0.995);
  CHECK(mean_g <= 1.005);
  CHECK(scale == Approx(771.6).epsilon(1e-4));

  const ChannelRealization ch = sample_channels(p, rng);
  CHECK(ch.mean_eve_gain_m == Approx(1e-8).epsilon(1e-12));
  CHECK(ch.mean_eve_gain_n == Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("sampling is reproducible per seed") {
  const SystemParams p = default_params();
  Rng a(derive_seed(3, 9)), b(derive_seed(3, 9));
  for (int i = 0; i < 100; ++i) {
    const auto x = sample_channels(p, a);
    const auto y = sample_channels(p, b);
    CHECK(x.gamma_ap_m == y.gamma_ap_m);
    CHECK(x.gamma_ap_n == y.gamma_ap_n);
  }
}

TEST_CASE("ap sinr") {
  const ChannelRealization ch = make_channel(1.0, 1.0, default_params());
  const ApSinr s = sinr_ap(1.0, 1.0, ch);
  CHECK(s.user_n == Approx(0.5));
  CHECK(s.user_m == Approx(1.0));
  CHECK(sinr_ap(0.0, 2.0, ch).user_n == Approx(2.0));
  CHECK(sinr_ap(1.0, 0.0, ch).user_n == 0.0);

  const ChannelRealization c2 = make_channel(300.0, 900.0, default_params());
  double prev = sinr_ap(0.0, 0.1, c2).user_n;
  for (double pm = 0.01; pm < 10.0; pm *= 2.0) {
    const ApSinr v = sinr_ap(pm, 0.1, c2);
    CHECK(v.user_n <= prev);
    CHECK(v.user_m == sinr_ap(pm, 5.0, c2).user_m);
    prev = v.user_n;
  }
}

TEST_CASE("capacity") {
  CHECK(capacity_ap(0.0) == 0.0);
  CHECK(capacity_ap(1.0) == Approx(1.0));
  CHECK(capacity_ap(3.0) == Approx(2.0));
}

TEST_CASE("local computing") {
  const UserParams u;
  CHECK(optimal_cpu_frequency(0.0, 1e3, 0.1) == 0.0);
  CHECK(optimal_cpu_frequency(1.6e5, 1e3, 0.1) == Approx(1.6e9));
  CHECK(optimal_cpu_frequency(3.2e5, 1e3, 0.1) ==
        Approx(2.0 * optimal_cpu_frequency(1.6e5, 1e3, 0.1)));

  // Independent check: c*ell cycles, each costing capacitance * f^2.
  auto per_cycle = [&](double ell) {
    const double f = u.cycles_per_bit * ell / 0.1;
    return u.cycles_per_bit * ell * u.capacitance_coeff * f * f;
  };
  CHECK(local_energy(0.0, u, 0.1) == 0.0);
  CHECK(local_energy(1.6e5, u, 0.1) == Approx(4.096e-2).epsilon(1e-12));
  CHECK(local_energy(1.6e5, u, 0.1) == Approx(per_cycle(1.6e5)).epsilon(1e-12));
  CHECK(local_energy(2e5, u, 0.1) == Approx(8.0e-2).epsilon(1e-12));
  CHECK(local_energy(2e5, u, 0.1) == Approx(per_cycle(2e5)).epsilon(1e-12));

  for (double a = 0.0; a < 2e5; a += 3.7e4) {
    const double b = a + 1.1e4;
    CHECK(local_energy((a + b) / 2, u, 0.1) <
          (local_energy(a, u, 0.1) + local_energy(b, u, 0.1)) / 2);
  }
}

TEST_CASE("offload energy") {
  CHECK(offload_energy(0.0, 0.0, 0.1) == 0.0);
  CHECK(offload_energy(5.0904, 0.0, 0.1) == Approx(0.50904));
  CHECK(offload_energy(1.0, 0.1, 0.1) == Approx(0.11));
}
