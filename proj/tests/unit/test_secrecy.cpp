#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "secnoma/secrecy.hpp"

using namespace secnoma;
using doctest::Approx;

namespace {

const SystemParams kParams = default_params();

ChannelRealization channel(double gm, double gn) { return make_channel(gm, gn, kParams); }

}  // namespace

TEST_CASE("outage threshold") {
  const double a = outage_threshold(0.1, 1e-10, 100.0, 4.0);
  CHECK(a == Approx(std::log(10.0) / 1e-2).epsilon(1e-12));
  CHECK(a == Approx(230.2585).epsilon(1e-6));
  CHECK(outage_threshold(1.0 - 1e-15, 1e-10, 100.0, 4.0) < 1e-10);
  CHECK(outage_threshold(0.1, 1e-10, 100.0 * std::pow(2.0, 0.25), 4.0) == Approx(a / 2));
  const OutageThresholds t = outage_thresholds(kParams);
  CHECK(t.user_m == Approx(a));
  CHECK(t.user_n == Approx(a));
}

TEST_CASE("user m closed form") {
  const ChannelRealization ch = channel(300.0, 900.0);
  // Zero redundancy.
  const double p = 0.02;
  CHECK(outage_prob_m(p, std::log2(1.0 + 300.0 * p), ch, kParams) == 1.0);
  // rs = 0: phi = gamma * noise for every power.
  CHECK(outage_prob_m(1e6, 0.0, ch, kParams) == Approx(std::exp(-3.0)).epsilon(1e-9));
  // Constraint met with equality gives eps.
  const double rs = 0.3;
  const double a = outage_threshold(0.1, 1e-10, 100.0, 4.0);
  const double pm = (std::exp2(rs) - 1.0) / (300.0 - a * std::exp2(rs));
  CHECK(outage_prob_m(pm, rs, ch, kParams) == Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(outage_prob_m(0.0, rs, ch, kParams), NonPositivePower);
}

TEST_CASE("user n closed form") {
  const ChannelRealization ch = channel(300.0, 900.0);
  const ChannelRealization swapped = channel(900.0, 900.0);
  CHECK(outage_prob_n(0.0, 0.05, 0.7, ch, kParams) ==
        Approx(outage_prob_m(0.05, 0.7, swapped, kParams)).epsilon(1e-12));
  const double pn = 0.05, pm = 0.01;
  const double sinr = 900.0 * pn / (1.0 + 300.0 * pm);
  CHECK(outage_prob_n(pm, pn, std::log2(1.0 + sinr), ch, kParams) == 1.0);
  double prev = 0.0;
  for (double big : {10.0, 1e3, 1e6}) {
    const double v = outage_prob_n(big, pn, 0.0, ch, kParams);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 0.999);
  CHECK_THROWS_AS(outage_prob_n(0.1, 0.0, 0.4, ch, kParams), NonPositivePower);
  CHECK_THROWS_AS(outage_prob_n(-0.1, 0.1, 0.4, ch, kParams), NonPositivePower);
}

TEST_CASE("monotonicity and range") {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double gm = 50.0 + 2000.0 * rng.uniform();
    const double gn = gm + 2000.0 * rng.uniform();
    const ChannelRealization ch = channel(gm, gn);
    const double pm = 0.001 + rng.uniform();
    const double pn = 0.001 + rng.uniform();
    const double rs = 2.0 * rng.uniform();
    const double om = outage_prob_m(pm, rs, ch, kParams);
    const double on = outage_prob_n(pm, pn, rs, ch, kParams);
    CHECK(om >= 0.0);
    CHECK(om <= 1.0);
    CHECK(on >= 0.0);
    CHECK(on <= 1.0);
    const double h = 1e-6;
    if (om < 1.0 && om > 1e-300) {
      CHECK(outage_prob_m(pm * (1 + h), rs, ch, kParams) < om);
      CHECK(outage_prob_m(pm, rs + h, ch, kParams) > om);
    }
    if (on < 1.0 && on > 1e-300) CHECK(outage_prob_n(pm * (1 + h), pn, rs, ch, kParams) > on);
  }
}

TEST_CASE("constraint slack") {
  const ChannelRealization ch = channel(400.0, 1200.0);
  CHECK(constraint_slack(0.3, 0.2, 0.0, 0.5, ch).user_m == Approx(400.0));
  const double a = outage_threshold(0.1, 1e-10, 100.0, 4.0);
  const double rs = 0.5;
  const double pm = (std::exp2(rs) - 1.0) / (400.0 - a * std::exp2(rs));
  CHECK(constraint_slack(pm, 0.1, rs, 0.5, ch).user_m == Approx(a).epsilon(1e-9));
  for (double p = 0.01; p < 5.0; p *= 1.7) {
    const double g = constraint_slack(p, 0.1, 0.4, 0.6, ch).user_n;
    CHECK(constraint_slack(p * 1.001, 0.1, 0.4, 0.6, ch).user_n < g);
  }
  CHECK_THROWS_AS(constraint_slack(0.0, 0.1, 0.4, 0.6, ch), NonPositivePower);
}

TEST_CASE("closed forms match the slack functions") {
  // Same inequality in two forms, checked away from the boundary.
  Rng rng(17);
  const double a = outage_threshold(kParams.outage_eps, kParams.noise_eve, 100.0, 4.0);
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const double gm = 50.0 + 3000.0 * rng.uniform();
    const double gn = gm + 3000.0 * rng.uniform();
    const ChannelRealization ch = channel(gm, gn);
    const double pm = std::exp(std::log(1e-4) + std::log(1e6) * rng.uniform());
    const double pn = std::exp(std::log(1e-4) + std::log(1e6) * rng.uniform());
    const double rm = 3.0 * rng.uniform();
    const double rn = 3.0 * rng.uniform();
    const SecrecySlack s = constraint_slack(pm, pn, rm, rn, ch);
    if (std::abs(s.user_m - a) > 1e-12 * a) {
      const bool closed = outage_prob_m(pm, rm, ch, kParams) <= kParams.outage_eps;
      if (closed != (s.user_m >= a)) ++disagreements;
    }
    if (std::abs(s.user_n - a) > 1e-12 * a) {
      const bool closed = outage_prob_n(pm, pn, rn, ch, kParams) <= kParams.outage_eps;
      if (closed != (s.user_n >= a)) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("empirical outage edge cases") {
  Rng rng(1);
  const OutageEstimate all = empirical_outage({0.8, 0.8}, 0.1, 100.0, kParams, 10000, rng);
  CHECK(all.estimate == 1.0);
  CHECK(all.std_error == 0.0);
  const OutageEstimate none = empirical_outage({1.0, 0.4}, 0.0, 100.0, kParams, 10000, rng);
  CHECK(none.estimate == 0.0);
  CHECK(none.draws == 10000);
}

TEST_CASE("empirical outage matches the closed form") {
  Rng rng(2024);
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const double gm = 200.0 + 2000.0 * rng.uniform();
    const ChannelRealization ch = channel(gm, gm * 2);
    const double p = 0.005 + 0.2 * rng.uniform();
    const double rs = 1.5 * rng.uniform();
    const double closed = outage_prob_m(p, rs, ch, kParams);
    const RatePair rates{std::log2(1.0 + gm * p), rs};
    const OutageEstimate e = empirical_outage(rates, p, 100.0, kParams, 100000, rng);
    double se = e.std_error;
    if (se == 0.0) se = std::sqrt(closed * (1 - closed) / 1e5);
    if (std::abs(e.estimate - closed) > 3 * se) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("empirical outage is independent of the thread count") {
  Rng a(99), b(99);
  const RatePair rates{1.2, 0.3};
  const OutageEstimate s = empirical_outage(rates, 0.05, 100.0, kParams, 300000, a, 1);
  const OutageEstimate t = empirical_outage(rates, 0.05, 100.0, kParams, 300000, b, 4);
  CHECK(s.outages == t.outages);
  CHECK(s.estimate == t.estimate);
}
