#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secnoma/experiments.hpp"

using namespace secnoma;

namespace {

SweepConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string csv(const SweepResult& r) {
  std::ostringstream s;
  write_csv(r, s);
  return s.str();
}

const char* kSmall =
    "scenario = p1_energy\n"
    "swept_param = task_bits\n"
    "grid = 1e5, 2e5, 3e5\n"
    "n_realizations = 12\n"
    "master_seed = 77\n"
    "schemes = proposed, oma\n";

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig c = parse(
      "# comment line\n"
      "scenario = p2_outage   # trailing comment\n"
      "swept_param = energy_budget\n"
      "grid = 0.2, 0.4,0.6\n"
      "n_realizations = 5\n"
      "master_seed = 18446744073709551615\n"
      "schemes = proposed, oma\n"
      "distance_eve = 120\n"
      "n.energy_weight = 2\n"
      "noise_eve_dbm = -60\n");
  CHECK(c.scenario == Scenario::p2_outage);
  CHECK(c.swept_param == SweptParam::energy_budget);
  CHECK(c.grid == std::vector<double>{0.2, 0.4, 0.6});
  CHECK(c.n_realizations == 5);
  CHECK(c.master_seed == 18446744073709551615ull);
  CHECK(c.schemes == std::vector<Scheme>{Scheme::proposed, Scheme::oma});
  CHECK(c.base.user_m.distance_eve == 120.0);
  CHECK(c.base.user_n.distance_eve == 120.0);
  CHECK(c.base.user_m.energy_weight == 1.0);
  CHECK(c.base.user_n.energy_weight == 2.0);
  CHECK(c.base.noise_eve == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse("grid = 1e5\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 1e5, x\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 2e5, 1e5\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 1e5\nn_realizations = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 1e5\nscenario = p3\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 1e5\nno equals sign\n"), ConfigError);
  CHECK_THROWS_AS(parse("scenario = p2_outage\ngrid = 0.5\nswept_param = energy_budget\n"
                        "schemes = no_eve\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("swept_param = outage_eps\ngrid = 0.5, 1.0\n"), ConfigError);
  CHECK_THROWS_AS(parse(""), ConfigError);
  CHECK_THROWS_AS(load_sweep_config("/nonexistent/x.cfg"), ConfigError);
}

TEST_CASE("task size sweeps scale the local cap") {
  const SweepConfig c = parse(kSmall);
  const SystemParams p = params_at(c, 3e5);
  CHECK(p.user_m.task_bits == 3e5);
  CHECK(p.user_n.max_local_bits == 0.8 * 3e5);
}

TEST_CASE("sweep rows and pairing") {
  const SweepConfig c = parse(kSmall);
  const SweepResult r = run_sweep(c);
  REQUIRE(r.rows.size() == 6);
  for (const SweepRow& row : r.rows) {
    CHECK(row.infeasible_frac >= 0.0);
    CHECK(row.infeasible_frac <= 1.0);
    CHECK(row.n_effective + std::lround(row.infeasible_frac * 12) == 12);
  }
  // Realization 3 at the second grid value sees the channel drawn from its own stream.
  const SystemParams p = params_at(c, 2e5);
  Rng rng(derive_seed(77, 3));
  const ChannelRealization ch = sample_channels(p, rng);
  const Outcome direct = evaluate_scheme(Scenario::p1_energy, Scheme::proposed, ch, p);
  const Outcome& stored = r.outcome(1, 0, 3);
  CHECK(direct.feasible == stored.feasible);
  if (direct.feasible) CHECK(direct.metric_sum == stored.metric_sum);
}

TEST_CASE("sweeps are deterministic across runs and thread counts") {
  const SweepConfig c = parse(kSmall);
  const std::string a = csv(run_sweep(c, 1));
  CHECK(a == csv(run_sweep(c, 1)));
  CHECK(a == csv(run_sweep(c, 3)));
}

TEST_CASE("outage sweeps") {
  const SweepConfig c = parse(
      "scenario = p2_outage\nswept_param = energy_budget\ngrid = 0.3, 0.55\n"
      "n_realizations = 20\nschemes = proposed, full_offload, oma\n");
  const SweepResult r = run_sweep(c);
  for (const SweepRow& row : r.rows) {
    CHECK(row.n_effective == 20);
    CHECK(row.metric_sum == doctest::Approx(row.metric_m + row.metric_n));
  }
}

TEST_CASE("csv emission") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "secnoma_test_empty.csv").string();
  emit_csv(SweepResult{}, path);
  CHECK(slurp(path) == "param,scheme,metric_m,metric_n,metric_sum,infeasible_frac,n_effective\n");

  const SweepResult r = run_sweep(parse(kSmall));
  const std::string p1 = (dir / "secnoma_test_a.csv").string();
  const std::string p2 = (dir / "secnoma_test_b.csv").string();
  emit_csv(r, p1);
  emit_csv(r, p2);
  const std::string text = slurp(p1);
  CHECK(text == slurp(p2));
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(text.back() == '\n');
  CHECK_THROWS_AS(emit_csv(r, "/nonexistent/dir/out.csv"), IoError);
}

TEST_CASE("round-trip number format") {
  for (double v : {0.1, 1.0 / 3.0, 5.0904, 1e-300, 6e5}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("seed override from the environment") {
  ::unsetenv(kSeedEnvVar);
  CHECK_FALSE(seed_from_env().has_value());
  ::setenv(kSeedEnvVar, "1234", 1);
  CHECK(*seed_from_env() == 1234u);
  ::setenv(kSeedEnvVar, "abc", 1);
  CHECK_THROWS_AS(seed_from_env(), ConfigError);
  ::unsetenv(kSeedEnvVar);
}
