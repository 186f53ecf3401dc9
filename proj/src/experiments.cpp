#include "secnoma/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "secnoma/parallel.hpp"

namespace secnoma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ConfigError("key '" + key + "': not a finite number: '" + text + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("key '" + key + "': not an unsigned integer: '" + text + "'");
  return v;
}

template <class E>
E parse_enum(const std::string& key, const std::string& text, std::initializer_list<E> values) {
  for (E v : values)
    if (text == to_string(v)) return v;
  throw ConfigError("key '" + key + "': unknown value '" + text + "'");
}

using UserField = double UserParams::*;

const std::map<std::string, UserField>& user_fields() {
  static const std::map<std::string, UserField> fields{
      {"task_bits", &UserParams::task_bits},
      {"max_local_bits", &UserParams::max_local_bits},
      {"cycles_per_bit", &UserParams::cycles_per_bit},
      {"capacitance_coeff", &UserParams::capacitance_coeff},
      {"energy_weight", &UserParams::energy_weight},
      {"energy_budget", &UserParams::energy_budget},
      {"circuit_power", &UserParams::circuit_power},
      {"distance_ap", &UserParams::distance_ap},
      {"distance_eve", &UserParams::distance_eve},
  };
  return fields;
}

}  // namespace

const char* to_string(Scenario s) {
  return s == Scenario::p1_energy ? "p1_energy" : "p2_outage";
}

const char* to_string(SweptParam p) {
  switch (p) {
    case SweptParam::task_bits: return "task_bits";
    case SweptParam::eve_distance: return "eve_distance";
    case SweptParam::outage_eps: return "outage_eps";
    case SweptParam::energy_budget: return "energy_budget";
  }
  return "?";
}

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::proposed: return "proposed";
    case Scheme::full_offload: return "full_offload";
    case Scheme::oma: return "oma";
    case Scheme::no_eve: return "no_eve";
  }
  return "?";
}

void apply_config_entry(SweepConfig& c, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    c.scenario = parse_enum(key, value, {Scenario::p1_energy, Scenario::p2_outage});
  } else if (key == "swept_param") {
    c.swept_param = parse_enum(key, value,
                               {SweptParam::task_bits, SweptParam::eve_distance,
                                SweptParam::outage_eps, SweptParam::energy_budget});
  } else if (key == "grid") {
    c.grid.clear();
    for (const auto& item : split_list(value)) c.grid.push_back(parse_double(key, item));
  } else if (key == "n_realizations") {
    c.n_realizations = static_cast<std::size_t>(parse_u64(key, value));
  } else if (key == "master_seed") {
    c.master_seed = parse_u64(key, value);
  } else if (key == "schemes") {
    c.schemes.clear();
    for (const auto& item : split_list(value))
      c.schemes.push_back(parse_enum(
          key, item, {Scheme::proposed, Scheme::full_offload, Scheme::oma, Scheme::no_eve}));
  } else if (key == "bandwidth") {
    c.base.bandwidth = parse_double(key, value);
  } else if (key == "block_time") {
    c.base.block_time = parse_double(key, value);
  } else if (key == "pathloss_exp") {
    c.base.pathloss_exp = parse_double(key, value);
  } else if (key == "noise_ap_dbm") {
    c.base.noise_ap = dbm_to_watts(parse_double(key, value));
  } else if (key == "noise_eve_dbm") {
    c.base.noise_eve = dbm_to_watts(parse_double(key, value));
  } else if (key == "outage_eps") {
    c.base.outage_eps = parse_double(key, value);
  } else {
    std::string field = key;
    std::vector<UserParams*> targets{&c.base.user_m, &c.base.user_n};
    if (key.rfind("m.", 0) == 0) {
      field = key.substr(2);
      targets = {&c.base.user_m};
    } else if (key.rfind("n.", 0) == 0) {
      field = key.substr(2);
      targets = {&c.base.user_n};
    }
    const auto it = user_fields().find(field);
    if (it == user_fields().end()) throw ConfigError("unknown key '" + key + "'");
    const double v = parse_double(key, value);
    for (UserParams* u : targets) u->*(it->second) = v;
  }
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig c;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    try {
      apply_config_entry(c, key, trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  validate(c);
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_sweep_config(in);
}

void validate(const SweepConfig& c) {
  if (c.grid.empty()) throw ConfigError("grid must not be empty");
  for (std::size_t i = 1; i < c.grid.size(); ++i)
    if (!(c.grid[i] > c.grid[i - 1])) throw ConfigError("grid must be strictly increasing");
  if (c.n_realizations < 1) throw ConfigError("n_realizations must be at least 1");
  if (c.schemes.empty()) throw ConfigError("schemes must not be empty");
  for (Scheme s : c.schemes)
    if (c.scenario == Scenario::p2_outage && s == Scheme::no_eve)
      throw ConfigError("scheme no_eve has no outage metric");
  for (double v : c.grid) validate(params_at(c, v));
}

SystemParams params_at(const SweepConfig& c, double value) {
  SystemParams p = c.base;
  switch (c.swept_param) {
    case SweptParam::task_bits:
      for (UserParams* u : {&p.user_m, &p.user_n}) {
        u->task_bits = value;
        u->max_local_bits = 0.8 * value;
      }
      break;
    case SweptParam::eve_distance:
      p.user_m.distance_eve = p.user_n.distance_eve = value;
      break;
    case SweptParam::outage_eps:
      p.outage_eps = value;
      break;
    case SweptParam::energy_budget:
      p.user_m.energy_budget = p.user_n.energy_budget = value;
      break;
  }
  return p;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* text = std::getenv(kSeedEnvVar);
  if (text == nullptr) return std::nullopt;
  return parse_u64(kSeedEnvVar, trim(text));
}

Outcome evaluate_scheme(Scenario scenario, Scheme scheme, const ChannelRealization& ch,
                        const SystemParams& params) {
  Outcome o;
  try {
    if (scenario == Scenario::p1_energy) {
      if (scheme == Scheme::oma) {
        const OmaSolution s = solve_oma_energy(ch, params);
        o = {true, s.m.energy, s.n.energy, s.weighted_energy};
      } else {
        const Solution s = scheme == Scheme::proposed       ? solve_p1(ch, params)
                           : scheme == Scheme::full_offload ? solve_full_offloading_energy(ch, params)
                                                            : solve_no_eavesdropper(ch, params);
        o = {true, s.energy_m, s.energy_n, s.weighted_energy};
      }
    } else {
      if (scheme == Scheme::no_eve) throw ConfigError("scheme no_eve has no outage metric");
      if (scheme == Scheme::oma) {
        const OmaSolution s = solve_oma_outage(ch, params);
        o = {true, s.m.outage, s.n.outage, s.m.outage + s.n.outage};
      } else {
        const OutageSolution s = scheme == Scheme::proposed ? solve_p2(ch, params)
                                                            : solve_full_offloading_outage(ch, params);
        o = {true, s.outage_m, s.outage_n, s.outage_m + s.outage_n};
      }
    }
  } catch (const InfeasibleProblem&) {
    o = {};
  } catch (const InfeasiblePartition&) {
    o = {};
  }
  return o;
}

SweepResult run_sweep(const SweepConfig& config, unsigned threads) {
  validate(config);
  SweepResult r;
  r.grid = config.grid;
  r.schemes = config.schemes;
  r.n_realizations = config.n_realizations;
  const std::size_t G = r.grid.size();
  const std::size_t S = r.schemes.size();
  const std::size_t N = r.n_realizations;
  r.outcomes.resize(G * S * N);

  std::vector<SystemParams> params(G);
  for (std::size_t g = 0; g < G; ++g) params[g] = params_at(config, r.grid[g]);

  parallel_for(N, threads, [&](std::size_t i) {
    for (std::size_t g = 0; g < G; ++g) {
      // Same stream per realization: channel draws do not depend on the grid value.
      Rng rng(derive_seed(config.master_seed, i));
      const ChannelRealization ch = sample_channels(params[g], rng);
      for (std::size_t s = 0; s < S; ++s)
        r.outcomes[(g * S + s) * N + i] =
            evaluate_scheme(config.scenario, r.schemes[s], ch, params[g]);
    }
  });

  for (std::size_t g = 0; g < G; ++g) {
    for (std::size_t s = 0; s < S; ++s) {
      SweepRow row;
      row.param = r.grid[g];
      row.scheme = r.schemes[s];
      double sm = 0.0, sn = 0.0, ss = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const Outcome& o = r.outcome(g, s, i);
        if (!o.feasible) continue;
        ++row.n_effective;
        sm += o.metric_m;
        sn += o.metric_n;
        ss += o.metric_sum;
      }
      const double n = static_cast<double>(row.n_effective);
      row.metric_m = row.n_effective ? sm / n : kNaN;
      row.metric_n = row.n_effective ? sn / n : kNaN;
      row.metric_sum = row.n_effective ? ss / n : kNaN;
      row.infeasible_frac = static_cast<double>(N - row.n_effective) / static_cast<double>(N);
      r.rows.push_back(row);
    }
  }
  return r;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "param,scheme,metric_m,metric_n,metric_sum,infeasible_frac,n_effective\n";
  for (const SweepRow& row : result.rows) {
    out << format_double(row.param) << ',' << to_string(row.scheme) << ','
        << format_double(row.metric_m) << ',' << format_double(row.metric_n) << ','
        << format_double(row.metric_sum) << ',' << format_double(row.infeasible_frac) << ','
        << row.n_effective << '\n';
  }
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(result, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace secnoma
