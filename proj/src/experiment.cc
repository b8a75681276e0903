/*
Copyright 2026 The swipt-cj Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "swipt/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "swipt/dual.h"

namespace swipt {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double ParseNumber(std::string_view s, int line) {
  const std::string str(Trim(s));
  if (str.empty()) throw ConfigError(line, "expected a number");
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (end != str.c_str() + str.size() || !std::isfinite(v))
    throw ConfigError(line, "not a number: '" + str + "'");
  return v;
}

long long ParseInteger(std::string_view s, int line) {
  const double v = ParseNumber(s, line);
  if (v != std::floor(v) || std::abs(v) > 9.0e15)
    throw ConfigError(line, "expected an integer: '" + std::string(Trim(s)) +
                                "'");
  return static_cast<long long>(v);
}

std::vector<double> ParseList(std::string_view s, int line) {
  std::vector<double> out;
  for (std::string_view item : Split(s, ',')) out.push_back(ParseNumber(item, line));
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SWIPT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

const char* ToString(SweepKind k) {
  switch (k) {
    case SweepKind::kQbar:
      return "qbar";
    case SweepKind::kPower:
      return "p";
    case SweepKind::kD1:
      return "d1";
    case SweepKind::kPowerD1:
      return "p_d1";
  }
  return "unknown";
}

SweepKind ParseSweepKind(std::string_view name) {
  if (name == "qbar") return SweepKind::kQbar;
  if (name == "p") return SweepKind::kPower;
  if (name == "d1") return SweepKind::kD1;
  if (name == "p_d1") return SweepKind::kPowerD1;
  throw ConfigError(0, "unknown sweep '" + std::string(name) +
                           "' (expected qbar, p, d1 or p_d1)");
}

Scheme ParseScheme(std::string_view name) {
  for (Scheme s : {Scheme::kProposed, Scheme::kEpa, Scheme::kNoJammer,
                   Scheme::kNoCancelBcd}) {
    if (name == ToString(s)) return s;
  }
  throw ConfigError(0, "unknown scheme '" + std::string(name) + "'");
}

void ExperimentConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(0, what);
  };
  require(n_sc >= 1, "n_sc must be >= 1");
  require(trials >= 1, "trials must be >= 1");
  require(ploss_exp > 0, "ploss_exp must be > 0");
  require(d_tx_ir_m > 0 && d_tx_er_m > 0, "distances must be > 0");
  require(d1_m > 0 && d1_m < d_tx_ir_m, "d1_m must lie in (0, d_tx_ir_m)");
  require(qbar_uw >= 0, "qbar_uw must be >= 0");
  require(peak_factor > 0, "peak_factor must be > 0");
  require(zeta > 0 && zeta <= 1, "zeta must lie in (0, 1]");
  require(max_iterations >= 1, "max_iterations must be >= 1");
  require(!schemes.empty(), "schemes must not be empty");
  require(!qbar_list.empty() && !p_dbm_list.empty() && !d1_list.empty(),
          "sweep lists must not be empty");
  for (double q : qbar_list) require(q >= 0, "qbar_list entries must be >= 0");
  for (double d : d1_list)
    require(d > 0 && d < d_tx_ir_m, "d1_list entries must lie in (0, d_tx_ir_m)");
}

SystemParams ExperimentConfig::ParamsFor(double p_dbm_v, double qbar_uw_v) const {
  SystemParams p;
  p.n_sc = n_sc;
  p.total_power_w = dbm_to_watts(p_dbm_v);
  p.noise_w = dbm_to_watts(sigma2_dbm);
  p.peak_p_w = peak_factor * p.total_power_w / static_cast<double>(n_sc);
  p.peak_q_w = p.peak_p_w;
  p.eh_min_w = qbar_uw_v * 1e-6;
  p.zeta = zeta;
  p.ploss_exp = ploss_exp;
  p.ref_gain = std::pow(10.0, ref_gain_db / 10.0);
  return p;
}

GeometrySpec ExperimentConfig::Geometry() const {
  return {d_tx_ir_m, d_tx_er_m, er_angle_deg};
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, "expected 'key = value'");
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key");
    if (value.empty()) throw ConfigError(line_no, "missing value for " + key);

    try {
      if (key == "n_sc") {
        const long long n = ParseInteger(value, line_no);
        if (n < 1) throw ConfigError(line_no, "n_sc must be >= 1");
        cfg.n_sc = static_cast<std::size_t>(n);
      } else if (key == "sigma2_dbm") {
        cfg.sigma2_dbm = ParseNumber(value, line_no);
      } else if (key == "ploss_exp") {
        cfg.ploss_exp = ParseNumber(value, line_no);
      } else if (key == "d_tx_ir_m") {
        cfg.d_tx_ir_m = ParseNumber(value, line_no);
      } else if (key == "d_tx_er_m") {
        cfg.d_tx_er_m = ParseNumber(value, line_no);
      } else if (key == "er_angle_deg") {
        cfg.er_angle_deg = ParseNumber(value, line_no);
      } else if (key == "d1_m") {
        cfg.d1_m = ParseNumber(value, line_no);
      } else if (key == "p_dbm") {
        cfg.p_dbm = ParseNumber(value, line_no);
      } else if (key == "qbar_uw") {
        cfg.qbar_uw = ParseNumber(value, line_no);
      } else if (key == "peak_factor") {
        cfg.peak_factor = ParseNumber(value, line_no);
      } else if (key == "zeta") {
        cfg.zeta = ParseNumber(value, line_no);
      } else if (key == "ref_gain_db") {
        cfg.ref_gain_db = ParseNumber(value, line_no);
      } else if (key == "seed") {
        const long long s = ParseInteger(value, line_no);
        if (s < 0) throw ConfigError(line_no, "seed must be >= 0");
        cfg.seed = static_cast<std::uint64_t>(s);
      } else if (key == "trials") {
        const long long t = ParseInteger(value, line_no);
        if (t < 1 || t > 1000000)
          throw ConfigError(line_no, "trials must lie in [1, 1e6]");
        cfg.trials = static_cast<int>(t);
      } else if (key == "max_iterations") {
        const long long t = ParseInteger(value, line_no);
        if (t < 1 || t > 1000000)
          throw ConfigError(line_no, "max_iterations must lie in [1, 1e6]");
        cfg.max_iterations = static_cast<int>(t);
      } else if (key == "fading") {
        if (value == "none") {
          cfg.fading = FadingKind::kNone;
        } else if (value == "rayleigh") {
          cfg.fading = FadingKind::kRayleighUnitMean;
        } else {
          throw ConfigError(line_no, "fading must be none or rayleigh");
        }
      } else if (key == "sweep") {
        cfg.sweep = ParseSweepKind(value);
      } else if (key == "qbar_list") {
        cfg.qbar_list = ParseList(value, line_no);
      } else if (key == "p_dbm_list") {
        cfg.p_dbm_list = ParseList(value, line_no);
      } else if (key == "d1_list") {
        cfg.d1_list = ParseList(value, line_no);
      } else if (key == "schemes") {
        cfg.schemes.clear();
        for (std::string_view s : Split(value, ','))
          cfg.schemes.push_back(ParseScheme(Trim(s)));
      } else {
        throw ConfigError(line_no, "unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      if (e.line() > 0) throw;
      throw ConfigError(line_no, e.what());
    }
  }
  try {
    cfg.Validate();
  } catch (const ConfigError& e) {
    throw ConfigError(0, e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<SweepPoint> pts;
  switch (cfg.sweep) {
    case SweepKind::kQbar:
      for (double q : cfg.qbar_list)
        pts.push_back({"qbar_uw", q, cfg.p_dbm, q, cfg.d1_m});
      break;
    case SweepKind::kPower:
      for (double p : cfg.p_dbm_list)
        pts.push_back({"p_dbm", p, p, cfg.qbar_uw, cfg.d1_m});
      break;
    case SweepKind::kD1:
      for (double d : cfg.d1_list)
        pts.push_back({"d1_m", d, cfg.p_dbm, cfg.qbar_uw, d});
      break;
    case SweepKind::kPowerD1:
      for (double d : cfg.d1_list) {
        char name[64];
        std::snprintf(name, sizeof name, "p_dbm@d1=%g", d);
        for (double p : cfg.p_dbm_list)
          pts.push_back({name, p, p, cfg.qbar_uw, d});
      }
      break;
  }
  return pts;
}

ChannelState draw_channel(const ExperimentConfig& cfg, const SweepPoint& pt,
                          int trial) {
  const SystemParams params = cfg.ParamsFor(pt.p_dbm, pt.qbar_uw);
  const Geometry geom = node_positions(pt.d1_m, cfg.Geometry());
  return channel_gains(geom, FadingSpec{cfg.fading, cfg.seed}, params,
                       static_cast<std::uint64_t>(trial));
}

ResultRow solve_scheme(Scheme scheme, const ChannelState& ch,
                       const SystemParams& params, int max_iterations) {
  const auto t0 = std::chrono::steady_clock::now();
  ResultRow row;
  row.scheme = scheme;
  PowerAllocation alloc;
  SolverConfig scfg;
  scfg.max_iterations = max_iterations;
  switch (scheme) {
    case Scheme::kProposed: {
      SolveReport rep = ellipsoid_solve(ch, params, scfg);
      row.iterations = rep.iterations;
      alloc = std::move(rep.allocation);
      break;
    }
    case Scheme::kEpa: {
      BaselineResult r = epa_allocate(ch, params);
      alloc = std::move(r.allocation);
      break;
    }
    case Scheme::kNoJammer: {
      BaselineResult r = no_jammer_solve(ch, params, scfg);
      row.iterations = r.iterations;
      alloc = std::move(r.allocation);
      break;
    }
    case Scheme::kNoCancelBcd: {
      BcdConfig bcfg;
      bcfg.block = scfg;
      BaselineResult r = bcd_nocancel_solve(ch, params, bcfg);
      row.iterations = r.iterations;
      alloc = std::move(r.allocation);
      break;
    }
  }
  row.feasible = alloc.feasible;
  row.secrecy_rate_bits = alloc.feasible ? alloc.secrecy_rate : 0.0;
  row.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return row;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      const RunOptions& opts) {
  cfg.Validate();
  const std::vector<SweepPoint> pts = sweep_points(cfg);
  const std::size_t n_tasks = pts.size() * static_cast<std::size_t>(cfg.trials);
  const std::size_t n_schemes = cfg.schemes.size();
  std::vector<ResultRow> rows(n_tasks * n_schemes);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const SweepPoint& pt = pts[task / cfg.trials];
      const int trial = static_cast<int>(task % cfg.trials);
      const SystemParams params = cfg.ParamsFor(pt.p_dbm, pt.qbar_uw);
      const ChannelState ch = draw_channel(cfg, pt, trial);
      for (std::size_t s = 0; s < n_schemes; ++s) {
        ResultRow row =
            solve_scheme(cfg.schemes[s], ch, params, cfg.max_iterations);
        row.sweep_name = pt.sweep_name;
        row.sweep_value = pt.sweep_value;
        row.trial = trial;
        row.seed = cfg.seed;
        row.fading = cfg.fading;
        rows[task * n_schemes + s] = std::move(row);
      }
    }
  };
  const int threads =
      std::min<int>(ResolveThreads(opts.threads), static_cast<int>(n_tasks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return rows;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  char runtime[32];
  for (const ResultRow& r : rows) {
    std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_ms);
    out += r.sweep_name + ',' + FormatDouble(r.sweep_value) + ',' +
           std::to_string(r.trial) + ',' + ToString(r.scheme) + ',' +
           FormatDouble(r.secrecy_rate_bits) + ',' +
           (r.feasible ? "true" : "false") + ',' +
           std::to_string(r.iterations) + ',' + runtime + ',' +
           std::to_string(r.seed) + ',' + ToString(r.fading) + '\n';
  }
  return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("no rows to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_csv(rows);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  const auto lines = Split(text, '\n');
  if (lines.empty() || Trim(lines[0]) != kCsvHeader)
    throw std::runtime_error("missing or unexpected CSV header");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = Trim(lines[i]);
    if (line.empty()) continue;
    const auto f = Split(line, ',');
    const int line_no = static_cast<int>(i) + 1;
    if (f.size() != 10)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 10 fields");
    try {
      ResultRow r;
      r.sweep_name = std::string(f[0]);
      r.sweep_value = ParseNumber(f[1], line_no);
      r.trial = static_cast<int>(ParseInteger(f[2], line_no));
      r.scheme = ParseScheme(f[3]);
      r.secrecy_rate_bits = ParseNumber(f[4], line_no);
      if (f[5] != "true" && f[5] != "false")
        throw ConfigError(line_no, "feasible must be true or false");
      r.feasible = f[5] == "true";
      r.iterations = static_cast<int>(ParseInteger(f[6], line_no));
      r.runtime_ms = ParseNumber(f[7], line_no);
      r.seed = static_cast<std::uint64_t>(ParseInteger(f[8], line_no));
      if (f[9] == "none") {
        r.fading = FadingKind::kNone;
      } else if (f[9] == "rayleigh") {
        r.fading = FadingKind::kRayleighUnitMean;
      } else {
        throw ConfigError(line_no, "unknown fading '" + std::string(f[9]) + "'");
      }
      rows.push_back(std::move(r));
    } catch (const ConfigError& e) {
      throw std::runtime_error(std::string("CSV ") + e.what());
    }
  }
  return rows;
}

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, double, int>;
  std::map<Key, std::size_t> index;
  std::vector<AggregateRow> out;
  std::vector<std::vector<double>> samples;
  std::vector<int> feasible;
  for (const ResultRow& r : rows) {
    const Key key{r.sweep_name, r.sweep_value, static_cast<int>(r.scheme)};
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) {
      out.push_back({r.sweep_name, r.sweep_value, r.scheme, 0, 0.0, 0.0, 0.0});
      samples.emplace_back();
      feasible.push_back(0);
    }
    samples[it->second].push_back(r.feasible ? r.secrecy_rate_bits : 0.0);
    feasible[it->second] += r.feasible ? 1 : 0;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& x = samples[i];
    const double n = static_cast<double>(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    out[i].trials = static_cast<int>(x.size());
    out[i].mean_rate = mean;
    out[i].ci_half_width = x.size() > 1 ? 1.96 * std::sqrt(ss / (n - 1.0) / n) : 0.0;
    out[i].feasible_fraction = feasible[i] / n;
  }
  return out;
}

}  // namespace swipt
