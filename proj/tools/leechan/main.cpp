// Copyright 2026 The leechannel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// leechan: constant Lee weight vectors over Z_m from the command line.
//
// Subcommands: sample, count, marginal, threshold, scalar-sim, verify.
// Exit codes: 0 success, 1 precondition or domain error, 2 internal
// invariant failure, 3 verification-suite failure.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lee/channel.hpp"
#include "lee/core.hpp"
#include "lee/counting.hpp"
#include "lee/partitions.hpp"
#include "lee/sampler.hpp"
#include "lee/scalar_mult.hpp"
#include "lee/stats.hpp"
#include "lee/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInternal = 2;
constexpr int kExitVerify = 3;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Primary output is byte-stable for fixed flags and seed; the timestamp is
// kept on its own line (or key) so consumers can separate it out.
void write_manifest_comments(std::ostream& os, const json& manifest) {
  for (auto it = manifest.begin(); it != manifest.end(); ++it) {
    os << "# " << it.key() << ": "
       << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
  }
  os << "# timestamp: " << utc_timestamp() << "\n";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::domain_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Shared numeric flags. Weight may be given as --t (integer) or as --delta
// (normalized weight, converted as t = round(delta * n)), never both.
struct WeightFlag {
  std::optional<std::int64_t> t;
  std::optional<double> delta;

  std::int64_t resolve(std::int64_t n) const {
    if (t.has_value() == delta.has_value()) {
      throw std::domain_error("specify exactly one of --t and --delta");
    }
    if (t) return *t;
    if (!(*delta >= 0.0) || !std::isfinite(*delta)) {
      throw std::domain_error("--delta must be a finite nonnegative number");
    }
    return std::llround(*delta * static_cast<double>(n));
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--t", t, "Lee weight t of the sampled vectors");
    cmd->add_option("--delta", delta, "normalized Lee weight; t = round(delta * n)");
  }
};

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("LEECHAN_CACHE_DIR"); env && *env) {
    return std::filesystem::path(env);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "leechan";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "leechan";
  }
  return std::filesystem::path(".leechan-cache");
}

// Distribution cache, keyed by (n, m, t) and the tool version embedded in
// the snapshot. Only materialized distributions of moderate size are cached.
std::shared_ptr<const lee::PartitionDistribution> load_or_build_distribution(
    std::int64_t n, const lee::Modulus& mod, std::int64_t t, int jobs) {
  namespace fs = std::filesystem;
  const fs::path dir = cache_directory();
  const fs::path file = dir / ("dist-n" + std::to_string(n) + "-m" + std::to_string(mod.m()) +
                               "-t" + std::to_string(t) + ".json");
  if (fs::exists(file)) {
    try {
      std::ifstream in(file, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      auto cached = std::make_shared<const lee::PartitionDistribution>(
          lee::PartitionDistribution::from_json(buf.str()));
      if (cached->n() == n && cached->modulus() == mod && cached->t() == t) {
        return cached;
      }
    } catch (const std::exception&) {
      // Stale or foreign snapshot: rebuild below and overwrite.
    }
  }
  lee::DistributionBuildOptions options;
  options.jobs = jobs;
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(n, mod, t, options));
  if (dist->materialized() && dist->class_count() <= 50000) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) {
      std::ofstream out(file, std::ios::binary);
      if (out) out << dist->to_json();
    }
  }
  return dist;
}

json base_manifest(const std::string& command) {
  json m;
  m["command"] = command;
  m["tool"] = "leechan";
  m["version"] = std::string(lee::kVersion);
  return m;
}

// --- sample ---------------------------------------------------------------

int cmd_sample(std::int64_t m, std::int64_t n, const WeightFlag& weight, std::int64_t count,
               std::uint64_t seed, const std::string& out_path, const std::string& format,
               int jobs) {
  const lee::Modulus mod(m);
  const std::int64_t t = weight.resolve(n);
  if (n < 1) throw std::domain_error("--n must be at least 1");
  if (count < 1) throw std::domain_error("--count must be at least 1");
  if (t <= 0) throw std::domain_error("t must be positive");
  if (t > n * mod.radius()) {
    throw std::domain_error("t > n*r: no vector of length " + std::to_string(n) + " over Z_" +
                            std::to_string(m) + " has Lee weight " + std::to_string(t));
  }

  auto dist = load_or_build_distribution(n, mod, t, jobs);
  lee::SphereSampler sampler(dist, seed);
  const std::vector<lee::RingVector> samples =
      sampler.sample_batch(static_cast<std::size_t>(count));
  for (const lee::RingVector& x : samples) {
    if (lee::lee_weight(x) != t) throw lee::internal_error("sample has wrong Lee weight");
  }

  json manifest = base_manifest("sample");
  manifest["m"] = m;
  manifest["n"] = n;
  manifest["t"] = t;
  manifest["count"] = count;
  manifest["seed"] = seed;
  manifest["generator"] = std::string(lee::Rng::kGeneratorName);

  Output out(out_path);
  if (format == "json") {
    json doc;
    doc["manifest"] = manifest;
    doc["timestamp"] = utc_timestamp();
    json rows = json::array();
    for (const lee::RingVector& x : samples) rows.push_back(x.entries());
    doc["samples"] = std::move(rows);
    out.stream() << doc.dump(2) << "\n";
  } else {
    write_manifest_comments(out.stream(), manifest);
    for (const lee::RingVector& x : samples) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out.stream() << ",";
        out.stream() << x[i];
      }
      out.stream() << "\n";
    }
  }
  return kExitOk;
}

// --- count ----------------------------------------------------------------

int cmd_count(std::int64_t m, std::int64_t n, const WeightFlag& weight, bool per_partition,
              const std::string& out_path, int jobs) {
  const lee::Modulus mod(m);
  const std::int64_t t = weight.resolve(n);
  if (n < 1) throw std::domain_error("--n must be at least 1");
  if (t < 0) throw std::domain_error("t must be nonnegative");

  json manifest = base_manifest("count");
  manifest["m"] = m;
  manifest["n"] = n;
  manifest["t"] = t;

  Output out(out_path);
  write_manifest_comments(out.stream(), manifest);

  lee::BigInt total(0);
  if (jobs > 1) {
    for (const lee::ChunkSummary& c : lee::decomposition_chunk_summaries(n, mod, t, jobs)) {
      total += c.total;
    }
  } else {
    total = lee::count_sphere(n, mod, t);
  }
  if (!per_partition) {
    out.stream() << lee::to_decimal(total) << "\n";
    return kExitOk;
  }
  out.stream() << "partition,count,probability\n";
  lee::for_each_decomposition(
      n, mod, t, [&](std::span<const std::int64_t> counts, const lee::BigInt& c) {
        const lee::Partition p = lee::Partition::from_value_counts(counts);
        const lee::BigRat prob = lee::make_rational(c, total);
        out.stream() << p.to_string() << "," << lee::to_decimal(c) << ","
                     << lee::to_decimal(prob.get_num()) << "/" << lee::to_decimal(prob.get_den())
                     << "\n";
        return true;
      });
  out.stream() << "total," << lee::to_decimal(total) << (total > 0 ? ",1/1\n" : ",0/1\n");
  return kExitOk;
}

// --- marginal ---------------------------------------------------------------

int cmd_marginal(std::int64_t m, double delta, const std::string& convention,
                 const std::string& out_path) {
  const lee::Modulus mod(m);
  double beta = 0.0;
  if (convention == "elementwise") {
    beta = lee::solve_beta_elementwise(mod, delta);
  } else if (convention == "closed-form") {
    beta = lee::solve_beta_closed_form(mod, delta);
  } else {
    throw std::domain_error("--convention must be elementwise or closed-form");
  }
  const lee::MarginalDistribution dist = lee::boltzmann_marginal(mod, beta);

  json manifest = base_manifest("marginal");
  manifest["m"] = m;
  manifest["delta"] = delta;
  manifest["convention"] = convention;
  manifest["beta"] = beta;
  manifest["mean_lee_weight"] = dist.mean_weight;

  Output out(out_path);
  write_manifest_comments(out.stream(), manifest);
  out.stream() << "element,lee_weight,probability\n";
  for (std::int64_t e = 0; e < m; ++e) {
    out.stream() << e << "," << lee::lee_weight(e, mod) << ","
                 << format_double(dist.probabilities[static_cast<std::size_t>(e)]) << "\n";
  }
  return kExitOk;
}

// --- threshold --------------------------------------------------------------

int cmd_threshold(const std::vector<std::int64_t>& ms, double tol, const std::string& format,
                  const std::string& out_path) {
  std::vector<lee::ThresholdResult> rows;
  rows.reserve(ms.size());
  for (std::int64_t m : ms) {
    rows.push_back(lee::delta_star(lee::Modulus(m), tol));
  }

  json manifest = base_manifest("threshold");
  manifest["tol"] = tol;
  manifest["beta_convention"] = "closed-form";

  Output out(out_path);
  write_manifest_comments(out.stream(), manifest);
  if (format == "csv") {
    out.stream() << "m,r,delta_star,critical_a,beta_at_threshold\n";
    for (const auto& r : rows) {
      out.stream() << r.modulus.m() << "," << r.modulus.radius() << ","
                   << format_double(r.delta_star) << "," << r.critical_a << ","
                   << format_double(r.beta_at_threshold) << "\n";
    }
  } else {
    char line[160];
    std::snprintf(line, sizeof(line), "%6s %6s %12s %10s %14s\n", "m", "r", "delta_star",
                  "critical_a", "beta");
    out.stream() << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof(line), "%6" PRId64 " %6" PRId64 " %12.6f %10" PRId64 " %14.6f\n",
                    r.modulus.m(), r.modulus.radius(), r.delta_star, r.critical_a,
                    r.beta_at_threshold);
      out.stream() << line;
    }
  }
  return kExitOk;
}

// --- scalar-sim -------------------------------------------------------------

int cmd_scalar_sim(std::int64_t m, std::int64_t n, const WeightFlag& weight, std::int64_t trials,
                   std::uint64_t seed, std::optional<double> epsilon, const std::string& out_path,
                   int jobs) {
  const lee::Modulus mod(m);
  const std::int64_t t = weight.resolve(n);
  if (n < 1) throw std::domain_error("--n must be at least 1");

  lee::MonteCarloOptions options;
  options.jobs = jobs;
  const lee::MonteCarloEstimate est =
      lee::monte_carlo_reduction_probability(n, mod, t, trials, seed, options);

  json manifest = base_manifest("scalar-sim");
  manifest["m"] = m;
  manifest["n"] = n;
  manifest["t"] = t;
  manifest["trials"] = trials;
  manifest["seed"] = seed;
  manifest["generator"] = std::string(lee::Rng::kGeneratorName);
  if (epsilon) manifest["epsilon"] = *epsilon;

  json doc;
  doc["manifest"] = manifest;
  doc["timestamp"] = utc_timestamp();
  doc["estimate"] = est.estimate;
  doc["successes"] = est.successes;
  doc["trials"] = est.trials;
  doc["wilson_95"] = {est.ci_low, est.ci_high};
  if (epsilon) {
    const lee::BoundDecomposition bd =
        lee::reduction_bound_decomposition(n, mod, t, *epsilon, trials, seed, options);
    json d;
    d["epsilon"] = bd.epsilon;
    d["divergence_term"] = bd.divergence_term;
    if (bd.conditional_term) {
      d["conditional_term"] = *bd.conditional_term;
    } else {
      d["conditional_term"] = nullptr;
    }
    d["small_divergence_trials"] = bd.small_divergence_trials;
    d["unconditional"] = bd.unconditional;
    doc["decomposition"] = std::move(d);
  }

  Output out(out_path);
  out.stream() << doc.dump(2) << "\n";
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct SuiteReport {
  int failures = 0;
  int skipped = 0;
  std::ostringstream detail;
};

void verify_counting(SuiteReport& rep, double budget, bool inject_fault) {
  int checked = 0;
  for (std::int64_t m = 4; m <= 9; ++m) {
    const lee::Modulus mod(m);
    std::int64_t n = 1;
    double space = static_cast<double>(m);
    while (space * static_cast<double>(m) <= budget && n < 9) {
      space *= static_cast<double>(m);
      ++n;
    }
    if (space > budget) {
      ++rep.skipped;
      continue;
    }
    // Independent oracle: full scan of Z_m^n, histogrammed by weight.
    std::vector<std::int64_t> histogram(static_cast<std::size_t>(n * mod.radius()) + 1, 0);
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::int64_t w = 0;
      for (auto e : v) w += std::min<std::int64_t>(e, m - e);
      histogram[static_cast<std::size_t>(w)] += 1;
      std::size_t i = 0;
      while (i < v.size()) {
        if (v[i] + 1 < m) { v[i]++; break; }
        v[i] = 0;
        ++i;
      }
      if (i == v.size()) break;
    }
    lee::BigInt sum(0);
    for (std::int64_t t = 0; t <= n * mod.radius(); ++t) {
      lee::BigInt counted = lee::count_sphere(n, mod, t);
      if (inject_fault && t == 1) counted += 1;
      sum += counted;
      if (counted != histogram[static_cast<std::size_t>(t)]) {
        ++rep.failures;
        rep.detail << "  counting mismatch at m=" << m << " n=" << n << " t=" << t << "\n";
      }
      ++checked;
    }
    lee::BigInt mn(1);
    for (std::int64_t i = 0; i < n; ++i) mn *= m;
    if (sum != mn) {
      ++rep.failures;
      rep.detail << "  sphere sizes do not add up to m^n for m=" << m << " n=" << n << "\n";
    }
  }
  rep.detail << "  " << checked << " (m, n, t) cases checked\n";
}

void verify_exact_uniformity(SuiteReport& rep) {
  int spheres = 0;
  for (std::int64_t m = 2; m <= 9; ++m) {
    const lee::Modulus mod(m);
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (std::int64_t t = 1; t <= n * mod.radius(); ++t) {
        const lee::BigInt size = lee::count_sphere(n, mod, t);
        if (size == 0 || size > 200) continue;
        if (!lee::sampler_law_is_uniform(n, mod, t)) {
          ++rep.failures;
          rep.detail << "  non-uniform sampler law at m=" << m << " n=" << n << " t=" << t
                     << "\n";
        }
        ++spheres;
      }
    }
  }
  rep.detail << "  " << spheres << " spheres checked symbolically\n";
}

void verify_chi_square(SuiteReport& rep, std::uint64_t seed, double budget, int jobs) {
  const lee::Modulus mod(7);
  if (std::pow(7.0, 4.0) > budget) {
    ++rep.skipped;
    return;
  }
  auto sphere = lee::sphere_elements(4, mod, 5, budget);
  lee::DistributionBuildOptions options;
  options.jobs = jobs;
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(4, mod, 5, options));
  lee::SphereSampler sampler(dist, seed);
  auto samples = sampler.sample_batch(8000);
  const lee::ChiSquareResult r = lee::chi_square_uniformity(samples, sphere);
  rep.detail << "  chi-square p-value " << format_double(r.p_value) << " on " << r.classes
             << " classes\n";
  if (!(r.p_value > 0.001)) ++rep.failures;
}

void verify_score_symmetry(SuiteReport& rep) {
  int checked = 0;
  for (std::int64_t m = 4; m <= 64; ++m) {
    const lee::Modulus mod(m);
    for (double beta : {-1.0, -0.25, 0.0, 0.25, 1.0}) {
      if (lee::asymptotic_score(mod, 1, beta) != 0.0 ||
          lee::asymptotic_score(mod, m - 1, beta) != 0.0) {
        ++rep.failures;
        rep.detail << "  unit scalar score nonzero at m=" << m << "\n";
      }
      for (std::int64_t a = 2; a <= m / 2; ++a) {
        if (lee::asymptotic_score(mod, a, beta) != lee::asymptotic_score(mod, m - a, beta)) {
          ++rep.failures;
          rep.detail << "  score asymmetry at m=" << m << " a=" << a << "\n";
        }
        ++checked;
      }
    }
  }
  rep.detail << "  " << checked << " scalar pairs checked\n";
}

int cmd_verify(double budget, std::uint64_t seed, bool inject_fault, int jobs) {
  struct Named {
    const char* name;
    SuiteReport rep;
  };
  std::vector<Named> suites;
  suites.push_back({"counting-vs-enumeration", {}});
  verify_counting(suites.back().rep, budget, inject_fault);
  suites.push_back({"exact-uniformity", {}});
  verify_exact_uniformity(suites.back().rep);
  suites.push_back({"chi-square-uniformity", {}});
  verify_chi_square(suites.back().rep, seed, budget, jobs);
  suites.push_back({"score-symmetry", {}});
  verify_score_symmetry(suites.back().rep);

  int failures = 0;
  for (const Named& s : suites) {
    const bool ok = s.rep.failures == 0;
    std::cout << (ok ? "PASS" : "FAIL") << " " << s.name;
    if (s.rep.skipped > 0) std::cout << " (" << s.rep.skipped << " cases skipped over budget)";
    std::cout << "\n" << s.rep.detail.str();
    failures += s.rep.failures;
  }
  if (failures > 0) {
    std::cout << "verification failed: " << failures << " failing checks\n";
    return kExitVerify;
  }
  std::cout << "all verification suites passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant Lee weight channel toolkit"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw uniform vectors of fixed Lee weight");
  std::int64_t s_m = 0, s_n = 0, s_count = 0;
  std::uint64_t s_seed = 0;
  WeightFlag s_weight;
  std::string s_out, s_format = "csv";
  int s_jobs = 1;
  sample->add_option("--m", s_m, "ring modulus")->required();
  sample->add_option("--n", s_n, "vector length")->required();
  s_weight.attach(sample);
  sample->add_option("--count", s_count, "number of vectors")->required();
  sample->add_option("--seed", s_seed, "random seed")->required();
  sample->add_option("--out", s_out, "output file (default stdout)");
  sample->add_option("--format", s_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--jobs", s_jobs, "worker threads for distribution construction");

  // count
  auto* count = app.add_subcommand("count", "sphere and per-partition cardinalities");
  std::int64_t c_m = 0, c_n = 0;
  WeightFlag c_weight;
  bool c_per_partition = false;
  std::string c_out;
  int c_jobs = 1;
  count->add_option("--m", c_m, "ring modulus")->required();
  count->add_option("--n", c_n, "vector length")->required();
  c_weight.attach(count);
  count->add_flag("--per-partition", c_per_partition, "one row per weight decomposition");
  count->add_option("--out", c_out, "output file (default stdout)");
  count->add_option("--jobs", c_jobs, "worker threads");

  // marginal
  auto* marginal = app.add_subcommand("marginal", "maximum-entropy symbol marginal");
  std::int64_t g_m = 0;
  double g_delta = 0.0;
  std::string g_convention = "elementwise", g_out;
  marginal->add_option("--m", g_m, "ring modulus")->required();
  marginal->add_option("--delta", g_delta, "mean Lee weight per symbol")->required();
  marginal->add_option("--convention", g_convention,
                       "beta solver: elementwise or closed-form");
  marginal->add_option("--out", g_out, "output file (default stdout)");

  // threshold
  auto* threshold = app.add_subcommand("threshold", "weight-reduction thresholds delta*");
  std::vector<std::int64_t> t_ms;
  double t_tol = 1e-4;
  std::string t_format = "text", t_out;
  threshold->add_option("--m", t_ms, "ring modulus (repeatable)")->required();
  threshold->add_option("--tol", t_tol, "threshold tolerance");
  threshold->add_option("--format", t_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  threshold->add_option("--out", t_out, "output file (default stdout)");

  // scalar-sim
  auto* sim = app.add_subcommand("scalar-sim", "Monte Carlo scalar weight-reduction estimate");
  std::int64_t x_m = 0, x_n = 0, x_trials = 0;
  std::uint64_t x_seed = 0;
  WeightFlag x_weight;
  std::optional<double> x_epsilon;
  std::string x_out;
  int x_jobs = 1;
  sim->add_option("--m", x_m, "ring modulus")->required();
  sim->add_option("--n", x_n, "vector length")->required();
  x_weight.attach(sim);
  sim->add_option("--trials", x_trials, "Monte Carlo trials")->required();
  sim->add_option("--seed", x_seed, "random seed")->required();
  sim->add_option("--epsilon", x_epsilon, "divergence split for the bound decomposition");
  sim->add_option("--out", x_out, "output file (default stdout)");
  sim->add_option("--jobs", x_jobs, "worker threads");

  // verify
  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  double v_budget = 1e6;
  std::uint64_t v_seed = 1;
  bool v_inject = false;
  int v_jobs = 1;
  verify->add_option("--budget", v_budget, "maximum m^n for exhaustive checks");
  verify->add_option("--seed", v_seed, "seed for the statistical suite");
  verify->add_option("--jobs", v_jobs, "worker threads");
  verify->add_flag("--inject-fault", v_inject)->group("");  // test-only negative control

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (sample->parsed()) {
      return cmd_sample(s_m, s_n, s_weight, s_count, s_seed, s_out, s_format, s_jobs);
    }
    if (count->parsed()) {
      return cmd_count(c_m, c_n, c_weight, c_per_partition, c_out, c_jobs);
    }
    if (marginal->parsed()) {
      return cmd_marginal(g_m, g_delta, g_convention, g_out);
    }
    if (threshold->parsed()) {
      return cmd_threshold(t_ms, t_tol, t_format, t_out);
    }
    if (sim->parsed()) {
      return cmd_scalar_sim(x_m, x_n, x_weight, x_trials, x_seed, x_epsilon, x_out, x_jobs);
    }
    if (verify->parsed()) {
      return cmd_verify(v_budget, v_seed, v_inject, v_jobs);
    }
  } catch (const lee::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
