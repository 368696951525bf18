#include "hdawz/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "hdawz/analytics.hpp"
#include "hdawz/mmse.hpp"

namespace hdawz::montecarlo {

namespace {

// splitmix64 finalizer over (seed, block), so every block gets its own
// substream no matter how blocks are scheduled across threads.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (block + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Mean and second central moment with a deterministic merge, so per-block
// partials combine to the same totals as a single sequential pass.
struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Welford& other) {
    if (other.n == 0) return;
    if (n == 0) {
      *this = other;
      return;
    }
    const std::uint64_t total = n + other.n;
    const double d = other.mean - mean;
    mean += d * (static_cast<double>(other.n) / static_cast<double>(total));
    m2 += other.m2 + d * d * (static_cast<double>(n) / static_cast<double>(total)) *
                         static_cast<double>(other.n);
    n = total;
  }

  double std_err() const {
    if (n < 2) return 0.0;
    const double var = m2 / static_cast<double>(n - 1);
    return std::sqrt(var / static_cast<double>(n));
  }
};

struct BlockStats {
  Welford error;
  Welford power;
  Welford v2;   // second moments of (source, eavesdropper output),
  Welford vz;   // used only by the uncoded leakage estimate
  Welford z2;

  void merge(const BlockStats& other) {
    error.merge(other.error);
    power.merge(other.power);
    v2.merge(other.v2);
    vz.merge(other.vz);
    z2.merge(other.z2);
  }
};

void check_config(const SimulationConfig& cfg) {
  if (cfg.trials < 1) raise(ErrorCode::Usage, "trials must be at least 1");
  if (cfg.block_size < 1) raise(ErrorCode::Usage, "block_size must be at least 1");
}

// Runs cfg.trials trials of Trial::operator()(GaussianStream&, BlockStats&),
// partitioned into deterministic blocks; merges ascending.
template <typename Trial>
BlockStats run_blocks(const SimulationConfig& cfg, const Trial& trial) {
  const std::uint64_t blocks = (cfg.trials + cfg.block_size - 1) / cfg.block_size;

  auto run_one = [&](std::uint64_t index) {
    const std::uint64_t begin = index * cfg.block_size;
    const std::uint64_t end = std::min(begin + cfg.block_size, cfg.trials);
    GaussianStream stream(cfg.seed, index);
    BlockStats stats;
    for (std::uint64_t i = begin; i < end; ++i) trial(stream, stats);
    return stats;
  };

  const unsigned workers =
      std::min<std::uint64_t>(cfg.threads > 0 ? cfg.threads : 1, blocks);
  BlockStats total;
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) total.merge(run_one(b));
    return total;
  }

  std::vector<BlockStats> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
        partial[b] = run_one(b);
    });
  }
  for (auto& t : pool) t.join();
  for (std::uint64_t b = 0; b < blocks; ++b) total.merge(partial[b]);
  return total;
}

SimulationReport make_report(const SimulationConfig& cfg, double analytic_d,
                             const BlockStats& stats, bool has_power) {
  SimulationReport report;
  report.analytic_d = analytic_d;
  report.empirical_d = stats.error.mean;
  report.std_err = stats.error.std_err();
  if (has_power) {
    report.power_mean = stats.power.mean;
    report.power_se = stats.power.std_err();
  }
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  return report;
}

inline double sq(double x) { return x * x; }

}  // namespace

const char* scheme_name(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Hybrid: return "hybrid";
    case SchemeKind::Separation: return "separation";
    case SchemeKind::Superimposed: return "superimposed";
    case SchemeKind::Uncoded: return "uncoded";
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  if (name == "hybrid") return SchemeKind::Hybrid;
  if (name == "separation") return SchemeKind::Separation;
  if (name == "superimposed") return SchemeKind::Superimposed;
  if (name == "uncoded") return SchemeKind::Uncoded;
  return std::nullopt;
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t block_index)
    : engine_(block_seed(seed, block_index)) {}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

SimulationReport simulate_separation(const ValidatedParams& params,
                                     const MismatchPoint& point,
                                     const SimulationConfig& cfg) {
  check_config(cfg);
  const auto sep = analytics::separation_coefficients(params);
  const double analytic = analytics::separation_mismatch_distortion(params, point);
  const double sd_vp = std::sqrt(params.sigma_vp2());
  const double sd_t = std::sqrt(params.sigma_t2());
  const double sd_q = std::sqrt(analytic);  // quantization residual at the matched rate
  const double root = sep.lambda1;

  const auto stats = run_blocks(cfg, [&](GaussianStream& g, BlockStats& s) {
    const double vp = sd_vp * g.next();
    const double t = sd_t * g.next();
    const double v = vp + t;
    const double u = root * v + sd_q * g.next();
    const double vhat = sep.lambda1 * u + sep.lambda2 * vp;
    s.error.add(sq(v - vhat));
  });
  return make_report(cfg, analytic, stats, false);
}

SimulationReport simulate_uncoded(const ValidatedParams& params,
                                  const MismatchPoint& point,
                                  const SimulationConfig& cfg) {
  check_config(cfg);
  const double alpha = analytics::uncoded_coefficients(params).alpha;
  const auto sol = mmse::solve(mmse::uncoded_problem(params, point));
  const double analytic = analytics::uncoded_distortion(params, point);
  const double sd_vp = std::sqrt(params.sigma_vp2());
  const double sd_t = std::sqrt(params.sigma_t2());
  const double sd_w = std::sqrt(point.n1a());
  const double sd_we = std::sqrt(params.n2());

  const auto stats = run_blocks(cfg, [&](GaussianStream& g, BlockStats& s) {
    const double vp = sd_vp * g.next();
    const double t = sd_t * g.next();
    const double v = vp + t;
    const double x = alpha * v;
    const double y = x + sd_w * g.next();
    const double z = x + sd_we * g.next();
    const double vhat = sol.coeffs[0] * y + sol.coeffs[1] * vp;
    s.error.add(sq(v - vhat));
    s.power.add(sq(x));
    s.v2.add(sq(v));
    s.vz.add(v * z);
    s.z2.add(sq(z));
  });

  auto report = make_report(cfg, analytic, stats, true);
  // Leakage from the empirical second moments of (V, Z).
  const double sv2_hat = stats.v2.mean;
  const double n2_hat =
      stats.z2.mean - 2.0 * alpha * stats.vz.mean + alpha * alpha * stats.v2.mean;
  report.empirical_leakage = 0.5 * std::log2(1.0 + alpha * alpha * sv2_hat / n2_hat);
  return report;
}

SimulationReport simulate_hybrid(const ValidatedParams& params,
                                 const MismatchPoint& point,
                                 const SimulationConfig& cfg) {
  check_config(cfg);
  const double k = analytics::hybrid_coefficients(params).k;
  const auto sol = mmse::solve(mmse::hybrid_problem(params, point));
  const double analytic = analytics::hybrid_mismatch_distortion(params, point);
  const double sd_vp = std::sqrt(params.sigma_vp2());
  const double sd_t = std::sqrt(params.sigma_t2());
  const double sd_x = std::sqrt(params.p());
  const double sd_w = std::sqrt(point.n1a());

  const auto stats = run_blocks(cfg, [&](GaussianStream& g, BlockStats& s) {
    const double vp = sd_vp * g.next();
    const double t = sd_t * g.next();
    const double v = vp + t;
    const double x = sd_x * g.next();
    const double w = sd_w * g.next();
    const double u = k * v + x;
    const double y = x + w;
    const double vhat = sol.coeffs[0] * u + sol.coeffs[1] * vp + sol.coeffs[2] * y;
    s.error.add(sq(v - vhat));
    s.power.add(sq(x));
  });
  return make_report(cfg, analytic, stats, true);
}

SimulationReport simulate_superimposed(const ValidatedParams& params,
                                       const MismatchPoint& point,
                                       const SimulationConfig& cfg) {
  check_config(cfg);
  const auto plan = analytics::superimposed_plan(params);
  const auto sol = mmse::solve(mmse::superimposed_problem(params, point));
  const double analytic = analytics::superimposed_mismatch_distortion(params, point);
  const double svt2 = params.sigma_v2() - plan.sigma_ttilde2;
  const double sd_vt = std::sqrt(svt2);
  const double sd_tt = std::sqrt(plan.sigma_ttilde2);
  const double sd_w = std::sqrt(point.n1a());

  // Zero hybrid power: simulate the normalized auxiliary the estimation
  // problem is built on; the channel output is pure noise.
  if (plan.p_hwz == 0.0) {
    const double c =
        std::sqrt((std::exp2(2.0 * params.i_eps()) - 1.0) / plan.sigma_ttilde2);
    const auto stats = run_blocks(cfg, [&](GaussianStream& g, BlockStats& s) {
      const double vt = sd_vt * g.next();
      const double tt = sd_tt * g.next();
      const double v = vt + tt;
      const double carrier = g.next();
      const double w = sd_w * g.next();
      const double u = c * v + carrier;
      const double vhat = sol.coeffs[0] * u + sol.coeffs[1] * vt + sol.coeffs[2] * w;
      s.error.add(sq(v - vhat));
      s.power.add(0.0);
    });
    return make_report(cfg, analytic, stats, true);
  }

  const double sd_x2 = std::sqrt(plan.p_hwz);
  const auto stats = run_blocks(cfg, [&](GaussianStream& g, BlockStats& s) {
    const double vt = sd_vt * g.next();
    const double tt = sd_tt * g.next();
    const double v = vt + tt;
    const double x2 = sd_x2 * g.next();
    const double w = sd_w * g.next();
    const double u = plan.k1 * v + x2;
    const double y = x2 + w;
    const double vhat = sol.coeffs[0] * u + sol.coeffs[1] * vt + sol.coeffs[2] * y;
    s.error.add(sq(v - vhat));
    s.power.add(sq(x2));
  });
  return make_report(cfg, analytic, stats, true);
}

SimulationReport simulate(SchemeKind scheme, const ValidatedParams& params,
                          const MismatchPoint& point, const SimulationConfig& cfg) {
  switch (scheme) {
    case SchemeKind::Hybrid: return simulate_hybrid(params, point, cfg);
    case SchemeKind::Separation: return simulate_separation(params, point, cfg);
    case SchemeKind::Superimposed: return simulate_superimposed(params, point, cfg);
    case SchemeKind::Uncoded: return simulate_uncoded(params, point, cfg);
  }
  raise(ErrorCode::Usage, "unknown scheme");
}

}  // namespace hdawz::montecarlo
