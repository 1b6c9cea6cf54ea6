#include "riscap/validate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "riscap/capacity.hpp"
#include "riscap/channel.hpp"
#include "riscap/mgf.hpp"
#include "riscap/montecarlo.hpp"
#include "riscap/specfun.hpp"

namespace riscap::validate {

namespace {

SystemParams scenario(Model model, int n_cells) {
  SystemParams p;  // struct defaults carry the reference scenario
  p.model = model;
  p.n_cells = n_cells;
  if (model == Model::Relay) p.r_s_m = 10.0;
  return p;
}

struct Suite {
  std::vector<CheckResult> checks;
  std::mutex mu;

  void add(std::string name, double value, double bound) {
    std::scoped_lock lock(mu);
    checks.push_back({std::move(name), std::abs(value) <= bound, std::abs(value), bound});
  }
};

void analytic_checks(Suite& suite) {
  // MGF normalisation at z = 0 for both models and a span of cell counts.
  for (Model model : {Model::AccessPoint, Model::Relay})
    for (int n : {1, 2, 4, 16, 64}) {
      const SystemParams p = scenario(model, n);
      for (Link link : {Link::Destination, Link::Eavesdropper}) {
        const double v = mgf::mgf_snr(p, link, 0.0);
        suite.add("mgf_normalisation/" +
                      std::string(model == Model::AccessPoint ? "ap" : "relay") + "/n" +
                      std::to_string(n),
                  v - 1.0, 1e-12);
      }
    }

  // Meijer-G route against the Bessel route for the double-cascade density.
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double g = 1e-3 * std::pow(50.0 / 1e-3, i / 49.0);
    const double ref = g * specfun::bessel_k0(g);
    const double via_g = specfun::meijer_g_0220(0.25 * g * g);
    worst = std::max(worst, std::abs(via_g - ref) / ref);
  }
  suite.add("meijer_vs_bessel_identity", worst, 1e-8);

  // Degenerate symmetry: equal distances kill the secrecy difference.
  SystemParams sym = scenario(Model::AccessPoint, 4);
  sym.r_e_m = sym.r_d_m;
  suite.add("secrecy_zero_at_equal_distances",
            capacity::avg_secrecy_capacity(sym).secrecy_difference, 1e-10);

  // Swapping the two distances negates the difference exactly.
  SystemParams a = scenario(Model::AccessPoint, 4);
  SystemParams b = a;
  std::swap(b.r_d_m, b.r_e_m);
  const double fwd = capacity::avg_secrecy_capacity(a).secrecy_difference;
  const double rev = capacity::avg_secrecy_capacity(b).secrecy_difference;
  suite.add("secrecy_antisymmetry", fwd + rev, 0.0);
}

void mc_checks(Suite& suite, Model model, int n_cells, const Options& opts) {
  const SystemParams p = scenario(model, n_cells);
  const std::string tag =
      std::string(model == Model::AccessPoint ? "ap" : "relay") + "/n" +
      std::to_string(n_cells);
  mc::McConfig cfg;
  cfg.sample_count = opts.mc_samples;
  cfg.base_seed = rng::derive_seed(opts.seed, static_cast<std::uint64_t>(n_cells) * 2 +
                                                  (model == Model::Relay ? 1 : 0));

  const capacity::SecrecyResult analytic = capacity::avg_secrecy_capacity(p);
  const mc::SecrecyEstimate sec = mc::estimate_secrecy(p, cfg);
  suite.add("secrecy_diff_vs_mc/" + tag, analytic.secrecy_difference - sec.unclamped.mean,
            3.0 * sec.unclamped.std_error);
  suite.add("clamped_vs_unclamped/" + tag,
            std::min(0.0, sec.clamped.mean - std::max(sec.unclamped.mean, 0.0) +
                              3.0 * sec.unclamped.std_error),
            0.0);

  const mc::McEstimate cap = mc::estimate_capacity(p, Link::Destination, cfg);
  suite.add("capacity_vs_mc/" + tag,
            capacity::avg_capacity(p, Link::Destination) - cap.mean,
            3.0 * cap.std_error);

  const double z = 1.0;
  const mc::McEstimate m = mc::estimate_mgf(p, Link::Destination, z, cfg);
  suite.add("mgf_vs_mc/" + tag, mgf::mgf_snr(p, Link::Destination, z) - m.mean,
            3.0 * m.std_error);
}

}  // namespace

std::vector<CheckResult> run_all(const Options& opts, std::ostream* log) {
  Suite suite;
  analytic_checks(suite);

  struct Case {
    Model model;
    int n;
  };
  std::vector<Case> cases;
  for (Model model : {Model::AccessPoint, Model::Relay})
    for (int n : {1, 2, 4}) cases.push_back({model, n});

  unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, cases.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cases.size()) return;
        mc_checks(suite, cases[i].model, cases[i].n, opts);
      }
    });
  for (auto& t : pool) t.join();

  std::sort(suite.checks.begin(), suite.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });

  if (log) {
    for (const CheckResult& c : suite.checks) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-4s %-42s deviation=%.3e bound=%.3e\n",
                    c.passed ? "ok" : "FAIL", c.name.c_str(), c.value, c.bound);
      (*log) << buf;
    }
  }
  return std::move(suite.checks);
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

}  // namespace riscap::validate
