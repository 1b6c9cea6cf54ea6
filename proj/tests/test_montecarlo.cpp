#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "riscap/capacity.hpp"
#include "riscap/montecarlo.hpp"

using namespace riscap;

namespace {

SystemParams scenario(Model model, int n) {
  SystemParams p;
  p.model = model;
  p.n_cells = n;
  if (model == Model::Relay) p.r_s_m = 10.0;
  return p;
}

}  // namespace

TEST_CASE("config validation") {
  mc::McConfig cfg;
  cfg.sample_count = 1000;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.chunk_size = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("snr pairs are deterministic in the seed") {
  const SystemParams p = scenario(Model::Relay, 3);
  rng::Stream a = rng::make_stream(42), b = rng::make_stream(42);
  for (int i = 0; i < 50; ++i) {
    const auto x = mc::simulate_snr_pair(p, a);
    const auto y = mc::simulate_snr_pair(p, b);
    CHECK(x.gamma_d == y.gamma_d);
    CHECK(x.gamma_e == y.gamma_e);
    CHECK(x.gamma_d >= 0.0);
    CHECK(x.gamma_e >= 0.0);
    CHECK(x.gamma_d != x.gamma_e);  // independent draws
  }
}

TEST_CASE("mean snr follows scale times cells times cascade mean") {
  const int n_samples = 1'000'000;
  {
    const SystemParams p = scenario(Model::AccessPoint, 4);
    rng::Stream s = rng::make_stream(271828);
    double acc = 0.0;
    for (int i = 0; i < n_samples; ++i) acc += mc::simulate_snr_pair(p, s).gamma_d;
    const double want =
        p.snr_scale(Link::Destination) * p.n_cells * (std::numbers::pi / 2.0);
    CHECK(std::abs(acc / n_samples - want) < 0.01 * want);
  }
  {
    const SystemParams p = scenario(Model::Relay, 2);
    rng::Stream s = rng::make_stream(161803);
    double acc = 0.0;
    for (int i = 0; i < n_samples; ++i) acc += mc::simulate_snr_pair(p, s).gamma_d;
    const double want = p.snr_scale(Link::Destination) * p.n_cells *
                        std::pow(std::numbers::pi / 2.0, 1.5);
    CHECK(std::abs(acc / n_samples - want) < 0.015 * want);
  }
}

TEST_CASE("estimates are pure functions of params and config") {
  const SystemParams p = scenario(Model::AccessPoint, 2);
  mc::McConfig cfg;
  cfg.sample_count = 50'000;
  cfg.base_seed = 5;
  const auto a = mc::estimate_secrecy(p, cfg);
  const auto b = mc::estimate_secrecy(p, cfg);
  CHECK(a.clamped.mean == b.clamped.mean);
  CHECK(a.unclamped.mean == b.unclamped.mean);
  CHECK(a.unclamped.std_error == b.unclamped.std_error);
  CHECK(a.clamped.sample_count == cfg.sample_count);
}

TEST_CASE("equal distances: zero signed mean, positive clamped mean") {
  SystemParams p = scenario(Model::AccessPoint, 2);
  p.r_e_m = p.r_d_m;
  mc::McConfig cfg;
  cfg.sample_count = 200'000;
  cfg.base_seed = 9;
  const auto est = mc::estimate_secrecy(p, cfg);
  CHECK(std::abs(est.unclamped.mean) <= 3.0 * est.unclamped.std_error);
  CHECK(est.clamped.mean > 0.0);
  CHECK(est.clamped.mean >= std::max(est.unclamped.mean, 0.0) -
                                3.0 * est.unclamped.std_error);
}

TEST_CASE("zero source power gives identically zero secrecy") {
  SystemParams p = scenario(Model::AccessPoint, 2);
  p.ps_watts = 0.0;
  mc::McConfig cfg;
  cfg.sample_count = 20'000;
  const auto est = mc::estimate_secrecy(p, cfg);
  CHECK(est.unclamped.mean == 0.0);
  CHECK(est.clamped.mean == 0.0);
  CHECK(est.unclamped.std_error == 0.0);
}

TEST_CASE("standard error shrinks like the square root of the sample count") {
  const SystemParams p = scenario(Model::Relay, 2);
  mc::McConfig small, big;
  small.sample_count = 10'000;
  small.base_seed = 21;
  big.sample_count = 40'000;
  big.base_seed = 21;
  const auto a = mc::estimate_secrecy(p, small);
  const auto b = mc::estimate_secrecy(p, big);
  const double ratio = b.unclamped.std_error / a.unclamped.std_error;
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
}

TEST_CASE("secrecy estimate brackets the analytic value, both models") {
  for (Model model : {Model::AccessPoint, Model::Relay}) {
    const SystemParams p = scenario(model, 2);
    mc::McConfig cfg;
    cfg.sample_count = 1'000'000;
    cfg.base_seed = 1234;
    const auto est = mc::estimate_secrecy(p, cfg);
    const auto sr = capacity::avg_secrecy_capacity(p);
    CHECK(std::abs(sr.secrecy_difference - est.unclamped.mean) <=
          3.0 * est.unclamped.std_error);
  }
}

TEST_CASE("capacity estimate brackets the analytic capacity") {
  const SystemParams p = scenario(Model::AccessPoint, 4);
  mc::McConfig cfg;
  cfg.sample_count = 1'000'000;
  cfg.base_seed = 4321;
  const auto est = mc::estimate_capacity(p, Link::Eavesdropper, cfg);
  CHECK(std::abs(capacity::avg_capacity(p, Link::Eavesdropper) - est.mean) <=
        3.0 * est.std_error);
}

TEST_CASE("chunk layout is part of the contract") {
  // same seed, different chunk sizes: different substreams, both valid;
  // estimates must agree statistically but not bitwise
  const SystemParams p = scenario(Model::AccessPoint, 1);
  mc::McConfig a, b;
  a.sample_count = b.sample_count = 100'000;
  a.base_seed = b.base_seed = 88;
  a.chunk_size = 1000;
  b.chunk_size = 100'000;
  const auto ea = mc::estimate_secrecy(p, a);
  const auto eb = mc::estimate_secrecy(p, b);
  CHECK(std::abs(ea.unclamped.mean - eb.unclamped.mean) <=
        3.0 * (ea.unclamped.std_error + eb.unclamped.std_error));
  // repeated runs with the same layout are bit-identical
  const auto ea2 = mc::estimate_secrecy(p, a);
  CHECK(ea.unclamped.mean == ea2.unclamped.mean);
}
