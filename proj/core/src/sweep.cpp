#include "riscap/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "riscap/capacity.hpp"
#include "riscap/montecarlo.hpp"
#include "riscap/rng.hpp"

namespace riscap::sweep {

namespace {

constexpr char kHeader[] = "varied,analytic_diff,analytic_clamped,mc_mean,mc_stderr";

void run_indexed(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  unsigned n_workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, count);
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

SystemParams apply_field(SystemParams base, VaryField field, double value) {
  switch (field) {
    case VaryField::SourcePower:
      base.ps_watts = value;
      break;
    case VaryField::EavesdropperDistance:
      base.r_e_m = value;
      break;
    case VaryField::SourceToRisDistance:
      base.r_s_m = value;
      break;
    case VaryField::CellCount:
      base.n_cells = static_cast<int>(std::llround(value));
      break;
  }
  return base;
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string vary_field_name(VaryField f) {
  switch (f) {
    case VaryField::SourcePower: return "ps";
    case VaryField::EavesdropperDistance: return "re";
    case VaryField::SourceToRisDistance: return "rs";
    case VaryField::CellCount: return "n";
  }
  return "?";
}

void SweepSpec::validate() const {
  base.validate();
  if (grid.empty()) throw std::invalid_argument("SweepSpec: grid must not be empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("SweepSpec: grid must be strictly increasing");
  if (vary == VaryField::SourceToRisDistance && base.model != Model::Relay)
    throw std::invalid_argument("SweepSpec: r_s sweeps are only valid for the Relay model");
  for (double v : grid) {
    switch (vary) {
      case VaryField::SourcePower:
        if (!(v >= 0.0)) throw std::invalid_argument("SweepSpec: power grid values must be >= 0");
        break;
      case VaryField::EavesdropperDistance:
      case VaryField::SourceToRisDistance:
        if (!(v > 0.0)) throw std::invalid_argument("SweepSpec: distance grid values must be positive");
        break;
      case VaryField::CellCount:
        if (!(v >= 1.0) || v != std::floor(v) || v > 1e9)
          throw std::invalid_argument("SweepSpec: cell-count grid values must be positive integers");
        break;
    }
  }
  if (mc_samples && *mc_samples < 10'000)
    throw std::invalid_argument("SweepSpec: mc_samples must be at least 1e4");
}

std::vector<ResultRecord> run_sweep(const SweepSpec& spec,
                                    const quadrature::QuadratureSpec& quad, int threads) {
  spec.validate();
  quad.validate();
  std::vector<ResultRecord> records(spec.grid.size());
  run_indexed(spec.grid.size(), threads, [&](std::size_t i) {
    const SystemParams params = apply_field(spec.base, spec.vary, spec.grid[i]);
    params.validate();
    const capacity::SecrecyResult sr = capacity::avg_secrecy_capacity(params, quad);
    ResultRecord rec;
    rec.varied_value = spec.grid[i];
    rec.analytic_secrecy_difference = sr.secrecy_difference;
    rec.analytic_clamped = sr.secrecy_clamped;
    if (spec.mc_samples) {
      mc::McConfig cfg;
      cfg.sample_count = *spec.mc_samples;
      cfg.base_seed = rng::derive_seed(spec.mc_seed, i);
      const mc::SecrecyEstimate est = mc::estimate_secrecy(params, cfg);
      rec.mc_mean = est.unclamped.mean;
      rec.mc_std_error = est.unclamped.std_error;
    }
    records[i] = rec;
  });
  return records;
}

FigureSpec figure_preset(FigureName name, int n_cells_base,
                         std::optional<std::int64_t> mc_samples, std::uint64_t mc_seed) {
  if (n_cells_base < 1)
    throw std::invalid_argument("figure_preset: cell count must be positive");
  SystemParams base;  // defaults: 10 W, N0 = 1 W, beta = 2.7, r_D = 4 m, r_E = 8 m
  FigureSpec fig;
  std::vector<double> grid;
  const int cells[2] = {n_cells_base, 2 * n_cells_base};

  auto add_series = [&](std::string label, SystemParams params) {
    SweepSpec s;
    s.base = params;
    s.grid = grid;
    s.mc_samples = mc_samples;
    s.mc_seed = rng::derive_seed(mc_seed, fig.series.size());
    s.vary = (name == FigureName::Fig6) ? VaryField::SourceToRisDistance
                                        : VaryField::SourcePower;
    fig.series.push_back({std::move(label), std::move(s)});
  };

  switch (name) {
    case FigureName::Fig4:
    case FigureName::Fig5: {
      fig.name = name == FigureName::Fig4 ? "fig4" : "fig5";
      for (int p = 1; p <= 30; ++p) grid.push_back(p);
      if (name == FigureName::Fig5) {
        base.model = Model::Relay;
        base.r_s_m = 10.0;
      }
      for (double re : {8.0, 12.0})
        for (int n : cells) {
          SystemParams p = base;
          p.r_e_m = re;
          p.n_cells = n;
          add_series("rE=" + fmt9(re) + "_N=" + std::to_string(n), p);
        }
      break;
    }
    case FigureName::Fig6: {
      fig.name = "fig6";
      for (int r = 5; r <= 25; ++r) grid.push_back(r);
      base.model = Model::Relay;
      base.r_s_m = 10.0;
      base.r_e_m = 12.0;
      for (double ps : {10.0, 20.0})
        for (int n : cells) {
          SystemParams p = base;
          p.ps_watts = ps;
          p.n_cells = n;
          add_series("Ps=" + fmt9(ps) + "_N=" + std::to_string(n), p);
        }
      break;
    }
  }
  return fig;
}

FigureResults run_figure(const FigureSpec& spec, const quadrature::QuadratureSpec& quad,
                         int threads) {
  FigureResults out;
  out.name = spec.name;
  for (const FigureSeries& s : spec.series)
    out.series.emplace_back(s.label, run_sweep(s.spec, quad, threads));
  return out;
}

// --- CSV ------------------------------------------------------------------

namespace {

void write_record_tail(std::ostream& os, const ResultRecord& r) {
  os << fmt9(r.varied_value) << ',' << fmt9(r.analytic_secrecy_difference) << ','
     << fmt9(r.analytic_clamped) << ',';
  if (r.mc_mean) os << fmt9(*r.mc_mean);
  os << ',';
  if (r.mc_std_error) os << fmt9(*r.mc_std_error);
  os << '\n';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_num(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("CSV: malformed number '" + s + "'");
  return v;
}

ResultRecord parse_record(const std::vector<std::string>& cells, std::size_t offset) {
  ResultRecord r;
  r.varied_value = parse_num(cells[offset]);
  r.analytic_secrecy_difference = parse_num(cells[offset + 1]);
  r.analytic_clamped = parse_num(cells[offset + 2]);
  const bool has_mean = !cells[offset + 3].empty();
  const bool has_se = !cells[offset + 4].empty();
  if (has_mean != has_se)
    throw std::invalid_argument("CSV: mc_mean and mc_stderr must be present together");
  if (has_mean) {
    r.mc_mean = parse_num(cells[offset + 3]);
    r.mc_std_error = parse_num(cells[offset + 4]);
  }
  return r;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ResultRecord>& records) {
  os << kHeader << '\n';
  for (const ResultRecord& r : records) write_record_tail(os, r);
}

std::vector<ResultRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader)
    throw std::invalid_argument("CSV: missing or unexpected header");
  std::vector<ResultRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != 5) throw std::invalid_argument("CSV: expected 5 columns");
    records.push_back(parse_record(cells, 0));
  }
  return records;
}

void write_csv(std::ostream& os, const FigureResults& results) {
  os << "series," << kHeader << '\n';
  for (const auto& [label, records] : results.series)
    for (const ResultRecord& r : records) {
      os << label << ',';
      write_record_tail(os, r);
    }
}

FigureResults read_figure_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != std::string("series,") + kHeader)
    throw std::invalid_argument("CSV: missing or unexpected figure header");
  FigureResults out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != 6) throw std::invalid_argument("CSV: expected 6 columns");
    if (out.series.empty() || out.series.back().first != cells[0])
      out.series.emplace_back(cells[0], std::vector<ResultRecord>{});
    out.series.back().second.push_back(parse_record(cells, 1));
  }
  return out;
}

// --- JSON -----------------------------------------------------------------

namespace {

nlohmann::json record_to_json(const ResultRecord& r) {
  nlohmann::json j{{"varied", r.varied_value},
                   {"analytic_diff", r.analytic_secrecy_difference},
                   {"analytic_clamped", r.analytic_clamped}};
  if (r.mc_mean) {
    j["mc_mean"] = *r.mc_mean;
    j["mc_stderr"] = *r.mc_std_error;
  }
  return j;
}

}  // namespace

void write_json(std::ostream& os, const std::vector<ResultRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRecord& r : records) arr.push_back(record_to_json(r));
  os << arr.dump(2) << '\n';
}

void write_json(std::ostream& os, const FigureResults& results) {
  nlohmann::json out{{"name", results.name}, {"series", nlohmann::json::array()}};
  for (const auto& [label, records] : results.series) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRecord& r : records) arr.push_back(record_to_json(r));
    out["series"].push_back({{"label", label}, {"records", std::move(arr)}});
  }
  os << out.dump(2) << '\n';
}

}  // namespace riscap::sweep
