#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "riscap/quadrature.hpp"
#include "riscap/types.hpp"

namespace riscap::sweep {

enum class VaryField { SourcePower, EavesdropperDistance, SourceToRisDistance, CellCount };

struct SweepSpec {
  SystemParams base{};
  VaryField vary = VaryField::SourcePower;
  std::vector<double> grid;  // nonempty, strictly increasing
  std::optional<std::int64_t> mc_samples{};
  std::uint64_t mc_seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct ResultRecord {
  double varied_value = 0.0;
  double analytic_secrecy_difference = 0.0;  // bits/s/Hz
  double analytic_clamped = 0.0;             // bits/s/Hz
  std::optional<double> mc_mean{};
  std::optional<double> mc_std_error{};
};

// One record per grid value, grid order. Grid points may evaluate
// concurrently (threads = 0 picks the hardware count); output order and
// content do not depend on the worker count. Nothing is emitted on error.
std::vector<ResultRecord> run_sweep(const SweepSpec& spec,
                                    const quadrature::QuadratureSpec& quad = {},
                                    int threads = 0);

enum class FigureName { Fig4, Fig5, Fig6 };

// One plotted curve: a label plus the sweep that produces it.
struct FigureSeries {
  std::string label;
  SweepSpec spec;
};

struct FigureSpec {
  std::string name;
  std::vector<FigureSeries> series;
};

// Sweep families behind the three reference plots. Each preset crosses the
// swept parameter with two sub-series pairs (eavesdropper distance 8/12 m or
// source power 10/20 W, and cell count n0 / 2*n0):
//   fig4  access-point model, source power 1..30 W
//   fig5  relay model, source power 1..30 W
//   fig6  relay model, source-to-array distance 5..25 m at r_E = 12 m
FigureSpec figure_preset(FigureName name, int n_cells_base = 16,
                         std::optional<std::int64_t> mc_samples = {},
                         std::uint64_t mc_seed = 0);

struct FigureResults {
  std::string name;
  std::vector<std::pair<std::string, std::vector<ResultRecord>>> series;
};

FigureResults run_figure(const FigureSpec& spec,
                         const quadrature::QuadratureSpec& quad = {},
                         int threads = 0);

// CSV: header varied,analytic_diff,analytic_clamped,mc_mean,mc_stderr with
// 9 significant digits, '\n' endings, empty cells for absent MC columns.
// Figure files carry one extra leading `series` column.
void write_csv(std::ostream& os, const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_csv(std::istream& is);
void write_csv(std::ostream& os, const FigureResults& results);
FigureResults read_figure_csv(std::istream& is);

// JSON mirrors of the same fields.
void write_json(std::ostream& os, const std::vector<ResultRecord>& records);
void write_json(std::ostream& os, const FigureResults& results);

std::string vary_field_name(VaryField f);

}  // namespace riscap::sweep
