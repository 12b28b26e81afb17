// harmconv: tables, dilatation scans, univalency radius, figures and the
// series oracle for convolutions of right half-plane harmonic maps.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "harmconv/analysis.hpp"
#include "harmconv/angle.hpp"
#include "harmconv/convolution.hpp"
#include "harmconv/kernels.hpp"
#include "harmconv/render.hpp"
#include "harmconv/report_json.hpp"
#include "harmconv/series.hpp"
#include "harmconv/tables.hpp"

using namespace harmconv;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;

struct MapOptions {
  std::string family = "f1";
  int n = 2;
  std::string theta;
  double a = 0.0;
};

void add_map_options(CLI::App* cmd, MapOptions& m) {
  cmd->add_option("--family", m.family, "Right factor: f0, f1 or fn")
      ->check(CLI::IsMember({"f0", "f1", "fn"}))
      ->capture_default_str();
  cmd->add_option("--n", m.n, "Dilatation power for fn")->capture_default_str();
  cmd->add_option("--theta", m.theta,
                  "Rotation angle, e.g. pi/6, -7pi/8 or radians (default 0 for f1, pi for fn)");
  cmd->add_option("--a", m.a, "Parameter a of the left factor, in (-1, 1)")->required();
}

ConvolutionSpec build_spec(const MapOptions& m) {
  if (m.family == "f0") return make_convolution(m.a, make_f0());
  if (m.family == "f1") return make_convolution(m.a, make_f1(m.theta.empty() ? 0.0 : parse_angle(m.theta)));
  return make_convolution(m.a, make_fn(m.n, m.theta.empty() ? std::numbers::pi : parse_angle(m.theta)));
}

std::string z_label(const TableRow& row) {
  PiFraction arg = row.arg;
  const char* sign = arg.num < 0 ? "-" : "";
  arg.num = std::abs(arg.num);
  return fmt::format("{}e^({}i{})", row.radius, sign, arg.label());
}

int cmd_table(int which, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = compute_table(which);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.within_tolerance;

  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.row.n},
                     {"a", r.row.a},
                     {"theta", r.row.theta.label()},
                     {"radius", r.row.radius},
                     {"arg", r.row.arg.label()},
                     {"computed", r.computed},
                     {"published", r.row.published},
                     {"abs_diff", r.abs_diff},
                     {"within_tolerance", r.within_tolerance}});
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,a,theta,radius,arg,computed,published,abs_diff,within_tolerance\n";
    for (const auto& r : rows)
      std::cout << fmt::format("{},{},{},{},{},{:.8f},{},{:.3e},{}\n", r.row.n, r.row.a,
                               r.row.theta.label(), r.row.radius, r.row.arg.label(), r.computed,
                               r.row.published, r.abs_diff, r.within_tolerance ? 1 : 0);
  } else {
    std::cout << fmt::format("{:>3} {:>5} {:>8} {:>15} {:>11} {:>11} {:>10}\n", "n", "a", "theta", "z",
                             "computed", "published", "|diff|");
    for (const auto& r : rows)
      std::cout << fmt::format("{:>3} {:>5} {:>8} {:>15} {:>11.6f} {:>11} {:>10.2e}{}\n", r.row.n,
                               r.row.a, r.row.theta.label(),
                               z_label(r.row), r.computed,
                               r.row.published, r.abs_diff, r.within_tolerance ? "" : "  MISMATCH");
    std::cout << fmt::format("table {}: {} rows, {:.3f} s, {}\n", which, rows.size(), secs,
                             ok ? "all within 1e-4" : "some rows outside 1e-4");
  }
  return ok ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dilatation tables, univalency checks and figures for harmonic convolutions"};
  app.require_subcommand(1);

  int table_which = 1;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Recompute a published table of |w~_n(z)|");
  table->add_option("which", table_which, "Table number (1 or 2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  MapOptions check_map;
  int check_radii = 60, check_angles = 720;
  bool check_strict = false;
  std::string check_format = "json";
  auto* check = app.add_subcommand("check", "Scan |w~| over a polar grid of the disk");
  add_map_options(check, check_map);
  check->add_option("--radii", check_radii, "Number of radii (geometric toward 0.999)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--angles", check_angles, "Angles per radius")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--format", check_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  check->add_flag("--strict", check_strict, "Exit 1 when the scan finds a violation");

  MapOptions radius_map;
  double radius_tol = 1e-4;
  RadiusOptions radius_opts;
  auto* radius = app.add_subcommand("radius", "Estimate the univalency radius");
  add_map_options(radius, radius_map);
  radius->add_option("--tol", radius_tol, "Bisection tolerance")
      ->check(CLI::Range(1e-12, 0.5))
      ->capture_default_str();
  radius->add_option("--angles", radius_opts.angles, "Angles per ring")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  radius->add_option("--radii", radius_opts.coarse_radii, "Coarse rings before bisection")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  MapOptions render_map;
  FigureSpec fig;
  StrokeStyle style;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Write the image of concentric circles and rays as SVG");
  add_map_options(render, render_map);
  render->add_option("--out", render_out, "Output SVG path")->required();
  render->add_option("--rings", fig.rings)->capture_default_str();
  render->add_option("--rays", fig.rays)->capture_default_str();
  render->add_option("--samples", fig.samples_per_curve, "Samples per curve")->capture_default_str();
  render->add_option("--max-radius", fig.max_radius)->capture_default_str();
  render->add_option("--width", fig.width_px)->capture_default_str();
  render->add_option("--height", fig.height_px)->capture_default_str();
  std::vector<double> view;
  render->add_option("--view", view, "Fixed window x_min,x_max,y_min,y_max (default: auto-fit)")
      ->expected(4)
      ->delimiter(',');
  render->add_option("--stroke", style.ring_color, "Ring stroke colour")->capture_default_str();
  render->add_option("--ray-stroke", style.ray_color, "Ray stroke colour")->capture_default_str();
  render->add_option("--stroke-width", style.width)->capture_default_str();

  MapOptions oracle_map;
  int oracle_order = 256, oracle_samples = 100;
  std::uint64_t oracle_seed = 1;
  double oracle_radius = 0.7;
  auto* oracle = app.add_subcommand("oracle", "Compare the closed-form dilatation with the series oracle");
  add_map_options(oracle, oracle_map);
  oracle->add_option("--N", oracle_order, "Series truncation order")
      ->check(CLI::Range(8, 4096))
      ->capture_default_str();
  oracle->add_option("--samples", oracle_samples, "Random points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--seed", oracle_seed)->capture_default_str();
  oracle->add_option("--max-radius", oracle_radius)->check(CLI::Range(0.0, 0.9))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_which, table_format);

    if (*check) {
      const ConvolutionSpec spec = build_spec(check_map);
      GridSpec grid{geometric_radii(check_radii), check_angles};
      const UnivalencyReport report = scan_dilatation(spec, grid);
      if (check_format == "json") {
        json out = to_json(report);
        out["mapping"] = spec.describe();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << fmt::format("{}\nmax |w~| = {:.9f} at {:.6f}{:+.6f}i\nviolations: {}\n"
                                 "critical points: {}\nskipped: {}\nkernel: {}\n",
                                 spec.describe(), report.max_modulus, report.argmax.real(),
                                 report.argmax.imag(), report.violations.size(),
                                 report.critical_points.size(), report.skipped,
                                 kernels::to_string(kernels::active_isa()));
      }
      return check_strict && !report.violations.empty() ? kExitTolerance : kExitOk;
    }

    if (*radius) {
      const ConvolutionSpec spec = build_spec(radius_map);
      const RadiusEstimate est = univalency_radius(spec, radius_tol, radius_opts);
      json out{{"mapping", spec.describe()}, {"radius", est.radius}, {"verified", est.verified}};
      out["first_violation"] = est.first_violation ? json(*est.first_violation) : json(nullptr);
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*render) {
      const ConvolutionSpec spec = build_spec(render_map);
      if (!view.empty()) fig.view = std::array<double, 4>{view[0], view[1], view[2], view[3]};
      const Webbing web = sample_webbing(spec, fig);
      std::ofstream file(render_out, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << render_out << " for writing\n";
        return kExitUsage;
      }
      file << render_svg(web, spec, fig, style);
      std::cerr << fmt::format("wrote {} ({} curves, {} dropped samples)\n", render_out,
                               web.curves.size(), web.dropped);
      return kExitOk;
    }

    if (*oracle) {
      const ConvolutionSpec spec = build_spec(oracle_map);
      const SeriesDilatation series(conv_series(spec, oracle_order));
      std::mt19937_64 rng(oracle_seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      double worst = 0.0;
      Cx worst_z{0.0};
      int used = 0, skipped = 0;
      for (int s = 0; s < oracle_samples; ++s) {
        const Cx z = std::polar(oracle_radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        try {
          const double dev = std::abs(conv_dilatation(spec, z) - series(z));
          if (dev > worst) worst = dev, worst_z = z;
          ++used;
        } catch (const CriticalPointError&) {
          ++skipped;
        }
      }
      std::cout << fmt::format("{}\nN = {}, points = {} (skipped {} critical)\n"
                               "max deviation = {:.3e} at {:.6f}{:+.6f}i\n",
                               spec.describe(), oracle_order, used, skipped, worst, worst_z.real(),
                               worst_z.imag());
      return worst <= 1e-8 ? kExitOk : kExitTolerance;
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  }
  return kExitUsage;
}
