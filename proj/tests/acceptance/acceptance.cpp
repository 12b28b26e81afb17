// Acceptance criteria 1-10. One PASS/FAIL line per criterion; `--only N`
// runs a single criterion. Exit status is nonzero when any run criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "harmconv/analysis.hpp"
#include "harmconv/complex_special.hpp"
#include "harmconv/convolution.hpp"
#include "harmconv/render.hpp"
#include "harmconv/series.hpp"
#include "harmconv/tables.hpp"

using namespace harmconv;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Cx> disk_points(std::size_t count, double r_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Cx> z(count);
  for (auto& p : z) p = std::polar(r_max * std::sqrt(u(rng)), 2 * kPi * u(rng));
  return z;
}

// a in {-0.9, ..., 0.9} and the seven rotation angles used throughout.
std::vector<double> univalent_grid_a() {
  std::vector<double> a;
  for (int k = -9; k <= 9; ++k) a.push_back(k / 10.0);
  return a;
}
const std::vector<double> kUnivalentGridTheta{0.0, kPi / 6, -kPi / 6, kPi / 3, -kPi / 3, kPi / 2, -kPi / 2, 5 * kPi / 6};

Outcome table_criterion(int which) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = compute_table(which);
  const double secs = seconds_since(t0);
  int ok = 0;
  double worst = 0.0;
  std::string misses;
  for (const auto& r : rows) {
    ok += r.within_tolerance;
    worst = std::max(worst, r.abs_diff);
    if (!r.within_tolerance)
      misses += fmt::format(" [n={} computed {:.6f} printed {}]", r.row.n, r.computed, r.row.published);
  }
  const bool pass = ok == int(rows.size()) && secs < 5.0;
  return {pass, fmt::format("{}/{} rows within 1e-4, max |diff| {:.2e}, {:.3f} s{}", ok, rows.size(), worst,
                            secs, misses)};
}

Outcome criterion3() {
  std::size_t bad_modulus = 0, bad_count = 0, samples = 0;
  double worst = 0.0;
  for (int k = -19; k <= 19; ++k) {
    const double a = k * 0.05;
    if (zeros_in_unit_disk(f0_dilatation_numerator(a)) != 2) ++bad_count;
    for (const Cx z : disk_points(10000, 0.999, 300 + std::uint64_t(k + 19))) {
      const double m = std::abs(conv_dilatation_f0(a, z));
      worst = std::max(worst, m);
      bad_modulus += !(m < 1.0);
      ++samples;
    }
  }
  return {bad_modulus == 0 && bad_count == 0,
          fmt::format("39 values of a, {} samples: {} with |w~| >= 1 (max {:.9f}), {} zero counts != 2",
                      samples, bad_modulus, worst, bad_count)};
}

Outcome criterion4() {
  const GridSpec grid = default_grid();
  std::size_t cases = 0, violating = 0;
  double worst = 0.0;
  for (double a : univalent_grid_a())
    for (double theta : kUnivalentGridTheta) {
      const UnivalencyReport rep = scan_dilatation(make_convolution(a, make_f1(theta)), grid);
      ++cases;
      violating += !rep.violations.empty() || !rep.critical_points.empty();
      worst = std::max(worst, rep.max_modulus);
    }
  double min_re_j = 1e300, min_boundary = 0.0;
  for (double theta : kUnivalentGridTheta) {
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 360; ++j)
        min_re_j = std::min(min_re_j, eval_J(theta, std::polar(0.995 * (i + 0.5) / 100, 2 * kPi * j / 360)).real());
    for (int k = 0; k < 10000; ++k) {
      const BoundaryValue b = J_boundary(theta, 2 * kPi * k / 10000);
      if (!b.infinite) min_boundary = std::min(min_boundary, b.re);
    }
  }
  const bool pass = violating == 0 && min_re_j > 0.0 && min_boundary >= -1e-12;
  return {pass, fmt::format("{} (a, theta) scans on 60x720, {} with violations (max |w~| {:.9f}); "
                            "min Re J interior {:.3e}; min Re J boundary {:.3e}",
                            cases, violating, worst, min_re_j, min_boundary)};
}

std::vector<ConvolutionSpec> oracle_cases() {
  std::vector<ConvolutionSpec> cases;
  for (double a : {-0.5, 0.5}) cases.push_back(make_convolution(a, make_f0()));
  for (double theta : {0.0, kPi / 6, -kPi / 3, 5 * kPi / 6})
    for (double a : {-0.5, 0.5}) cases.push_back(make_convolution(a, make_f1(theta)));
  for (int n : {2, 3, 7, 15})
    for (double a : {0.0, 0.5}) cases.push_back(make_convolution(a, make_fn(n, kPi)));
  for (int n : {2, 4, 10, 15})
    for (double theta : {kPi / 8, -kPi / 2, kPi / 3})
      cases.push_back(make_convolution(n % 4 == 0 ? -0.3 : 0.7, make_fn(n, theta)));
  return cases;
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = oracle_cases();
  double worst = 0.0;
  std::size_t skipped = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const SeriesDilatation oracle(conv_series(cases[c], 256));
    for (const Cx z : disk_points(100, 0.7, 500 + c)) {
      try {
        worst = std::max(worst, std::abs(conv_dilatation(cases[c], z) - oracle(z)));
      } catch (const CriticalPointError&) {
        ++skipped;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {cases.size() == 30 && worst < 1e-8 && skipped == 0 && secs < 60.0,
          fmt::format("{} cases x 100 points, N = 256: max deviation {:.2e}, {} critical, {:.2f} s",
                      cases.size(), worst, skipped, secs)};
}

Outcome criterion6() {
  double worst = 0.0;
  for (double a : {-0.9, -0.3, 0.0, 0.4, 0.9}) {
    const auto spec = make_convolution(a, make_fn(1, kPi));
    for (const Cx z : disk_points(1000, 0.999, 600))
      worst = std::max(worst, std::abs(conv_dilatation(spec, z) - conv_dilatation_f0(a, z)));
  }
  return {worst < 1e-12, fmt::format("5 values of a x 1000 points in |z| <= 0.999: max difference {:.2e}", worst)};
}

Outcome criterion7() {
  const double e1 = std::abs(li2(1.0) - kPi * kPi / 6);
  const double em1 = std::abs(li2(-1.0) + kPi * kPi / 12);
  // Both Landen arguments lie in the closed disk only when Re z <= 1/2.
  double landen = 0.0;
  int used = 0;
  for (const Cx z : disk_points(1200, 0.95, 700)) {
    if (z.real() > 0.5 || used == 500) continue;
    ++used;
    const Cx l = log_principal(1.0 - z);
    landen = std::max(landen, std::abs(li2(z) + li2(z / (z - 1.0)) + 0.5 * l * l));
  }
  return {e1 < 1e-12 && em1 < 1e-12 && landen < 1e-12 && used == 500,
          fmt::format("|Li2(1) - pi^2/6| {:.1e}, |Li2(-1) + pi^2/12| {:.1e}, Landen residual {:.1e} "
                      "over {} points (|z| <= 0.95, Re z <= 1/2)",
                      e1, em1, landen, used)};
}

Outcome criterion8() {
  double worst = 0.0;
  bool kinds = true;
  for (double theta : {kPi / 6, kPi / 3, kPi / 2}) {
    const BoundaryValue at_one = J_boundary(theta, 0.0);
    kinds = kinds && at_one.kind == BoundaryCase::LimitAtOne && !at_one.infinite;
    worst = std::max(worst, std::abs(at_one.value));
    const BoundaryValue top = J_boundary(theta, 2 * kPi - theta);
    kinds = kinds && top.kind == BoundaryCase::LimitAtTwoPiMinusTheta;
    worst = std::max({worst, std::abs(top.re), std::abs(top.value.real()),
                      std::abs(top.value.imag() - 4 * std::tan(theta / 2))});
  }
  return {kinds && worst < 1e-10, fmt::format("theta in {{pi/6, pi/3, pi/2}}: max error {:.1e}", worst)};
}

int horizontal_crossings(const SampledCurve& ring, double c) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < ring.images.size(); ++i) {
    const auto& p = ring.images[i];
    const auto& q = ring.images[i + 1];
    if (p && q) count += ((p->imag() < c) != (q->imag() < c));
  }
  return count;
}

int max_ring_crossings(const Webbing& web) {
  const SampledCurve* outer = nullptr;
  for (const auto& c : web.curves)
    if (c.kind == SampledCurve::Kind::Ring) outer = &c;
  double lo = 1e300, hi = -1e300;
  if (!outer) return 0;
  for (const auto& w : outer->images)
    if (w) lo = std::min(lo, w->imag()), hi = std::max(hi, w->imag());
  int most = 0;
  for (int k = 1; k < 2000; ++k) most = std::max(most, horizontal_crossings(*outer, lo + (hi - lo) * (k + 0.31) / 2000));
  return most;
}

int max_ring_crossings(const ConvolutionSpec& spec, double radius) {
  FigureSpec fig;
  fig.rings = 1;
  fig.rays = 2;
  fig.max_radius = radius;
  return max_ring_crossings(sample_webbing(spec, fig));
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

Outcome criterion9() {
  struct Fig {
    double a, theta;
    const char* label;
  };
  const std::vector<Fig> figure1{{-0.5, kPi / 6, "1a"}, {0.0, kPi / 6, "1b"}, {0.5, kPi / 6, "1c"}, {0.8, kPi / 6, "1d"}};
  const std::vector<Fig> figure2{{0.5, 0.0, "2a"}, {0.5, kPi / 6, "2b"}, {0.5, kPi / 3, "2c"}, {0.5, kPi / 2, "2d"}};
  const FigureSpec fig;
  const std::size_t curves = std::size_t(fig.rings + fig.rays);
  std::string failures, notes;
  double figure1_secs = 0.0;
  for (const auto* set : {&figure1, &figure2})
    for (const Fig& f : *set) {
      const auto spec = make_convolution(f.a, make_f1(f.theta));
      const auto t0 = std::chrono::steady_clock::now();
      const Webbing web = sample_webbing(spec, fig);
      const std::string svg = render_svg(web, spec, fig);
      if (set == &figure1) figure1_secs += seconds_since(t0);
      std::vector<std::string> why;
      if (svg != render_webbing(spec, fig)) why.push_back("not deterministic");
      if (svg.rfind("<?xml", 0) != 0 || count_of(svg, "<svg ") != 1 || count_of(svg, "</svg>") != 1 ||
          count_of(svg, "<g ") != count_of(svg, "</g>"))
        why.push_back("malformed document");
      if (count_of(svg, "<polyline ") != curves || web.dropped != 0) why.push_back("curve count");
      // CHD is a property of the whole-disk image, so the check uses the
      // outermost admissible circle; the default 0.99 circle is reported too.
      const int at_edge = max_ring_crossings(spec, 0.999);
      if (at_edge > 2) why.push_back(fmt::format("outer ring crossed {} times", at_edge));
      const int at_default = max_ring_crossings(web);
      if (at_default > 2) notes += fmt::format(" [{}: |z| = 0.99 image crossed {} times]", f.label, at_default);
      for (const auto& w : why) failures += fmt::format(" [{}: {}]", f.label, w);
    }
  return {failures.empty() && figure1_secs < 10.0,
          fmt::format("8 figures, {} polylines each, Figure 1 set {:.2f} s{}; CHD checked at |z| = 0.999{}", curves,
                      figure1_secs, failures.empty() ? std::string(", structure/determinism/CHD ok") : failures,
                      notes.empty() ? std::string() : "; informational:" + notes)};
}

Outcome criterion10() {
  std::size_t cases = 0, not_one = 0;
  for (double a : univalent_grid_a())
    for (double theta : kUnivalentGridTheta) {
      const RadiusEstimate est = univalency_radius(make_convolution(a, make_f1(theta)), 1e-4);
      ++cases;
      not_one += est.radius != 1.0;
    }
  const RadiusEstimate n2 = univalency_radius(make_convolution(0.5, make_fn(2, kPi)), 1e-4);
  return {not_one == 0 && n2.radius < 0.99 && n2.verified,
          fmt::format("{} univalent-grid cases, {} not 1.0; (n=2, a=0.5, theta=pi) r* = {:.6f}{}", cases, not_one,
                      n2.radius, n2.verified ? " (verified)" : " (verification failed)")};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "criterion must be 1..10\n";
    return 2;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Table 1 reproduction", [] { return table_criterion(1); }},
      {"Table 2 reproduction", [] { return table_criterion(2); }},
      {"f0 * f dilatation bound and zero count", criterion3},
      {"f * f1 scans, Re J interior and boundary", criterion4},
      {"closed form vs Hadamard series oracle", criterion5},
      {"Fn{1, pi} against the f0 formula", criterion6},
      {"dilogarithm values and Landen identity", criterion7},
      {"J boundary limits", criterion8},
      {"figures", criterion9},
      {"univalency radius estimator", criterion10},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && int(i + 1) != only) continue;
    Outcome out{false, ""};
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, fmt::format("exception: {}", e.what())};
    }
    failed += !out.pass;
    std::cout << fmt::format("[{}] {:>2}. {}: {}\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                             out.detail)
              << std::flush;
  }
  return failed == 0 ? 0 : 1;
}
