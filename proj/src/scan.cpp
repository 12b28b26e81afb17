#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "harmconv/analysis.hpp"
#include "harmconv/kernels.hpp"
#include "harmconv/parallel.hpp"

namespace harmconv {
namespace {

constexpr std::size_t kChunk = 2048;

enum class NodeStatus : unsigned char { Ok, Critical, Skipped };

struct Evaluated {
  std::vector<Cx> omega;
  std::vector<NodeStatus> status;
};

bool guarded(const ConvolutionSpec& spec, Cx z) {
  if (!(std::abs(z) < 1.0)) return true;
  if (std::abs(z) < 1.0 - kSingularGuard) return false;  // every singularity is on the circle
  for (const Cx& s : spec.singularities())
    if (std::abs(z - s) < kSingularGuard) return true;
  return false;
}

Evaluated evaluate(const ConvolutionSpec& spec, const std::vector<double>& re,
                   const std::vector<double>& im) {
  const std::size_t count = re.size();
  const kernels::DerivativeParams params = kernels::make_params(spec);
  std::vector<double> hr(count), hi(count), gr(count), gi(count);
  std::vector<unsigned char> skip(count, 0);
  for (std::size_t i = 0; i < count; ++i) skip[i] = guarded(spec, {re[i], im[i]});

  parallel_for(count, kChunk, [&](std::size_t b, std::size_t e) {
    // Guarded nodes are evaluated at 0 and discarded below.
    std::vector<double> zr(re.begin() + std::ptrdiff_t(b), re.begin() + std::ptrdiff_t(e));
    std::vector<double> zi(im.begin() + std::ptrdiff_t(b), im.begin() + std::ptrdiff_t(e));
    for (std::size_t k = b; k < e; ++k)
      if (skip[k]) zr[k - b] = zi[k - b] = 0.0;
    const std::size_t n = e - b;
    kernels::derivatives(params, {zr, zi},
                         {std::span(hr).subspan(b, n), std::span(hi).subspan(b, n),
                          std::span(gr).subspan(b, n), std::span(gi).subspan(b, n)});
  });

  Evaluated out;
  out.omega.resize(count);
  out.status.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Cx hp(hr[i], hi[i]);
    if (skip[i]) {
      out.status[i] = NodeStatus::Skipped;
    } else if (!(std::abs(hp) > kCriticalThreshold)) {
      out.status[i] = NodeStatus::Critical;
    } else {
      out.status[i] = NodeStatus::Ok;
      out.omega[i] = Cx(gr[i], gi[i]) / hp;
    }
  }
  return out;
}

// max |w~| over K equispaced points on |z| = r; +inf if a critical point is hit.
double ring_max(const ConvolutionSpec& spec, double r, int angles) {
  std::vector<double> re(static_cast<std::size_t>(angles)), im(re.size());
  for (int j = 0; j < angles; ++j) {
    const Cx z = std::polar(r, 2.0 * std::numbers::pi * j / angles);
    re[std::size_t(j)] = z.real();
    im[std::size_t(j)] = z.imag();
  }
  const Evaluated ev = evaluate(spec, re, im);
  double m = 0.0;
  for (std::size_t i = 0; i < ev.omega.size(); ++i) {
    if (ev.status[i] == NodeStatus::Critical) return std::numeric_limits<double>::infinity();
    if (ev.status[i] == NodeStatus::Ok) m = std::max(m, std::abs(ev.omega[i]));
  }
  return m;
}

}  // namespace

Cx GridSpec::node(std::size_t radius_index, int angle_index) const {
  return std::polar(radii[radius_index], 2.0 * std::numbers::pi * angle_index / angles_count);
}

std::vector<double> geometric_radii(int count, double r_min, double r_max) {
  if (count < 1) throw ParameterError("geometric_radii: count must be >= 1");
  if (!(0.0 < r_min && r_min <= r_max && r_max < 1.0))
    throw ParameterError("geometric_radii: need 0 < r_min <= r_max < 1");
  std::vector<double> radii(static_cast<std::size_t>(count));
  if (count == 1) {
    radii[0] = r_max;
    return radii;
  }
  const double d0 = 1.0 - r_min, d1 = 1.0 - r_max;
  for (int i = 0; i < count; ++i)
    radii[std::size_t(i)] = 1.0 - d0 * std::pow(d1 / d0, double(i) / (count - 1));
  radii.back() = r_max;
  return radii;
}

GridSpec default_grid() { return {geometric_radii(60), 720}; }

void validate(const GridSpec& grid) {
  if (grid.radii.empty()) throw ParameterError("GridSpec: no radii");
  if (grid.angles_count < 1) throw ParameterError("GridSpec: angles_count must be >= 1");
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    const double r = grid.radii[i];
    if (!(r > 0.0 && r <= kMaxGridRadius))
      throw ParameterError("GridSpec: radii must lie in (0, 0.999]");
    if (i > 0 && !(r > grid.radii[i - 1]))
      throw ParameterError("GridSpec: radii must be strictly increasing");
  }
}

UnivalencyReport scan_dilatation(const ConvolutionSpec& spec, const GridSpec& grid) {
  validate(grid);
  const std::size_t count = grid.size();
  std::vector<double> re(count), im(count);
  std::vector<Cx> nodes(count);
  for (std::size_t i = 0; i < grid.radii.size(); ++i)
    for (int j = 0; j < grid.angles_count; ++j) {
      const std::size_t idx = i * std::size_t(grid.angles_count) + std::size_t(j);
      nodes[idx] = grid.node(i, j);
      re[idx] = nodes[idx].real();
      im[idx] = nodes[idx].imag();
    }
  const Evaluated ev = evaluate(spec, re, im);

  UnivalencyReport report;
  report.grid = grid;
  bool have_max = false;
  for (std::size_t idx = 0; idx < count; ++idx) {
    switch (ev.status[idx]) {
      case NodeStatus::Skipped: ++report.skipped; continue;
      case NodeStatus::Critical: report.critical_points.push_back(nodes[idx]); continue;
      case NodeStatus::Ok: break;
    }
    const double m = std::abs(ev.omega[idx]);
    if (!have_max || m > report.max_modulus) {
      report.max_modulus = m;
      report.argmax = nodes[idx];
      have_max = true;
    }
    if (m >= 1.0) report.violations.push_back({nodes[idx], m});
  }
  return report;
}

std::vector<std::optional<Cx>> dilatation_at(const ConvolutionSpec& spec,
                                             const std::vector<Cx>& points) {
  std::vector<double> re(points.size()), im(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    re[i] = points[i].real();
    im[i] = points[i].imag();
  }
  const Evaluated ev = evaluate(spec, re, im);
  std::vector<std::optional<Cx>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (ev.status[i] == NodeStatus::Ok) out[i] = ev.omega[i];
  return out;
}

RadiusEstimate univalency_radius(const ConvolutionSpec& spec, double tol,
                                 const RadiusOptions& options) {
  if (!(tol >= 1e-6)) throw ParameterError("univalency_radius: tol must be >= 1e-6");
  if (options.angles < 1 || options.coarse_radii < 1)
    throw ParameterError("univalency_radius: angles and coarse_radii must be >= 1");
  const std::vector<double> coarse = geometric_radii(options.coarse_radii);

  RadiusEstimate est;
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  for (const double r : coarse) {
    if (ring_max(spec, r, options.angles) >= 1.0) {
      hi = r;
      bracketed = true;
      break;
    }
    lo = r;
  }
  if (!bracketed) {
    est.radius = 1.0;
    est.verified = true;  // the coarse pass already covered every ring up to 0.999
    return est;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (ring_max(spec, mid, options.angles) >= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  est.radius = lo;
  est.first_violation = hi;
  if (lo > 0.0) {
    const GridSpec check{geometric_radii(60, std::min(0.01, lo), lo), 720};
    const UnivalencyReport rep = scan_dilatation(spec, check);
    est.verified = rep.violations.empty() && rep.critical_points.empty();
  }
  return est;
}

}  // namespace harmconv
