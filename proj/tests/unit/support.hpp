#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "harmconv/error.hpp"

namespace test_support {

using harmconv::Cx;

// Uniform samples in the disk |z| <= r_max (area measure), fixed seed.
inline std::vector<Cx> disk_samples(std::size_t count, double r_max, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Cx> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::polar(r_max * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
  return out;
}

inline double dist(Cx a, Cx b) { return std::abs(a - b); }

}  // namespace test_support
