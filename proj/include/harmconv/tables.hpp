#pragma once

#include <string>
#include <vector>

#include "harmconv/error.hpp"

namespace harmconv {

// An angle p*pi/q kept symbolic so the printed label and the value agree.
struct PiFraction {
  int num = 0;
  int den = 1;
  double radians() const;
  std::string label() const;
};

// One published row: |w~_n(z)| at z = radius * e^{i arg} for f * f_n.
struct TableRow {
  int n = 2;
  double a = 0.0;
  PiFraction theta{1, 1};
  double radius = 0.99;
  PiFraction arg;
  double published = 0.0;

  Cx z() const;
};

// Table 1: theta = pi, 14 rows (n = 2..15). Table 2: general theta, 14 rows.
const std::vector<TableRow>& table_rows(int which);

struct TableResult {
  TableRow row;
  double computed = 0.0;
  double abs_diff = 0.0;
  bool within_tolerance = false;
};

inline constexpr double kTableTolerance = 1e-4;

// Throws ParameterError for an unknown table number.
std::vector<TableResult> compute_table(int which, double tol = kTableTolerance);

}  // namespace harmconv
