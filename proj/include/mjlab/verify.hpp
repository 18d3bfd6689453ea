#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mjlab/decompose.hpp"
#include "mjlab/kernels.hpp"
#include "mjlab/weil.hpp"

namespace mjlab {

struct Check {
  std::string identity;
  std::string anchor;  // which stated identity the check realises
  int points = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool informational = false;  // reported, never affects the verdict
  std::string note;
  std::vector<double> per_point;

  bool passed() const { return max_residual < tol; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  int failures() const;
  double worst_residual() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::optional<int> two_k;
  std::optional<int> two_m;
  std::optional<std::string> op;
  std::optional<std::string> gen;
  std::optional<double> tol;
  unsigned seed = 20240601u;
  TruncationPolicy policy;
};

const std::vector<std::string>& suite_names();
// Throws ParseError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

// Deterministic sample points with x, u in [-1/2, 1/2], y in [ylo, yhi], |v| <= vmax * y.
std::vector<EvalPoint> sample_points(unsigned seed, int count, double ylo, double yhi, double vmax = 0.3);

// Branch constant relating xi^H_{1/2,-m}(mu-hat_{m,l}) to theta_{m,l}.
inline constexpr double kXiHMuConstant = -1.0;

}  // namespace mjlab
