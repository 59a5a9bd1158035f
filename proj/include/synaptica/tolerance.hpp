#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace synaptica::tol {

// Numerical decision thresholds. These are fixed; only the report tolerance
// below may be overridden at run time.

/// PSD cone slack for symmetric matrices, relative to max(1, ||a||).
inline constexpr double kSymCone = 1e-9;
/// Pointwise cone slack for finite function algebras.
inline constexpr double kFunctionCone = 1e-12;
/// Eigenvalue clustering and rank decisions, relative to max(1, ||a||).
inline constexpr double kRank = 1e-8;
/// Largest symmetrization correction accepted when building a SymMatrix.
inline constexpr double kSymmetry = 1e-10;

/// Default tolerance used when comparing residuals in reports.
inline constexpr double kReportDefault = 1e-9;

inline double scale(double norm) { return std::max(1.0, norm); }

/// Report tolerance, honouring the SYNAPTICA_TOL environment variable.
inline double report_tolerance() {
  if (const char* env = std::getenv("SYNAPTICA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) return v;
  }
  return kReportDefault;
}

}  // namespace synaptica::tol
