#pragma once

#include <functional>

namespace treenergy {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  int max_panels = 50000;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int panels = 0;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b].
/// Panels are split worst-first with deterministic tie-breaking and the
/// final sum runs in fixed (left-to-right) panel order, so the result is
/// bit-stable across runs. Throws QuadratureFailure if the tolerance is
/// not reached within max_panels.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opts = {});

}  // namespace treenergy
