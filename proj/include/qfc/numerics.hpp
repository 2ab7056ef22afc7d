#pragma once

#include <functional>

namespace qfc {

/// Composite Simpson rule with n_nodes sample points (n_nodes odd, >= 3).
double composite_simpson(const std::function<double(double)>& f, double a, double b, int n_nodes);

/// Simpson with node doubling until successive estimates agree to rel_tol
/// (absolute agreement when the integral is ~0). Starts at min_nodes
/// (rounded up to odd) and gives up at max_nodes with the last estimate.
double converged_simpson(const std::function<double(double)>& f, double a, double b,
                         int min_nodes, double rel_tol, int max_nodes = (1 << 21) + 1);

struct PeakEstimate {
  double x = 0.0;
  double value = 0.0;
};

/// Dense scan of [a, b] with n_samples points followed by one parabolic
/// refinement through the best sample and its neighbours.
PeakEstimate find_peak(const std::function<double(double)>& f, double a, double b, int n_samples);

/// Runs body(i) for i in [0, n) on up to `threads` worker threads. Falls
/// back to a plain loop for threads <= 1. Exceptions from workers are
/// rethrown on the caller.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace qfc
