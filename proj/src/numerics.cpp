#include "qfc/numerics.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qfc {

double composite_simpson(const std::function<double(double)>& f, double a, double b,
                         int n_nodes) {
  if (n_nodes < 3 || n_nodes % 2 == 0)
    throw std::invalid_argument("composite_simpson needs an odd node count >= 3");
  if (a == b) return 0.0;
  const double h = (b - a) / (n_nodes - 1);
  double odd = 0.0, even = 0.0;
  for (int k = 1; k < n_nodes - 1; ++k) {
    const double fx = f(a + k * h);
    if (k % 2) odd += fx;
    else even += fx;
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

double converged_simpson(const std::function<double(double)>& f, double a, double b,
                         int min_nodes, double rel_tol, int max_nodes) {
  if (a == b) return 0.0;
  int n = std::max(3, min_nodes);
  if (n % 2 == 0) ++n;
  double prev = composite_simpson(f, a, b, n);
  while (n < max_nodes) {
    n = 2 * (n - 1) + 1;
    const double cur = composite_simpson(f, a, b, n);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

PeakEstimate find_peak(const std::function<double(double)>& f, double a, double b,
                       int n_samples) {
  if (n_samples < 3) throw std::invalid_argument("find_peak needs at least 3 samples");
  if (!(b > a)) throw std::invalid_argument("find_peak needs b > a");
  const double h = (b - a) / (n_samples - 1);
  int best = 0;
  std::vector<double> vals(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    vals[k] = f(a + k * h);
    if (vals[k] > vals[best]) best = k;
  }
  PeakEstimate est{a + best * h, vals[best]};
  if (best > 0 && best < n_samples - 1) {
    const double y0 = vals[best - 1], y1 = vals[best], y2 = vals[best + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom < 0.0) {  // genuine local cap
      const double shift = 0.5 * (y0 - y2) / denom;
      const double x = est.x + shift * h;
      const double v = f(x);
      if (v > est.value) est = {x, v};
    }
  }
  return est;
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (n <= 0) return;
  if (threads <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int workers = std::min(threads, n);
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace qfc
