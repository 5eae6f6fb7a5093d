#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace thetanull {

/// Neumaier's variant of Kahan summation. Results depend only on the order in
/// which terms are added.
class NeumaierSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double result() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexNeumaierSum {
 public:
  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> result() const noexcept { return {re_.result(), im_.result()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

/// Runs fn(i) for i in [0, n) on up to `threads` workers with a static
/// schedule. Callers write into pre-sized, index-addressed storage, so the
/// result never depends on the thread count. If any call throws, the
/// exception of the lowest index is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers = threads <= 1 ? 1 : std::min<std::size_t>(threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace thetanull
