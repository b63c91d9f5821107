#pragma once

// Independent reference tools for the tests: a seeded generator for property
// checks and a composite Simpson rule that shares no code with the library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace sdt_test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5d7c0ffeeULL) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  /// log-uniform on [lo, hi], lo > 0
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

/// Composite Simpson rule with n (even) intervals.
template <class F>
double simpson(F&& f, double a, double b, int n = 20000) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace sdt_test
