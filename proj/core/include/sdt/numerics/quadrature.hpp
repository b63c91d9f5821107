#pragma once

#include "sdt/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <type_traits>
#include <vector>

namespace sdt::numerics {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  /// Kernel-zero cells visited by the oscillatory engine before giving up.
  int max_oscillation_cells = 200;
  /// Integrand magnitude below which a semi-infinite tail counts as negligible.
  double truncation_threshold = 1e-14;

  /// Throws DomainError when the invariants abs_tol > 0, rel_tol > 0,
  /// max_subdivisions >= 1, max_oscillation_cells >= 4 are violated.
  void validate() const;

  /// Tolerance target for a value of magnitude `magnitude`.
  [[nodiscard]] double target(double magnitude) const {
    return std::max(abs_tol, rel_tol * magnitude);
  }

  /// Copy with both tolerances multiplied by `factor`.
  [[nodiscard]] QuadratureSpec scaled(double factor) const {
    QuadratureSpec s = *this;
    s.abs_tol *= factor;
    s.rel_tol *= factor;
    return s;
  }
};

template <class V>
struct IntegralResult {
  V value{};
  double error_estimate = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 10/21 nodes on [0, 1] (symmetric half), Kronrod weights, and the
// Gauss weights for the odd-indexed nodes.
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.00000000000000000e+00, 1.48874338981631211e-01, 2.94392862701460198e-01,
    4.33395394129247191e-01, 5.62757134668604683e-01, 6.79409568299024406e-01,
    7.80817726586416897e-01, 8.65063366688984511e-01, 9.30157491355708226e-01,
    9.73906528517171720e-01, 9.95657163025808081e-01};
inline constexpr std::array<double, 11> kKronrodWeights = {
    1.49445554002916906e-01, 1.47739104901338491e-01, 1.42775938577060081e-01,
    1.34709217311473326e-01, 1.23491976262065851e-01, 1.09387158802297642e-01,
    9.31254545836976055e-02, 7.50396748109199528e-02, 5.47558965743519960e-02,
    3.25581623079647275e-02, 1.16946388673718743e-02};
inline constexpr std::array<double, 5> kGaussWeights = {
    2.95524224714752870e-01, 2.69266719309996355e-01, 2.19086362515982044e-01,
    1.49451349150580593e-01, 6.66713443086881376e-02};

template <class V>
struct Cell {
  double a;
  double b;
  V value;
  double error;
};

template <class V, class F>
Cell<V> gauss_kronrod_21(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V fc = f(centre);
  V kronrod = fc * kKronrodWeights[0];
  V gauss{};
  double resabs = std::abs(fc) * kKronrodWeights[0];
  std::array<V, 21> fv{};
  fv[0] = fc;
  for (std::size_t j = 1; j < 11; ++j) {
    const double dx = half * kKronrodNodes[j];
    const V f1 = f(centre - dx);
    const V f2 = f(centre + dx);
    fv[2 * j - 1] = f1;
    fv[2 * j] = f2;
    kronrod += (f1 + f2) * kKronrodWeights[j];
    resabs += (std::abs(f1) + std::abs(f2)) * kKronrodWeights[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kGaussWeights[j / 2];
  }
  const V mean = kronrod * 0.5;
  double resasc = kKronrodWeights[0] * std::abs(fc - mean);
  for (std::size_t j = 1; j < 11; ++j) {
    resasc += kKronrodWeights[j] * (std::abs(fv[2 * j - 1] - mean) + std::abs(fv[2 * j] - mean));
  }
  const double ah = std::abs(half);
  resasc *= ah;
  resabs *= ah;
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, kronrod * half, err};
}

template <class V>
bool is_finite_value(const V& v) {
  if constexpr (std::is_floating_point_v<V>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

}  // namespace detail

/// Globally adaptive bisection with the 21-point Gauss-Kronrod rule. The
/// integrand is never evaluated at a or b, so integrable endpoint
/// singularities are allowed. `converged` is set only when the summed error
/// estimate meets spec.target(|value|).
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec)
    -> IntegralResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
  IntegralResult<V> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  auto by_error = [](const detail::Cell<V>& x, const detail::Cell<V>& y) { return x.error < y.error; };
  std::vector<detail::Cell<V>> heap;
  heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 1);
  heap.push_back(detail::gauss_kronrod_21<V>(f, a, b));
  out.evaluations = 21;
  V total = heap.front().value;
  double error = heap.front().error;
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon();
  while (static_cast<int>(heap.size()) < spec.max_subdivisions) {
    if (!detail::is_finite_value(total)) break;
    if (error <= spec.target(std::abs(total))) break;
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Cell<V> worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const double width = worst.b - worst.a;
    if (width <= min_width * std::abs(mid) || width < 1e10 * std::numeric_limits<double>::min()) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), by_error);
      break;
    }
    heap.push_back(detail::gauss_kronrod_21<V>(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(detail::gauss_kronrod_21<V>(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
    out.evaluations += 42;
    total = V{};
    error = 0.0;
    for (const auto& c : heap) {
      total += c.value;
      error += c.error;
    }
  }
  out.value = total;
  out.error_estimate = error;
  out.converged = detail::is_finite_value(total) && error <= spec.target(std::abs(total));
  return out;
}

/// Integral over [a, b] under the map x = a + (b - a) sin^2(th/2), th in [0, pi].
/// Inverse-square-root singularities at either endpoint become regular, as do
/// square-root branch behaviours such as 1/sqrt(b^2 - x^2) at x = b.
template <class F>
auto integrate_endpoint_singular(F&& f, double a, double b, const QuadratureSpec& spec)
    -> IntegralResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  const double len = b - a;
  auto mapped = [&](double th) {
    const double s = std::sin(0.5 * th);
    const double x = a + len * s * s;
    return f(x) * (0.5 * len * std::sin(th));
  };
  return integrate_adaptive(mapped, 0.0, std::numbers::pi, spec);
}

/// Integral over [a, inf) as a sum of adaptive panels of doubling length,
/// starting with `first_panel`. Stops after two consecutive panels that are
/// below tolerance and whose integrand samples are below the truncation
/// threshold. Reports converged = false when the panel budget (64) runs out.
/// When panels cancel (total much smaller than the panels), a second pass
/// holds every panel to the absolute target of the first-pass total.
template <class F>
auto integrate_semi_infinite(F&& f, double a, const QuadratureSpec& spec, double first_panel = 1.0)
    -> IntegralResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  if (!(first_panel > 0.0)) throw DomainError("integrate_semi_infinite: first_panel must be > 0");
  constexpr int kMaxPanels = 64;

  auto run = [&](double fixed_abs_tol) {
    IntegralResult<V> out;
    V total{};
    double error = 0.0;
    bool all_ok = true;
    int quiet = 0;
    double lo = a;
    double len = first_panel;
    for (int p = 0; p < kMaxPanels; ++p) {
      const double hi = lo + len;
      QuadratureSpec panel_spec = spec;
      if (fixed_abs_tol > 0.0) {
        panel_spec.abs_tol = fixed_abs_tol;
        panel_spec.rel_tol = 1e-6 * spec.rel_tol;
      } else {
        panel_spec.abs_tol = 0.25 * spec.target(std::abs(total));
      }
      const auto part = integrate_adaptive(f, lo, hi, panel_spec);
      out.evaluations += part.evaluations + 2;
      total += part.value;
      error += part.error_estimate;
      all_ok = all_ok && part.converged;
      const double tail_sample = std::max(std::abs(f(hi)), std::abs(f(0.5 * (lo + hi))));
      const bool small = std::abs(part.value) <= spec.target(std::abs(total)) &&
                         tail_sample <= spec.truncation_threshold;
      quiet = small ? quiet + 1 : 0;
      if (quiet >= 2) {
        out.value = total;
        out.error_estimate = error;
        out.converged = all_ok && error <= spec.target(std::abs(total)) * 4.0;
        return std::pair{out, true};
      }
      lo = hi;
      len *= 2.0;
    }
    out.value = total;
    out.error_estimate = error;
    out.converged = false;
    return std::pair{out, false};
  };

  auto [first, finished] = run(0.0);
  if (first.converged || !finished || !detail::is_finite_value(first.value)) return first;
  auto [second, finished2] = run(0.05 * spec.target(std::abs(first.value)));
  second.evaluations += first.evaluations;
  return finished2 ? second : first;
}

/// Wynn's epsilon algorithm on a sequence of partial sums. Returns the entry
/// of the highest even column built from the whole sequence; stops early when
/// consecutive entries coincide (the sequence has converged numerically).
template <class V>
V wynn_epsilon(std::span<const V> partial_sums) {
  if (partial_sums.empty()) return V{};
  std::vector<V> prev(partial_sums.size() + 1, V{});
  std::vector<V> cur(partial_sums.begin(), partial_sums.end());
  V best = cur.back();
  for (int column = 1; cur.size() > 1; ++column) {
    std::vector<V> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      const V diff = cur[j + 1] - cur[j];
      const double scale = std::max(std::abs(cur[j + 1]), std::abs(cur[j]));
      if (std::abs(diff) <= 4.0 * std::numeric_limits<double>::epsilon() * scale ||
          std::abs(diff) < std::numeric_limits<double>::min()) {
        return (column % 2 == 1) ? cur.back() : best;
      }
      next[j] = prev[j + 1] + V(1.0) / diff;
    }
    prev.swap(cur);
    cur.swap(next);
    if (column % 2 == 0) best = cur.back();
  }
  return best;
}

/// Oscillatory factor of an oscillatory integrand, cos(w x), sin(w x) or
/// J_order(w x), together with its zeros.
struct OscillatoryKernel {
  enum class Kind { cosine, sine, bessel };
  Kind kind = Kind::cosine;
  double omega = 1.0;
  double order = 0.0;

  [[nodiscard]] double operator()(double x) const;
  /// m-th positive zero (m >= 1) in the x variable.
  [[nodiscard]] double zero(int m) const;
  /// Smallest index m with zero(m) > x.
  [[nodiscard]] int first_zero_after(double x) const;
};

namespace detail {
// Builds the accelerated limit and error estimate for the oscillatory engine.
template <class V>
std::pair<V, double> accelerate(const std::vector<V>& sums) {
  constexpr std::size_t kWindow = 31;
  const std::size_t n = sums.size();
  const std::size_t first = n > kWindow ? n - kWindow : 0;
  std::span<const V> all(sums);
  const V e0 = wynn_epsilon<V>(all.subspan(first));
  if (n < 4) return {e0, std::numeric_limits<double>::infinity()};
  const V e1 = wynn_epsilon<V>(all.subspan(first, n - first - 1));
  const V e2 = wynn_epsilon<V>(all.subspan(first, n - first - 2));
  return {e0, std::abs(e0 - e1) + std::abs(e0 - e2)};
}
}  // namespace detail

/// Integral over [a, inf) of envelope(x) * kernel(x): integrates cell by cell
/// between consecutive kernel zeros and extrapolates the partial sums with the
/// epsilon algorithm. The envelope should be eventually monotone decaying.
template <class F>
auto integrate_oscillatory(F&& envelope, const OscillatoryKernel& kernel, double a, const QuadratureSpec& spec)
    -> IntegralResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  if (!(kernel.omega > 0.0)) throw DomainError("integrate_oscillatory: omega must be > 0");
  if (!(a >= 0.0)) throw DomainError("integrate_oscillatory: a must be >= 0");
  auto integrand = [&](double x) { return envelope(x) * kernel(x); };
  IntegralResult<V> out;
  std::vector<V> sums;
  V running{};
  double cell_errors = 0.0;
  bool cells_ok = true;
  int negligible = 0;
  int settled = 0;
  double lo = a;
  int m = kernel.first_zero_after(a);
  const QuadratureSpec cell_spec = spec.scaled(0.1);
  for (int cell = 0; cell < spec.max_oscillation_cells; ++cell, ++m) {
    const double hi = kernel.zero(m);
    const auto part = integrate_adaptive(integrand, lo, hi, cell_spec);
    out.evaluations += part.evaluations;
    cells_ok = cells_ok && part.converged;
    cell_errors += part.error_estimate;
    running += part.value;
    sums.push_back(running);
    lo = hi;

    negligible = (std::abs(part.value) <= 0.01 * spec.target(std::abs(running))) ? negligible + 1 : 0;
    if (negligible >= 3) {
      out.value = running;
      out.error_estimate = cell_errors;
      out.converged = cells_ok;
      return out;
    }
    if (sums.size() >= 6) {
      const auto [estimate, err] = detail::accelerate(sums);
      const bool ok = err <= spec.target(std::abs(estimate));
      settled = ok ? settled + 1 : 0;
      if (settled >= 2) {
        out.value = estimate;
        out.error_estimate = err + cell_errors;
        out.converged = cells_ok;
        return out;
      }
    }
  }
  const auto [estimate, err] = detail::accelerate(sums);
  out.value = estimate;
  out.error_estimate = err + cell_errors;
  out.converged = false;
  return out;
}

}  // namespace sdt::numerics
