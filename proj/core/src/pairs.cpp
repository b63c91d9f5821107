#include "sdt/pairs.hpp"

#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sdt::pairs {
namespace {

using ld = long double;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

double two_pi_pow(int d) { return std::pow(kTwoPi, -0.5 * d); }

std::pair<double, double> light_cone(double t) { return {0.0, t}; }

complex_ext pow_ext(complex_ext z, double p) {
  if (p == 0.0) return {1.0L, 0.0L};
  if (p == std::round(p)) return std::pow(z, static_cast<int>(p));
  return std::pow(z, static_cast<ld>(p));
}

// (s+R)^{1-d/2} / R, shared by rows 1.2, 1.5, 2.1, 2.3.
complex_ext psi_splus_over_root(double k, complex_ext s, int d) {
  return pow_ext(branch::s_plus_root(k, s), 1.0 - 0.5 * d) / branch::root(k, s);
}

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

auto all_dims = [](int) { return true; };

PairDescriptor row_1_1() {
  PairDescriptor p;
  p.id = "1.1";
  p.type = 1;
  p.dim_allowed = [](int d) { return d >= 2; };
  p.dim_text = "d >= 2";
  p.locally_integrable = p.dim_allowed;
  p.st_prefactor = [](double r, double, int d) {
    const double sdm1 = radial_fourier::sphere_measure(Dimension(d - 1));
    return kPi * sdm1 * std::pow(kTwoPi, -d) / r;
  };
  p.st_argument = [](double r, double t) { return t - r; };
  p.st_support = [](double r, double t) { return r < t; };
  p.radial_support = light_cone;
  p.on_edge = [](double r, double, int) { return r == 0.0; };
  p.fl_psi = [](double k, complex_ext s, int d) { return pow_ext(branch::root(k, s), 1.0 - d); };
  p.fl_phi = [](double, complex_ext s) { return s; };
  p.st_text = "pi S_{d-1}/(2pi)^d (1/r) f(t-r) Theta(t-r)";
  p.fl_text = "(s^2+k^2)^{(1-d)/2} fhat(s)";
  return p;
}

PairDescriptor row_1_2() {
  PairDescriptor p;
  p.id = "1.2";
  p.type = 1;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double r, double, int d) { return std::pow(kTwoPi * r, -0.5 * d); };
  p.st_argument = [](double r, double t) { return t - r; };
  p.st_support = [](double r, double t) { return r < t; };
  p.radial_support = light_cone;
  p.on_edge = [](double r, double, int) { return r == 0.0; };
  p.fl_psi = psi_splus_over_root;
  p.fl_phi = [](double, complex_ext s) { return s; };
  p.st_text = "(2pi r)^{-d/2} f(t-r) Theta(t-r)";
  p.fl_text = "(s+sqrt(s^2+k^2))^{1-d/2} / sqrt(s^2+k^2) fhat(s)";
  return p;
}

PairDescriptor row_1_3() {
  PairDescriptor p;
  p.id = "1.3";
  p.type = 1;
  p.dim_allowed = [](int d) { return d != 2; };
  p.dim_text = "d != 2";
  p.locally_integrable = [](int d) { return d >= 3; };
  p.st_prefactor = [](double r, double, int d) {
    return (0.5 * d - 1.0) * two_pi_pow(d) * std::pow(r, -0.5 * d - 1.0);
  };
  p.st_argument = [](double r, double t) { return t - r; };
  p.st_support = [](double r, double t) { return r < t; };
  p.radial_support = light_cone;
  p.on_edge = [](double r, double, int) { return r == 0.0; };
  p.fl_psi = [](double k, complex_ext s, int d) { return pow_ext(branch::s_plus_root(k, s), 1.0 - 0.5 * d); };
  p.fl_phi = [](double, complex_ext s) { return s; };
  p.st_text = "(d/2-1) (2pi)^{-d/2} r^{-d/2-1} f(t-r) Theta(t-r)";
  p.fl_text = "(s+sqrt(s^2+k^2))^{1-d/2} fhat(s)";
  p.note = "r^{-d/2-1} is not integrable at r = 0 for d = 1";
  return p;
}

PairDescriptor row_1_4() {
  PairDescriptor p;
  p.id = "1.4";
  p.type = 1;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double, double, int d) { return std::pow(kPi, -0.5 * d); };
  p.st_argument = [](double r, double t) { return t - r * r; };
  p.st_support = [](double r, double t) { return r * r < t; };
  p.radial_support = [](double t) { return std::pair{0.0, std::sqrt(t)}; };
  p.on_edge = [](double, double, int) { return false; };
  p.fl_psi = [](double k, complex_ext s, int d) {
    return pow_ext(s, -0.5 * d) * std::exp(-static_cast<ld>(k) * k / (4.0L * s));
  };
  p.fl_phi = [](double, complex_ext s) { return s; };
  p.singularity_height_per_k = 0.0;
  p.st_text = "pi^{-d/2} f(t-r^2) Theta(t-r^2)";
  p.fl_text = "s^{-d/2} e^{-k^2/4s} fhat(s)";
  return p;
}

PairDescriptor row_2_1() {
  PairDescriptor p;
  p.id = "2.1";
  p.type = 2;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double r, double t, int d) {
    const double q = std::sqrt((t - r) * (t + r));
    return two_pi_pow(d) * std::pow(t + q, 1.0 - 0.5 * d) / q;
  };
  p.st_argument = [](double r, double t) { return std::sqrt((t - r) * (t + r)); };
  p.st_support = [](double r, double t) { return r < t; };
  p.radial_support = light_cone;
  p.on_edge = [](double r, double t, int) { return near(r, t); };
  p.fl_psi = psi_splus_over_root;
  p.fl_phi = [](double k, complex_ext s) { return branch::root(k, s); };
  p.efros_tau = EfrosTau{[](double t, double u) { return std::sqrt(t * t - u * u); },
                         [](double t, double u) { return -u / std::sqrt(t * t - u * u); }};
  p.st_text = "(2pi)^{-d/2} (t+sqrt(t^2-r^2))^{1-d/2} / sqrt(t^2-r^2) f(sqrt(t^2-r^2)) Theta(t-r)";
  p.fl_text = "(s+sqrt(s^2+k^2))^{1-d/2} / sqrt(s^2+k^2) fhat(sqrt(s^2+k^2))";
  p.note = "d = 2: f(sqrt(t^2-r^2))/(2pi sqrt(t^2-r^2)) <-> fhat(sqrt(s^2+k^2))/sqrt(s^2+k^2)";
  return p;
}

PairDescriptor row_2_2() {
  PairDescriptor p;
  p.id = "2.2";
  p.type = 2;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double r, double t, int d) {
    return two_pi_pow(d) * std::pow(r, 2.0 - d) / std::pow(2.0 * t, 2.0 - 0.5 * d);
  };
  p.st_argument = [](double r, double t) { return r * r / (4.0 * t); };
  p.st_support = [](double, double) { return true; };
  p.radial_support = [](double) { return std::pair{0.0, kInf}; };
  p.on_edge = [](double r, double, int d) { return r == 0.0 && d > 2; };
  p.fl_psi = [](double, complex_ext s, int d) { return pow_ext(s, -0.5 * d); };
  p.fl_phi = [](double k, complex_ext s) { return static_cast<ld>(k) * k / s; };
  p.singularity_height_per_k = 0.0;
  p.st_text = "(2pi)^{-d/2} r^{2-d} / (2t)^{2-d/2} f(r^2/4t)";
  p.fl_text = "s^{-d/2} fhat(k^2/s)";
  return p;
}

PairDescriptor row_2_3() {
  PairDescriptor p;
  p.id = "2.3";
  p.type = 2;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double r, double t, int d) {
    return two_pi_pow(d) * std::pow(r, 2.0 - d) / std::pow(t, 2.0 - 0.5 * d);
  };
  p.st_argument = [](double r, double t) { return (r - t) * (r + t) / (2.0 * t); };
  p.st_support = [](double r, double t) { return r > t; };
  p.radial_support = [](double t) { return std::pair{t, kInf}; };
  p.on_edge = [](double, double, int) { return false; };
  p.fl_psi = psi_splus_over_root;
  p.fl_phi = [](double k, complex_ext s) { return branch::root_minus_s(k, s); };
  p.st_text = "(2pi)^{-d/2} r^{2-d} / t^{2-d/2} f((r^2-t^2)/2t) Theta(r-t)";
  p.fl_text = "(s+sqrt(s^2+k^2))^{1-d/2} / sqrt(s^2+k^2) fhat(sqrt(s^2+k^2)-s)";
  return p;
}

PairDescriptor row_2_4() {
  PairDescriptor p;
  p.id = "2.4";
  p.type = 2;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [](double r, double t, int d) {
    return two_pi_pow(d) / (t + std::sqrt((t - r) * (t + r)));
  };
  p.st_argument = [](double r, double t) { return t - std::sqrt((t - r) * (t + r)); };
  p.st_support = [](double r, double t) { return r < t; };
  p.radial_support = light_cone;
  p.on_edge = [](double r, double t, int) { return near(r, t); };
  p.fl_psi = [](double, complex_ext s, int d) { return pow_ext(s, -0.5 * d); };
  p.fl_phi = [](double k, complex_ext s) { return s + static_cast<ld>(k) * k / (4.0L * s); };
  p.singularity_height_per_k = 0.5;
  p.st_text = "(2pi)^{-d/2} / (t+sqrt(t^2-r^2)) f(t-sqrt(t^2-r^2)) Theta(t-r)";
  p.fl_text = "s^{-d/2} fhat(s+k^2/4s)";
  p.note = "as tabulated; the two-root form row_2_4_two_root() is the original of this image";
  return p;
}

}  // namespace

namespace branch {

complex_ext root(double k, complex_ext s) {
  const complex_ext ik(0.0L, k);
  return std::sqrt(s + ik) * std::sqrt(s - ik);
}

// s + R = (sqrt(s+ik) + sqrt(s-ik))^2 / 2: both roots have Re >= 0, so the sum
// never cancels.
complex_ext s_plus_root(double k, complex_ext s) {
  const complex_ext ik(0.0L, k);
  const complex_ext w = std::sqrt(s + ik) + std::sqrt(s - ik);
  return 0.5L * w * w;
}

complex_ext root_minus_s(double k, complex_ext s) {
  if (k == 0.0) return {0.0L, 0.0L};
  return static_cast<ld>(k) * k / s_plus_root(k, s);
}

}  // namespace branch

namespace detail {

PairDescriptor row_1_5_unchecked(double a) {
  PairDescriptor p;
  p.id = "1.5";
  p.type = 1;
  p.parameter_a = a;
  p.dim_allowed = all_dims;
  p.dim_text = "any d";
  p.locally_integrable = all_dims;
  p.st_prefactor = [a](double r, double, int d) {
    const double rho = std::hypot(r, a);
    return two_pi_pow(d) * std::pow(a + rho, 1.0 - 0.5 * d) / rho;
  };
  p.st_argument = [a](double r, double t) { return t + a - std::hypot(r, a); };
  p.st_support = [a](double r, double t) { return r * r < t * t + 2.0 * a * t; };
  p.radial_support = [a](double t) { return std::pair{0.0, std::sqrt(t * t + 2.0 * a * t)}; };
  p.on_edge = [a](double r, double t, int) {
    return (a == 0.0 && r == 0.0) || near(r * r, t * t + 2.0 * a * t);
  };
  p.fl_psi = [a](double k, complex_ext s, int d) {
    return std::exp(-static_cast<ld>(a) * branch::root_minus_s(k, s)) * psi_splus_over_root(k, s, d);
  };
  p.fl_phi = [](double, complex_ext s) { return s; };
  p.st_text = "(2pi)^{-d/2} (a+sqrt(r^2+a^2))^{1-d/2} / sqrt(r^2+a^2) f(t+a-sqrt(r^2+a^2)) "
              "Theta(t+a-sqrt(r^2+a^2))";
  p.fl_text = "e^{-a(sqrt(s^2+k^2)-s)} (s+sqrt(s^2+k^2))^{1-d/2} / sqrt(s^2+k^2) fhat(s)";
  p.note = "a = " + fmt(a);
  return p;
}

}  // namespace detail

PairDescriptor make_row_1_5(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("row 1.5: parameter a must be > 0");
  return detail::row_1_5_unchecked(a);
}

PairDescriptor row_2_4_two_root() {
  PairDescriptor p = row_2_4();
  p.note = "two-root original of s^{-d/2} fhat(s+k^2/4s)";
  p.st_support = [](double r, double t) { return 2.0 * r < t; };
  p.radial_support = [](double t) { return std::pair{0.0, 0.5 * t}; };
  p.on_edge = [](double r, double t, int) { return near(2.0 * r, t); };
  p.st_prefactor = nullptr;
  p.st_argument = nullptr;
  // (pi u)^{-d/2} f(u) / |1 - r^2/u^2| summed over u + r^2/u = t.
  p.st_terms = [](double r, double t, int d, const std::function<double(double)>& f) {
    const double w = std::sqrt((t - 2.0 * r) * (t + 2.0 * r));
    const double u_plus = 0.5 * (t + w);
    double sum = 0.0;
    for (const double u : {u_plus, r * r / u_plus}) {
      if (!(u > 0.0)) continue;
      const double ratio = r / u;
      sum += std::pow(kPi * u, -0.5 * d) * f(u) / std::abs((1.0 - ratio) * (1.0 + ratio));
    }
    return sum;
  };
  p.st_text = "sum over u = (t +- sqrt(t^2-4r^2))/2 of (pi u)^{-d/2} f(u) / |1 - r^2/u^2|, Theta(t-2r)";
  return p;
}

const std::vector<PairDescriptor>& registry() {
  static const std::vector<PairDescriptor> rows = {
      row_1_1(), row_1_2(), row_1_3(), row_1_4(), make_row_1_5(0.5),
      row_2_1(), row_2_2(), row_2_3(), row_2_4()};
  return rows;
}

const PairDescriptor& lookup(const std::string& id) {
  if (id == "2D-SDT") {
    static const PairDescriptor alias = [] {
      PairDescriptor p = row_2_1();
      p.id = "2D-SDT";
      p.dim_allowed = [](int d) { return d == 2; };
      p.dim_text = "d = 2";
      return p;
    }();
    return alias;
  }
  for (const auto& p : registry()) {
    if (p.id == id) return p;
  }
  throw UnknownIdError("unknown pair id '" + id + "'");
}

void require_dimension(const PairDescriptor& pair, Dimension d) {
  if (!pair.dim_allowed(d.value())) {
    throw ConstraintError("pair " + pair.id + " requires " + pair.dim_text + ", got d = " +
                          std::to_string(d.value()));
  }
}

double eval_spacetime_unchecked(const PairDescriptor& pair, int d, const std::function<double(double)>& f,
                                double r, double t) {
  if (!pair.st_support(r, t)) return 0.0;
  if (pair.st_terms) return pair.st_terms(r, t, d, f);
  return pair.st_prefactor(r, t, d) * f(pair.st_argument(r, t));
}

double eval_spacetime(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double r, double t) {
  require_dimension(pair, d);
  if (!(r >= 0.0) || !(t > 0.0)) throw DomainError("eval_spacetime: need r >= 0 and t > 0");
  if (pair.on_edge(r, t, d.value())) {
    throw EdgeError("pair " + pair.id + ": (r, t) = (" + fmt(r) + ", " + fmt(t) + ") lies on the edge set");
  }
  return eval_spacetime_unchecked(pair, d.value(), f.f.eval, r, t);
}

complex_ext eval_fl_ext(const PairDescriptor& pair, int d, const laplace::LaplaceImage& fhat, double k,
                        complex_ext s) {
  return pair.fl_psi(k, s, d) * fhat.eval(pair.fl_phi(k, s));
}

complex eval_fl(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double k, complex s) {
  require_dimension(pair, d);
  if (!(k >= 0.0)) throw DomainError("eval_fl: k must be >= 0");
  const complex_ext se(s.real(), s.imag());
  const complex_ext phi = pair.fl_phi(k, se);
  if (!(static_cast<double>(phi.real()) > f.fhat.sigma0)) {
    throw DomainError("pair " + pair.id + ": Re phi(k, s) = " + fmt(static_cast<double>(phi.real())) +
                      " is not right of the abscissa " + fmt(f.fhat.sigma0) + " of " + f.id);
  }
  const complex_ext v = eval_fl_ext(pair, d.value(), f.fhat, k, se);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

laplace::LaplaceImage fl_image(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double k) {
  require_dimension(pair, d);
  laplace::LaplaceImage img;
  img.sigma0 = pair.type == 1 ? std::max(0.0, f.fhat.sigma0) : 0.0;
  img.singularity_height = pair.singularity_height_per_k * k + f.fhat.singularity_height;
  img.eval = [pair, dim = d.value(), fhat = f.fhat, k](complex_ext s) {
    return eval_fl_ext(pair, dim, fhat, k, s);
  };
  return img;
}

std::vector<Root> roots_tau(const PairDescriptor& pair, double r, double t) {
  if (!pair.efros_tau) throw DomainError("pair " + pair.id + " has no Efros tau");
  if (!(r > 0.0) || !(t > 0.0)) throw DomainError("roots_tau: need r > 0 and t > 0");
  if (!(t > r) || near(r, t)) return {};
  const double u = std::sqrt((t - r) * (t + r));
  return {Root{u, std::abs(pair.efros_tau->dtau_du(t, u))}};
}

double base_pair_original(double k, double u, double t) {
  if (!(t > u)) return 0.0;
  return numerics::bessel_j(0.0, k * std::sqrt((t - u) * (t + u)));
}

complex base_pair_image(double k, double u, complex s) {
  const complex root = std::sqrt(s * s + k * k);
  return std::exp(-u * root) / root;
}

ComposedPair efros_compose(const TestOriginal& f, Dimension d) {
  if (d.value() != 2) throw ConstraintError("efros_compose: the J0 base identity is two-dimensional");
  const PairDescriptor& base = lookup("2.1");
  ComposedPair out;
  // The 2-D inverse transform of J0(k tau) is delta(r - tau)/(2 pi r); the
  // u-integral against f then collapses onto the roots of tau(t, u) = r.
  out.spacetime_side = [&base, g = f.f.eval](double r, double t) {
    if (r == 0.0) return g(t) / (kTwoPi * t);
    double sum = 0.0;
    for (const Root& root : roots_tau(base, r, t)) sum += g(root.u) / root.jacobian;
    return sum / (kTwoPi * r);
  };
  // psi(s) e^{-u phi(s)} with psi = 1/R, phi = R gives psi fhat(phi).
  out.fl_side = [fhat = f.fhat](double k, complex s) {
    const complex_ext root = branch::root(k, complex_ext(s.real(), s.imag()));
    const complex_ext v = fhat.eval(root) / root;
    return complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  };
  return out;
}

std::string registry_text(const std::vector<const PairDescriptor*>& rows) {
  std::ostringstream os;
  os << "id\tdimension\tspace-time side\tFourier-Laplace side\tnote\n";
  for (const auto* p : rows) {
    os << p->id << '\t' << p->dim_text << '\t' << p->st_text << '\t' << p->fl_text << '\t'
       << (p->note.empty() ? "-" : p->note) << '\n';
  }
  return os.str();
}

}  // namespace sdt::pairs
