#pragma once

#include "sdt/catalog.hpp"
#include "sdt/laplace.hpp"
#include "sdt/radial_fourier.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdt::pairs {

using laplace::complex;
using laplace::complex_ext;

/// tau(t, u) of an Efros base pair g(t,u) <-> psi(s) e^{-u phi(s)} together with
/// its u-derivative.
struct EfrosTau {
  std::function<double(double t, double u)> tau;
  std::function<double(double t, double u)> dtau_du;
};

struct Root {
  double u;
  double jacobian;  // |d tau / d u| at u
};

/// One simultaneous Fourier-Laplace double-transform pair
///   F(r,t) = st_prefactor(r,t,d) f(st_argument(r,t)) [st_support(r,t)]
///      <-> fl_psi(k,s,d) fhat(fl_phi(k,s)).
struct PairDescriptor {
  std::string id;
  int type = 1;  // 1: fl_phi = s; 2: k-dependent argument
  std::function<bool(int d)> dim_allowed;
  std::string dim_text;
  /// The space-time side is locally integrable in R^d (the radial transform
  /// exists as an ordinary integral).
  std::function<bool(int d)> locally_integrable;
  std::optional<double> parameter_a;

  std::function<double(double r, double t, int d)> st_prefactor;
  std::function<double(double r, double t)> st_argument;
  std::function<bool(double r, double t)> st_support;
  /// Radial interval carrying the support at time t.
  std::function<std::pair<double, double>(double t)> radial_support;
  /// Points where pointwise evaluation is refused (infinite or ill-defined).
  std::function<bool(double r, double t, int d)> on_edge;
  /// Set for pairs whose space-time side is a sum over several roots; replaces
  /// prefactor * f(argument).
  std::function<double(double r, double t, int d, const std::function<double(double)>& f)> st_terms;

  std::function<complex_ext(double k, complex_ext s, int d)> fl_psi;
  std::function<complex_ext(double k, complex_ext s)> fl_phi;
  std::optional<EfrosTau> efros_tau;
  /// Largest |Im s| of the image's own singularities, per unit k: 1 for the
  /// branch points +-ik of sqrt(s^2+k^2), 1/2 for the poles of fhat(s+k^2/4s),
  /// 0 when they all sit on the real axis.
  double singularity_height_per_k = 1.0;

  std::string st_text;
  std::string fl_text;
  std::string note;
};

/// The nine table rows 1.1-1.5, 2.1-2.4, in order. Row 1.5 uses a = 1/2.
const std::vector<PairDescriptor>& registry();

/// Row by id; "2D-SDT" is an alias for row 2.1 restricted to d = 2.
/// Throws UnknownIdError.
const PairDescriptor& lookup(const std::string& id);

/// Row 1.5 with parameter a > 0.
PairDescriptor make_row_1_5(double a);

/// Row 2.4 with the space-time side obtained by inverting its image
/// s^{-d/2} fhat(s + k^2/4s) directly: two roots u = (t +- sqrt(t^2-4r^2))/2,
/// support t > 2r. The tabulated form in `registry()` does not satisfy the pair.
PairDescriptor row_2_4_two_root();

namespace detail {
/// Row 1.5 without the a > 0 check; a = 0 reproduces row 1.2.
PairDescriptor row_1_5_unchecked(double a);
}  // namespace detail

/// Throws ConstraintError unless the row admits dimension d.
void require_dimension(const PairDescriptor& pair, Dimension d);

/// Space-time side at (r, t). Throws ConstraintError for an inadmissible d and
/// EdgeError on the declared edge set.
double eval_spacetime(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double r, double t);
/// Same without any checks; used inside quadrature, which never lands on edges.
double eval_spacetime_unchecked(const PairDescriptor& pair, int d, const std::function<double(double)>& f,
                                double r, double t);

/// Fourier-Laplace side psi(k,s) fhat(phi(k,s)). Throws DomainError when
/// Re phi(k,s) <= sigma0 of the image (outside its half-plane of validity).
complex eval_fl(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double k, complex s);
/// Analytic continuation of the Fourier-Laplace side, used on inversion contours.
complex_ext eval_fl_ext(const PairDescriptor& pair, int d, const laplace::LaplaceImage& fhat, double k,
                        complex_ext s);

/// s -> eval_fl_ext(pair, d, f, k, s) as an invertible image.
laplace::LaplaceImage fl_image(const PairDescriptor& pair, Dimension d, const TestOriginal& f, double k);

/// Solutions u_n > 0 of tau(t, u) = r. Throws DomainError when the row has no tau.
std::vector<Root> roots_tau(const PairDescriptor& pair, double r, double t);

/// Base identity L[J0(k sqrt(t^2-u^2)) Theta(t-u)](s) = e^{-u sqrt(s^2+k^2)} / sqrt(s^2+k^2).
double base_pair_original(double k, double u, double t);
complex base_pair_image(double k, double u, complex s);

struct ComposedPair {
  std::function<double(double r, double t)> spacetime_side;
  std::function<complex(double k, complex s)> fl_side;
};

/// Integrates the base identity against f(u) (Efros): the space-time side
/// follows from the roots of tau and the 2-D inverse transform of J0(k tau),
/// the Fourier-Laplace side from psi(s) fhat(phi(s)). Only d = 2.
ComposedPair efros_compose(const TestOriginal& f, Dimension d = Dimension(2));

/// One line per row: id, dimension constraint, both sides as text, note.
std::string registry_text(const std::vector<const PairDescriptor*>& rows);

/// Stable ingredients of the rows, sqrt(s^2+k^2) continued with cuts running
/// left from +-ik.
namespace branch {
complex_ext root(double k, complex_ext s);            // R = sqrt(s+ik) sqrt(s-ik)
complex_ext s_plus_root(double k, complex_ext s);     // s + R
complex_ext root_minus_s(double k, complex_ext s);    // R - s
}  // namespace branch

}  // namespace sdt::pairs
