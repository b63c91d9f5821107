#pragma once

#include "sdt/laplace.hpp"
#include "sdt/verify.hpp"

#include <span>

namespace sdt::rte2d {

using laplace::complex;
using numerics::QuadratureSpec;

/// Isotropic transfer in the plane: celerity c, extinction length ell, initial
/// energy A0 released at the origin at t = 0.
struct TransportParams {
  double c = 1.0;
  double ell = 1.0;
  double A0 = 1.0;

  /// Throws DomainError unless all three are finite and > 0.
  void validate() const;
};

/// i(r, t) = smooth + ballistic_weight * delta(r - ct)/r.
struct IntensityValue {
  double smooth = 0.0;
  double ballistic_weight = 0.0;
};

/// Throws EdgeError at r = ct (the shell carries the atom, not a value).
IntensityValue intensity(const TransportParams& p, double r, double t);

/// Directional average of the ballistic propagator, 1/sqrt(s^2 + c^2 k^2).
complex fl_greens_avg(const TransportParams& p, double k, complex s);

/// A0 g(k, s+c/ell) / (1 - (c/ell) g(k, s+c/ell)). Throws PoleError when the
/// denominator vanishes.
complex fl_intensity(const TransportParams& p, double k, complex s);

/// The same through row 2.1 (d = 2) at wavenumber ck and shifted s + c/ell with
/// the resolvent image fhat(z) = z/(z - c/ell): A0 fhat(1/g) g.
complex fl_intensity_via_pair(const TransportParams& p, double k, complex s);

/// Image s -> fl_intensity continued off the right half-plane, for inversion.
laplace::LaplaceImage fl_intensity_image(const TransportParams& p, double k);

/// delta(t) + (c/ell) e^{ct/ell}, the original of s/(s - c/ell).
laplace::TimeOriginal resolvent_original(const TransportParams& p);

/// d = 2 radial Fourier transform of i(., t) at k: the atom analytically
/// (A0 J0(kct) e^{-ct/ell}), the smooth part by quadrature with r = ct sin(th).
numerics::IntegralResult<double> spatial_transform(const TransportParams& p, double k, double t,
                                                   const QuadratureSpec& spec = {});

/// Plane integral of i(., t); A0 for every t.
double check_energy(const TransportParams& p, double t, const QuadratureSpec& spec = {});

struct RteSample {
  double k;
  double t;
};

/// spatial_transform vs the inverse Laplace transform of fl_intensity.
verify::VerificationReport verify_rte_mixed(const TransportParams& p, std::span<const RteSample> samples,
                                            const QuadratureSpec& spec = {}, int nodes = verify::kDefaultNodes,
                                            double tolerance = 1e-5);

}  // namespace sdt::rte2d
