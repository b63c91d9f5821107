#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"
#include "sdt/radial_fourier.hpp"

#include <cmath>
#include <numbers>

namespace sdt::radial_fourier {
namespace {

NamedProfile gaussian(int d) {
  NamedProfile p;
  p.name = "gaussian";
  p.profile.eval = [](double r) { return std::exp(-0.5 * r * r); };
  p.profile.decay_class = DecayClass::gaussian;
  const double c = std::pow(2.0 * std::numbers::pi, 0.5 * d);
  p.image.eval = [c](double k) { return c * std::exp(-0.5 * k * k); };
  p.image.decay_class = DecayClass::gaussian;
  return p;
}

NamedProfile yukawa(int d) {
  NamedProfile p;
  p.name = "yukawa";
  const double sd = sphere_measure(Dimension(d));
  switch (d) {
    case 1:
      p.profile.eval = [](double r) { return std::exp(-r); };
      break;
    case 3:
      p.profile.eval = [](double r) { return std::exp(-r) / r; };
      break;
    default: {
      const double nu = std::abs(0.5 * d - 1.0);
      const double c = sd * std::pow(2.0 * std::numbers::pi, -0.5 * d);
      p.profile.eval = [c, nu, d](double r) { return c * std::pow(r, 1.0 - 0.5 * d) * std::cyl_bessel_k(nu, r); };
      break;
    }
  }
  p.profile.decay_class = DecayClass::exponential;
  p.profile.singular_at_support_edge = d >= 2;
  p.image.eval = [sd](double k) { return sd / (1.0 + k * k); };
  p.image.decay_class = DecayClass::algebraic;
  return p;
}

NamedProfile exponential(int d) {
  NamedProfile p;
  p.name = "exponential";
  p.profile.eval = [](double r) { return std::exp(-r); };
  p.profile.decay_class = DecayClass::exponential;
  const double c = numerics::gamma_fn(0.5 * (d + 1)) * std::pow(2.0, d) * std::pow(std::numbers::pi, 0.5 * (d - 1));
  const double power = 0.5 * (d + 1);
  p.image.eval = [c, power](double k) { return c * std::pow(1.0 + k * k, -power); };
  p.image.decay_class = DecayClass::algebraic;
  return p;
}

}  // namespace

std::vector<std::string> profile_names() {
  return {"gaussian", "gaussian-image", "yukawa", "yukawa-image", "exponential", "exponential-image"};
}

NamedProfile named_profile(const std::string& name, Dimension d) {
  std::string base = name;
  bool image = false;
  constexpr std::string_view suffix = "-image";
  if (base.size() > suffix.size() && base.ends_with(suffix)) {
    base.resize(base.size() - suffix.size());
    image = true;
  }
  NamedProfile p;
  if (base == "gaussian") {
    p = gaussian(d.value());
  } else if (base == "yukawa") {
    p = yukawa(d.value());
  } else if (base == "exponential") {
    p = exponential(d.value());
  } else {
    throw UnknownIdError("unknown radial profile '" + name + "'");
  }
  if (image) {
    std::swap(p.profile, p.image);
    p.name = name;
  }
  return p;
}

}  // namespace sdt::radial_fourier
