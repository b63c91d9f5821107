#include "sdt/catalog.hpp"

#include "sdt/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace sdt::pairs {
namespace {

using laplace::complex;
using laplace::complex_ext;

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(std::string(what) + ": parameter a must be > 0");
}

double parse_number(const std::string& text, const std::string& spec) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("bad numeric parameter in '" + spec + "'");
  return v;
}

}  // namespace

TestOriginal exp_decay(double a) {
  require_positive(a, "exp_decay");
  TestOriginal o;
  o.id = "exp_decay:" + fmt(a);
  o.description = "e^{-" + fmt(a) + " u}";
  o.f.eval = [a](double u) { return std::exp(-a * u); };
  o.f.sigma0 = -a;
  o.f.analytic = [a](complex z) { return std::exp(-a * z); };
  o.f.exponential_type = a;
  o.fhat.eval = [a](complex_ext s) { return 1.0L / (s + static_cast<long double>(a)); };
  o.fhat.sigma0 = -a;
  return o;
}

TestOriginal poly_exp(int n, double a) {
  require_positive(a, "poly_exp");
  if (n < 0) throw DomainError("poly_exp: n must be >= 0");
  TestOriginal o;
  o.id = "poly_exp:" + std::to_string(n) + "," + fmt(a);
  o.description = "u^" + std::to_string(n) + " e^{-" + fmt(a) + " u}";
  o.f.eval = [n, a](double u) { return std::pow(u, n) * std::exp(-a * u); };
  o.f.sigma0 = -a;
  o.f.analytic = [n, a](complex z) { return std::pow(z, n) * std::exp(-a * z); };
  // z^n e^{-az} is dominated by e^{(a+eps)|z|}; the margin absorbs eps.
  o.f.exponential_type = a;
  const long double nfact = std::tgamma(static_cast<long double>(n) + 1.0L);
  o.fhat.eval = [n, a, nfact](complex_ext s) {
    return nfact / std::pow(s + static_cast<long double>(a), n + 1);
  };
  o.fhat.sigma0 = -a;
  return o;
}

TestOriginal sine(double a) {
  require_positive(a, "sine");
  TestOriginal o;
  o.id = "sine:" + fmt(a);
  o.description = "sin(" + fmt(a) + " u)";
  o.f.eval = [a](double u) { return std::sin(a * u); };
  o.f.sigma0 = 0.0;
  o.f.analytic = [a](complex z) { return std::sin(a * z); };
  o.f.exponential_type = a;
  const long double al = a;
  o.fhat.eval = [al](complex_ext s) { return al / (s * s + al * al); };
  o.fhat.sigma0 = 0.0;
  o.fhat.singularity_height = a;
  return o;
}

TestOriginal unit() {
  TestOriginal o;
  o.id = "unit";
  o.description = "1";
  o.f.eval = [](double) { return 1.0; };
  o.f.sigma0 = 0.0;
  o.f.analytic = [](complex) { return complex(1.0, 0.0); };
  o.f.exponential_type = 0.0;
  o.fhat.eval = [](complex_ext s) { return 1.0L / s; };
  o.fhat.sigma0 = 0.0;
  return o;
}

std::vector<TestOriginal> catalog_list() {
  return {exp_decay(0.5), exp_decay(1.0), exp_decay(2.0), poly_exp(1, 1.0), poly_exp(2, 1.0), sine(1.0), unit()};
}

TestOriginal make_original(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) params.push_back(parse_number(item, spec));
  }
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw DomainError("wrong number of parameters in '" + spec + "'");
    }
  };
  if (name == "exp_decay") {
    expect(0, 1);
    return exp_decay(params.empty() ? 1.0 : params[0]);
  }
  if (name == "poly_exp") {
    expect(1, 2);
    const double n = params[0];
    if (n != std::floor(n)) throw DomainError("poly_exp: n must be an integer");
    return poly_exp(static_cast<int>(n), params.size() > 1 ? params[1] : 1.0);
  }
  if (name == "sine") {
    expect(0, 1);
    return sine(params.empty() ? 1.0 : params[0]);
  }
  if (name == "unit") {
    expect(0, 0);
    return unit();
  }
  throw UnknownIdError("unknown test original '" + spec + "'");
}

}  // namespace sdt::pairs
