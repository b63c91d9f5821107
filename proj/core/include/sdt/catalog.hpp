#pragma once

#include "sdt/laplace.hpp"

#include <string>
#include <vector>

namespace sdt::pairs {

/// A smooth Laplace original f(u) together with its closed-form image.
struct TestOriginal {
  std::string id;
  laplace::TimeOriginal f;
  laplace::LaplaceImage fhat;
  std::string description;
};

TestOriginal exp_decay(double a);        // e^{-au}        <-> 1/(s+a)
TestOriginal poly_exp(int n, double a);  // u^n e^{-au}    <-> n!/(s+a)^{n+1}
TestOriginal sine(double a);             // sin(au)        <-> a/(s^2+a^2)
TestOriginal unit();                     // 1              <-> 1/s

/// exp_decay(1/2, 1, 2), poly_exp(1..2, 1), sine(1), unit.
std::vector<TestOriginal> catalog_list();

/// Parses "name" or "name:p1,p2", e.g. "exp_decay:1", "poly_exp:2,1", "unit".
/// Throws UnknownIdError for an unknown name and DomainError for bad parameters.
TestOriginal make_original(const std::string& spec);

}  // namespace sdt::pairs
