#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hardygkz {

// A theorem hypothesis failed on the given input (functional vanishing on an
// outer function, weight vanishing inside the disk, boundary modulus below
// floor, ...). CLI maps these to exit code 2.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Boundary data whose analytic projection would discard too much
// negative-frequency energy. Carries the offending ratio.
class NotAnalyticError : public std::domain_error {
 public:
  NotAnalyticError(const std::string& msg, double ratio)
      : std::domain_error(msg), negative_energy_ratio(ratio) {}

  double negative_energy_ratio;
};

// Functional hypothesis violation that names the offending set element.
class VanishingOnSetError : public HypothesisViolation {
 public:
  VanishingOnSetError(const std::string& msg, int index)
      : HypothesisViolation(msg), element_index(index) {}

  int element_index;
};

// Weight recovered from an operator vanishes inside the disk; carries the
// located zero.
class WeightVanishesError : public HypothesisViolation {
 public:
  WeightVanishesError(const std::string& msg, std::complex<double> where)
      : HypothesisViolation(msg), location(where) {}

  std::complex<double> location;
};

}  // namespace hardygkz
