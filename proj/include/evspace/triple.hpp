#pragma once

#include <optional>
#include <string>

#include "evspace/rational.hpp"

namespace evspace {

/// Symmetric conditional probabilities of three events A, B, C:
/// p between A and B, q between B and C, r between A and C.
/// `marginal` is the common measure of the three events when known.
struct CondTriple {
  Prob p;
  Prob q;
  Prob r;
  std::optional<Prob> marginal;

  CondTriple() = default;
  CondTriple(Prob p, Prob q, Prob r, std::optional<Prob> marginal = std::nullopt);

  friend bool operator==(const CondTriple&, const CondTriple&) = default;
};

/// "(p, q, r)" in exact form.
std::string to_string(const CondTriple& t);

struct ClassicalBounds {
  Prob lower;  // |p + q - 1|
  Prob upper;  // 1 - |p - q|
};

/// Endpoints of the complex quantum interval; irrational in general, so kept
/// as doubles for display. Decisions never read these.
struct ComplexBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct AdmissibilityVerdict {
  bool classical = false;
  bool real_qs = false;
  bool complex_qs = false;
  ClassicalBounds classical_bounds;
  ComplexBounds complex_bounds;
  /// The common marginal was supplied and equals 1/2.
  bool symmetry_checked = false;
  /// r sits exactly on a classical bound or on a complex-interval endpoint.
  bool boundary = false;

  friend bool operator==(const AdmissibilityVerdict& a, const AdmissibilityVerdict& b) {
    return a.classical == b.classical && a.real_qs == b.real_qs &&
           a.complex_qs == b.complex_qs &&
           a.classical_bounds.lower == b.classical_bounds.lower &&
           a.classical_bounds.upper == b.classical_bounds.upper &&
           a.complex_bounds.lower == b.complex_bounds.lower &&
           a.complex_bounds.upper == b.complex_bounds.upper &&
           a.symmetry_checked == b.symmetry_checked && a.boundary == b.boundary;
  }
};

}  // namespace evspace
