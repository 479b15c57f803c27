#pragma once

#include <complex>
#include <string>
#include <vector>

#include "evspace/triple.hpp"

namespace evspace {

using Amplitude = std::complex<double>;

/// Unit vector in C^d spanning a one-dimensional event subspace.
class StateVector {
 public:
  /// Throws InputError when the norm deviates from 1 by more than `eps`.
  explicit StateVector(std::vector<Amplitude> components, double eps = 1e-9);

  std::size_t dimension() const noexcept { return components_.size(); }
  const std::vector<Amplitude>& components() const noexcept { return components_; }

 private:
  std::vector<Amplitude> components_;
};

/// |<y|x>|^2.
double amplitude_prob(const StateVector& x, const StateVector& y);

enum class Field { Real, Complex };

std::string_view to_string(Field f);

/// Three unit vectors in C^2 with |<a|b>|^2 = p, |<b|c>|^2 = q and
/// |<a|c>|^2 = r. Gauge: b = (1, 0), a real, the relative phase carried by c.
struct QuantumRealization {
  StateVector a;
  StateVector b;
  StateVector c;
  double phase = 0.0;  // radians, in [0, pi]
  Field field = Field::Complex;
};

/// Builds a = (sqrt p, sqrt(1-p)), b = (1, 0), c = (sqrt q, e^{i phi} sqrt(1-q))
/// with cos phi = (r - pq - (1-p)(1-q)) / (2 sqrt(pq(1-p)(1-q))).
/// The field is Real exactly when check_real_qs holds; then phi is 0 or pi.
/// Throws NotRepresentable when check_complex_qs fails.
QuantumRealization realize(const CondTriple& t);

/// cos phi of the realization, from the exact rational cos^2.
double realization_cosine(const CondTriple& t);

}  // namespace evspace
