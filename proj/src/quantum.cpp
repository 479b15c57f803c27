#include "evspace/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evspace/admissibility.hpp"
#include "evspace/errors.hpp"

namespace evspace {

StateVector::StateVector(std::vector<Amplitude> components, double eps)
    : components_(std::move(components)) {
  if (components_.empty()) throw InputError("state vector has no components");
  double norm = 0.0;
  for (const auto& c : components_) norm += std::norm(c);
  if (std::fabs(norm - 1.0) > eps)
    throw InputError("state vector is not unit norm (|v|^2 = " + std::to_string(norm) + ")");
}

double amplitude_prob(const StateVector& x, const StateVector& y) {
  if (x.dimension() != y.dimension()) throw InputError("amplitude_prob: dimension mismatch");
  Amplitude inner = 0.0;
  for (std::size_t i = 0; i < x.dimension(); ++i)
    inner += std::conj(y.components()[i]) * x.components()[i];
  return std::norm(inner);
}

std::string_view to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

double realization_cosine(const CondTriple& t) {
  const Rational& p = t.p.value();
  const Rational& q = t.q.value();
  Rational a = p * q;
  Rational b = (1 - p) * (1 - q);
  Rational offset = t.r.value() - a - b;
  Rational ab = a * b;
  if (sgn(ab) == 0) return 1.0;
  Rational cos_sq = offset * offset / (4 * ab);
  double magnitude = std::sqrt(to_double(cos_sq));
  return sgn(offset) < 0 ? -magnitude : magnitude;
}

QuantumRealization realize(const CondTriple& t) {
  if (!check_complex_qs(t))
    throw NotRepresentable("triple " + to_string(t) + " admits no quantum realization");
  const double p = t.p.to_double();
  const double q = t.q.to_double();
  const bool real = check_real_qs(t);

  double phase = 0.0;
  double cosine = realization_cosine(t);
  if (real)
    phase = cosine < 0 ? std::numbers::pi : 0.0;
  else
    phase = std::acos(std::clamp(cosine, -1.0, 1.0));

  StateVector a({Amplitude(std::sqrt(p)), Amplitude(std::sqrt(1.0 - p))});
  StateVector b({Amplitude(1.0), Amplitude(0.0)});
  StateVector c({Amplitude(std::sqrt(q)), std::polar(std::sqrt(1.0 - q), phase)});
  return {std::move(a), std::move(b), std::move(c), phase,
          real ? Field::Real : Field::Complex};
}

}  // namespace evspace
