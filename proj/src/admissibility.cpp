#include "evspace/admissibility.hpp"

#include <cmath>

#include "evspace/errors.hpp"

namespace evspace {
namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

struct QuadraticForm {
  Rational a;  // pq
  Rational b;  // (1-p)(1-q)
  Rational offset;  // r - a - b
};

QuadraticForm quadratic_form(const CondTriple& t) {
  const Rational& p = t.p.value();
  const Rational& q = t.q.value();
  QuadraticForm f;
  f.a = p * q;
  f.b = (1 - p) * (1 - q);
  f.offset = t.r.value() - f.a - f.b;
  return f;
}

}  // namespace

ClassicalBounds classical_bounds(const CondTriple& t) {
  const Rational& p = t.p.value();
  const Rational& q = t.q.value();
  return {Prob(abs_value(p + q - 1)), Prob(1 - abs_value(p - q))};
}

bool check_classical(const CondTriple& t) {
  auto [lower, upper] = classical_bounds(t);
  return lower <= t.r && t.r <= upper;
}

bool check_complex_qs(const CondTriple& t) {
  auto f = quadratic_form(t);
  return f.offset * f.offset <= 4 * f.a * f.b;
}

bool check_real_qs(const CondTriple& t) {
  auto f = quadratic_form(t);
  return f.offset * f.offset == 4 * f.a * f.b;
}

ComplexBounds complex_bounds(const CondTriple& t) {
  auto f = quadratic_form(t);
  double sa = std::sqrt(to_double(f.a));
  double sb = std::sqrt(to_double(f.b));
  double upper = (sa + sb) * (sa + sb);
  // (sa - sb)^2 = (a - b)^2 / (sa + sb)^2 avoids cancellation when a ~ b.
  Rational diff = f.a - f.b;
  double lower = upper > 0 ? to_double(diff * diff) / upper : 0.0;
  return {lower, upper};
}

AdmissibilityVerdict classify(const CondTriple& t) {
  AdmissibilityVerdict v;
  v.classical_bounds = classical_bounds(t);
  v.complex_bounds = complex_bounds(t);
  v.classical = v.classical_bounds.lower <= t.r && t.r <= v.classical_bounds.upper;
  v.complex_qs = check_complex_qs(t);
  v.real_qs = check_real_qs(t);
  v.symmetry_checked = t.marginal && t.marginal->value() == Rational(1, 2);
  v.boundary = t.r == v.classical_bounds.lower || t.r == v.classical_bounds.upper ||
               v.real_qs;
  return v;
}

InvariantReport statistical_invariant(const Prob& pB, const Prob& pB_given_A,
                                      const Prob& pB_given_notA) {
  InvariantReport out;
  Rational num = pB.value() - pB_given_A.value();
  Rational den = pB_given_notA.value() - pB_given_A.value();
  if (den == 0) {
    out.degenerate = true;
    out.holds = num == 0;
    out.between = out.holds;
    if (out.holds) out.ratio = Rational(0);
    return out;
  }
  Rational signed_ratio = num / den;
  out.ratio = abs_value(signed_ratio);
  out.holds = *out.ratio <= 1;
  out.between = signed_ratio >= 0 && signed_ratio <= 1;
  return out;
}

Prob ltp_compose(const Prob& pA, const Prob& pB_given_A, const Prob& pB_given_notA) {
  return Prob(pB_given_A.value() * pA.value() +
              pB_given_notA.value() * (1 - pA.value()));
}

Prob bayes_invert(const Prob& pB_given_A, const Prob& pA, const Prob& pB) {
  if (pB == Prob::zero()) throw ZeroMeasureError("bayes_invert: Pr(B) = 0");
  Rational out = pB_given_A.value() * pA.value() / pB.value();
  if (out > 1)
    throw IncoherentInputs("incoherent-inputs: Pr(A|B) = " + to_string(out) + " > 1");
  return Prob(out);
}

}  // namespace evspace
