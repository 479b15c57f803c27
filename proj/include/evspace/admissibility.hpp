#pragma once

#include <optional>

#include "evspace/rational.hpp"
#include "evspace/triple.hpp"

namespace evspace {

/// |p + q - 1| <= r <= 1 - |p - q|, decided exactly. Equality admits.
bool check_classical(const CondTriple& t);

/// (sqrt(pq) - sqrt((1-p)(1-q)))^2 <= r <= (sqrt(pq) + sqrt((1-p)(1-q)))^2.
///
/// With a = pq and b = (1-p)(1-q) the interval is a + b -/+ 2 sqrt(ab), so the
/// test reduces to (r - a - b)^2 <= 4ab, which needs no square roots.
bool check_complex_qs(const CondTriple& t);

/// r equals one of the two endpoints above: (r - a - b)^2 == 4ab.
bool check_real_qs(const CondTriple& t);

ClassicalBounds classical_bounds(const CondTriple& t);
ComplexBounds complex_bounds(const CondTriple& t);

AdmissibilityVerdict classify(const CondTriple& t);

struct InvariantReport {
  /// |(pB - pB|A) / (pB|notA - pB|A)|; nullopt stands for +infinity.
  std::optional<Rational> ratio;
  bool holds = false;
  /// pB lies between the two conditionals (signed ratio in [0, 1]). This is
  /// the exact condition for some pA to exist; `holds` also admits the mirror
  /// image outside the interval.
  bool between = false;
  /// The two conditionals coincide.
  bool degenerate = false;
};

/// Whether a marginal pB can arise from the two conditionals by total
/// probability. In the degenerate case the check is pB == pB|A, and the ratio
/// is reported as 0 when it holds and infinite otherwise.
InvariantReport statistical_invariant(const Prob& pB, const Prob& pB_given_A,
                                      const Prob& pB_given_notA);

/// pB|A * pA + pB|notA * (1 - pA).
Prob ltp_compose(const Prob& pA, const Prob& pB_given_A, const Prob& pB_given_notA);

/// pB|A * pA / pB. Throws ZeroMeasureError for pB = 0 and IncoherentInputs
/// when the quotient exceeds 1.
Prob bayes_invert(const Prob& pB_given_A, const Prob& pA, const Prob& pB);

}  // namespace evspace
