#pragma once

#include <istream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evspace/admissibility.hpp"
#include "evspace/correlation_vector.hpp"
#include "evspace/event_table.hpp"
#include "evspace/rational.hpp"
#include "evspace/triple.hpp"

namespace evspace {

/// How Unknown cells enter relative frequencies.
enum class MissingStrategy {
  /// Restrict the universe to rows where every observable the estimate
  /// mentions is known.
  ExcludeUnknown,
  /// Keep every row and read Unknown as Absent.
  UnknownAsAbsent,
};

std::string_view to_string(MissingStrategy s);
/// Accepts `exclude-unknown` and `unknown-as-absent`.
MissingStrategy parse_missing_strategy(std::string_view text);

/// Relative frequency of `name` being Present under `strategy`, over the rows
/// where every observable in `scope` is known (ExcludeUnknown only).
Prob marginal_prob(const EventTable& table, std::string_view name, MissingStrategy strategy,
                   std::span<const std::string> scope = {});

/// mu(target and given) / mu(given). With ExcludeUnknown the universe is the
/// rows where `target`, `given` and every name in `scope` are known.
/// Throws ZeroMeasureError when `given` has no mass.
Prob cond_prob(const EventTable& table, std::string_view target, std::string_view given,
               MissingStrategy strategy, std::span<const std::string> scope = {});

/// (p, q, r) = (Pr(b|a), Pr(c|b), Pr(c|a)), all over the universe where a, b
/// and c are known. The marginal is set when the three marginals agree.
CondTriple estimate_triple(const EventTable& table, std::string_view a, std::string_view b,
                           std::string_view c, MissingStrategy strategy);

/// Unary and pairwise relative frequencies of `names` (in order, as events
/// 1..k), over the rows where all of them are known (ExcludeUnknown).
CorrelationVector correlation_vector_from_table(const EventTable& table,
                                                std::span<const std::string> names,
                                                MissingStrategy strategy);

struct SmoothingCoeffs {
  Prob alpha;
  Prob beta;
  Prob gamma;
};

/// Linear smoothing toward a background triple:
/// p' = alpha * background.p + (1 - alpha) * base.p, likewise q with beta and
/// r with gamma.
CondTriple smooth_triple(const CondTriple& base, const CondTriple& background,
                         const SmoothingCoeffs& coeffs);

/// Component-wise convex combination of per-collection triples. Weights must
/// sum to exactly 1.
CondTriple broker_mix(std::span<const CondTriple> triples, std::span<const Prob> weights);

struct MixtureComponent {
  CondTriple triple;
  Prob weight;
};

/// Collection-routing mixture described component by component.
struct MixtureSpec {
  std::vector<MixtureComponent> components;
  CondTriple mix() const;
};

}  // namespace evspace
