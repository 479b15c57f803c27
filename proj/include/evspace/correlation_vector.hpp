#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evspace/rational.hpp"

namespace evspace {

/// 1-based event pair (i, j) with i < j.
using EventPair = std::pair<int, int>;

/// Unary probabilities p(i) for every event and a partial map of pairwise
/// probabilities p(i,j). A missing pair means the joint was not observed.
///
/// Events are numbered from 1. Sub-vectors produced by `restrict_to` may have
/// a single event; vectors read from text need at least two.
class CorrelationVector {
 public:
  CorrelationVector(std::vector<Prob> unary, std::map<EventPair, Prob> pairwise);

  int n() const noexcept { return static_cast<int>(unary_.size()); }
  const Prob& unary(int i) const;
  std::optional<Prob> pairwise(int i, int j) const;
  const std::map<EventPair, Prob>& pairwise_entries() const noexcept { return pairwise_; }
  const std::vector<Prob>& unary_entries() const noexcept { return unary_; }

  /// True when every pair (i, j) is present.
  bool is_complete() const;

  /// The vector over `events` (1-based, strictly increasing), renumbered
  /// 1..k in the given order.
  CorrelationVector restrict_to(std::span<const int> events) const;

  friend bool operator==(const CorrelationVector&, const CorrelationVector&) = default;

 private:
  std::vector<Prob> unary_;
  std::map<EventPair, Prob> pairwise_;
};

/// Key/value text: `n=<int>`, `p<i>=<rational>`, `p<i>,<j>=<rational>`.
/// Blank lines and `#` comments are ignored.
CorrelationVector parse_correlation_vector(std::string_view text);

std::string serialize(const CorrelationVector& v);

}  // namespace evspace
