#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evspace/correlation_vector.hpp"
#include "evspace/rational.hpp"

namespace evspace {

/// Vertex of the correlation polytope for a binary string b:
/// p_b(i) = b_i and p_b(i,j) = b_i * b_j.
class VertexVector {
 public:
  /// Throws InputError for characters other than '0'/'1' or length < 2.
  explicit VertexVector(std::string bits);

  int n() const noexcept { return static_cast<int>(bits_.size()); }
  const std::string& bits() const noexcept { return bits_; }
  int unary(int i) const { return bits_.at(static_cast<std::size_t>(i - 1)) == '1'; }
  int pairwise(int i, int j) const { return unary(i) * unary(j); }

  /// The complete correlation vector with these 0/1 entries.
  CorrelationVector to_correlation_vector() const;

 private:
  std::string bits_;
};

VertexVector vertex_vector(std::string_view bits);

/// Affine functional c + sum u_i p(i) + sum w_ij p(i,j) with integer
/// coefficients; positive on the input and <= 0 on every vertex.
struct SeparatingWitness {
  BigInt constant;
  std::vector<BigInt> unary;            // index i-1
  std::map<EventPair, BigInt> pairwise;  // only pairs present in the input

  /// Evaluates on `v`; every pair with a coefficient must be present.
  Rational evaluate(const CorrelationVector& v) const;
  Rational evaluate(const VertexVector& b) const;
};

struct PolytopeCertificate {
  bool feasible = false;
  /// Nonzero convex weights keyed by vertex bit string (iff feasible).
  std::map<std::string, Prob> weights;
  /// Farkas witness (iff infeasible).
  std::optional<SeparatingWitness> witness;
};

struct MembershipOptions {
  int max_n = 12;
};

/// Correlation-polytope membership by exact LP over the 2^n vertices. Only
/// the entries present in `v` constrain the weights. Throws ResourceLimit when
/// v.n() exceeds the cap. The certificate is re-checked before returning.
PolytopeCertificate membership(const CorrelationVector& v, const MembershipOptions& opts = {});

/// Re-substitution check of a certificate against `v`.
bool verify_certificate(const CorrelationVector& v, const PolytopeCertificate& cert);

/// 0 <= p12 <= p1 <= 1, 0 <= p12 <= p2 <= 1, 0 <= p1 + p2 - p12 <= 1.
/// Exact characterisation for two events. Requires a complete n = 2 vector.
bool closed_form_n2(const CorrelationVector& v);

/// The displayed three-event inequality rows. Necessary for membership but
/// not sufficient: it lacks p1 + p2 + p3 - p12 - p13 - p23 <= 1.
bool closed_form_n3(const CorrelationVector& v);

/// Correlation vector for ranking m documents against relevance (event n =
/// m + 1): p(i) = prior_i, p(n) = pA, p(i,n) = likelihood_i * pA. Pairs
/// between documents are left absent.
CorrelationVector build_ranking_vector(std::span<const Prob> doc_priors,
                                       std::span<const Prob> doc_likelihoods,
                                       const Prob& pA);

struct RankingDecomposition {
  struct Piece {
    std::vector<int> events;  // 1-based indices into the input vector
    PolytopeCertificate certificate;
  };
  std::vector<Piece> subsets;
  /// Each leave-out set, in the order the procedure chose it.
  std::vector<std::vector<int>> dropped_order;
};

/// Splits `v` into event subsets that each admit a single event space.
/// Leaves out k = 1, 2, ... events at a time (lexicographic order, relevance
/// never left out) until the remainder is feasible, then recurses on the
/// events left apart.
RankingDecomposition decompose(const CorrelationVector& v, int relevance_index,
                               const MembershipOptions& opts = {});

/// Text rendering: `b=<bits> w=<rational>` lines, or `witness: ... > 0`.
std::string format_certificate(const PolytopeCertificate& cert);
std::string format_witness(const SeparatingWitness& w);

}  // namespace evspace
