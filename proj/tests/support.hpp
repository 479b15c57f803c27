#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "evspace/correlation_vector.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/rational.hpp"
#include "evspace/triple.hpp"

namespace testing {

inline evspace::Prob P(const char* text) { return evspace::parse_prob(text); }

inline evspace::CondTriple T(const char* p, const char* q, const char* r) {
  return evspace::CondTriple(P(p), P(q), P(r));
}

inline evspace::Rational Q(const char* text) { return evspace::parse_rational(text); }

/// n/d in canonical form (the two-argument mpq constructor does not reduce).
inline evspace::Rational R(long n, long d) {
  evspace::Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Uniform k/d with d drawn from [1, max_den] and k from [0, d].
inline evspace::Prob random_prob(std::mt19937& rng, int max_den = 12) {
  int d = std::uniform_int_distribution<int>(1, max_den)(rng);
  int k = std::uniform_int_distribution<int>(0, d)(rng);
  return evspace::prob(k, d);
}

inline evspace::CondTriple random_triple(std::mt19937& rng, int max_den = 12) {
  return evspace::CondTriple(random_prob(rng, max_den), random_prob(rng, max_den),
                             random_prob(rng, max_den));
}

/// Three events of measure 1/2 whose pairwise conditionals are (p, q, r):
/// events 1, 2, 3 play A, B, C, so p(1,2) = p/2, p(2,3) = q/2, p(1,3) = r/2.
inline evspace::CorrelationVector induced_vector(const evspace::CondTriple& t) {
  evspace::Rational half(1, 2);
  evspace::Prob m(half);
  return evspace::CorrelationVector({m, m, m}, {{{1, 2}, evspace::Prob(t.p.value() * half)},
                                                {{2, 3}, evspace::Prob(t.q.value() * half)},
                                                {{1, 3}, evspace::Prob(t.r.value() * half)}});
}

inline std::string vertex_bits(unsigned mask, int n) {
  std::string bits;
  for (int i = 0; i < n; ++i) bits += (mask >> (n - 1 - i)) & 1 ? '1' : '0';
  return bits;
}

/// Re-substitution written independently of the library: feasible weights
/// must be a distribution reproducing every present entry; a witness must be
/// positive on the input and non-positive on all 2^n vertices.
inline bool certificate_sound(const evspace::CorrelationVector& v,
                              const evspace::PolytopeCertificate& cert) {
  using evspace::Rational;
  if (cert.feasible) {
    if (cert.weights.empty() || cert.witness) return false;
    Rational total = 0;
    std::vector<Rational> unary(v.n(), 0);
    std::map<evspace::EventPair, Rational> pairs;
    for (const auto& [bits, w] : cert.weights) {
      if (w.value() <= 0 || static_cast<int>(bits.size()) != v.n()) return false;
      total += w.value();
      for (int i = 0; i < v.n(); ++i)
        if (bits[i] == '1') unary[i] += w.value();
      for (const auto& [key, value] : v.pairwise_entries())
        if (bits[key.first - 1] == '1' && bits[key.second - 1] == '1') pairs[key] += w.value();
    }
    if (total != 1) return false;
    for (int i = 0; i < v.n(); ++i)
      if (unary[i] != v.unary(i + 1).value()) return false;
    for (const auto& [key, value] : v.pairwise_entries())
      if (pairs[key] != value.value()) return false;
    return true;
  }
  if (!cert.witness) return false;
  if (cert.witness->evaluate(v) <= 0) return false;
  for (unsigned mask = 0; mask < (1u << v.n()); ++mask)
    if (cert.witness->evaluate(evspace::VertexVector(vertex_bits(mask, v.n()))) > 0) return false;
  return true;
}

}  // namespace testing
