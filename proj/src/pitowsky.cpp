#include "evspace/pitowsky.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <sstream>

#include "evspace/errors.hpp"
#include "evspace/simplex.hpp"

namespace evspace {
namespace {

// Bit string of vertex `k` over n events; event 1 is the leading character,
// so k = 0..2^n-1 walks the strings in lexicographic order.
std::string vertex_bits(std::size_t k, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((k >> (n - 1 - i)) & 1U) bits[static_cast<std::size_t>(i)] = '1';
  return bits;
}

bool bit(std::size_t k, int n, int i) { return (k >> (n - i)) & 1U; }

SeparatingWitness to_witness(const CorrelationVector& v, const std::vector<Rational>& y) {
  // Row layout matches membership(): unary rows, pairwise rows, sum row.
  BigInt scale = 1;
  for (const auto& c : y) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : y) {
    BigInt z = c.get_num() * (scale / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (g != 0)
    for (auto& z : ints) z /= g;

  SeparatingWitness w;
  std::size_t row = 0;
  for (int i = 1; i <= v.n(); ++i) w.unary.push_back(ints[row++]);
  for (const auto& entry : v.pairwise_entries()) w.pairwise[entry.first] = ints[row++];
  w.constant = ints[row];
  return w;
}

void require_complete(const CorrelationVector& v, int n, const char* what) {
  if (v.n() != n) throw InputError(std::string(what) + ": wrong arity n=" + std::to_string(v.n()));
  if (!v.is_complete()) throw InputError(std::string(what) + ": vector must be complete");
}

}  // namespace

VertexVector::VertexVector(std::string bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) throw InputError("vertex bit string needs length >= 2");
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw InputError("non-binary character '" + std::string(1, c) + "' in vertex");
}

CorrelationVector VertexVector::to_correlation_vector() const {
  std::vector<Prob> singles;
  std::map<EventPair, Prob> pairs;
  for (int i = 1; i <= n(); ++i) {
    singles.push_back(prob(unary(i), 1));
    for (int j = i + 1; j <= n(); ++j) pairs.emplace(EventPair{i, j}, prob(pairwise(i, j), 1));
  }
  return CorrelationVector(std::move(singles), std::move(pairs));
}

VertexVector vertex_vector(std::string_view bits) { return VertexVector(std::string(bits)); }

Rational SeparatingWitness::evaluate(const CorrelationVector& v) const {
  if (unary.size() != static_cast<std::size_t>(v.n()))
    throw InputError("witness arity does not match vector");
  Rational total(constant);
  for (int i = 1; i <= v.n(); ++i) total += Rational(unary[static_cast<std::size_t>(i - 1)]) * v.unary(i).value();
  for (const auto& [key, coeff] : pairwise) {
    auto p = v.pairwise(key.first, key.second);
    if (!p) throw InputError("witness references an absent pair");
    total += Rational(coeff) * p->value();
  }
  return total;
}

Rational SeparatingWitness::evaluate(const VertexVector& b) const {
  if (unary.size() != static_cast<std::size_t>(b.n()))
    throw InputError("witness arity does not match vertex");
  Rational total(constant);
  for (int i = 1; i <= b.n(); ++i)
    if (b.unary(i)) total += Rational(unary[static_cast<std::size_t>(i - 1)]);
  for (const auto& [key, coeff] : pairwise)
    if (b.pairwise(key.first, key.second)) total += Rational(coeff);
  return total;
}

PolytopeCertificate membership(const CorrelationVector& v, const MembershipOptions& opts) {
  const int n = v.n();
  if (n > opts.max_n)
    throw ResourceLimit("n=" + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_n));
  const std::size_t vertices = std::size_t{1} << n;

  lp::Matrix A;
  std::vector<Rational> b;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> row(vertices);
    for (std::size_t k = 0; k < vertices; ++k) row[k] = bit(k, n, i) ? 1 : 0;
    A.push_back(std::move(row));
    b.push_back(v.unary(i).value());
  }
  for (const auto& [key, p] : v.pairwise_entries()) {
    std::vector<Rational> row(vertices);
    for (std::size_t k = 0; k < vertices; ++k)
      row[k] = (bit(k, n, key.first) && bit(k, n, key.second)) ? 1 : 0;
    A.push_back(std::move(row));
    b.push_back(p.value());
  }
  A.emplace_back(vertices, Rational(1));
  b.emplace_back(1);

  auto solved = lp::solve_feasibility(A, b);
  PolytopeCertificate cert;
  cert.feasible = solved.feasible;
  if (solved.feasible) {
    for (std::size_t k = 0; k < vertices; ++k)
      if (sgn(solved.x[k]) != 0) cert.weights.emplace(vertex_bits(k, n), Prob(solved.x[k]));
  } else {
    cert.witness = to_witness(v, solved.farkas);
  }
  if (!verify_certificate(v, cert))
    throw std::logic_error("membership: certificate failed re-substitution");
  return cert;
}

bool verify_certificate(const CorrelationVector& v, const PolytopeCertificate& cert) {
  const int n = v.n();
  if (cert.feasible) {
    if (cert.witness) return false;
    Rational total;
    std::vector<Rational> unary(static_cast<std::size_t>(n));
    std::map<EventPair, Rational> pairs;
    for (const auto& [bits, w] : cert.weights) {
      if (bits.size() != static_cast<std::size_t>(n)) return false;
      total += w.value();
      for (int i = 1; i <= n; ++i) {
        if (bits[static_cast<std::size_t>(i - 1)] != '1') continue;
        unary[static_cast<std::size_t>(i - 1)] += w.value();
        for (int j = i + 1; j <= n; ++j)
          if (bits[static_cast<std::size_t>(j - 1)] == '1') pairs[{i, j}] += w.value();
      }
    }
    if (total != 1) return false;
    for (int i = 1; i <= n; ++i)
      if (unary[static_cast<std::size_t>(i - 1)] != v.unary(i).value()) return false;
    for (const auto& [key, p] : v.pairwise_entries())
      if (pairs[key] != p.value()) return false;
    return true;
  }
  if (!cert.witness || !cert.weights.empty()) return false;
  const auto& w = *cert.witness;
  if (w.unary.size() != static_cast<std::size_t>(n)) return false;
  for (const auto& [key, coeff] : w.pairwise)
    if (!v.pairwise(key.first, key.second)) return false;
  if (sgn(w.evaluate(v)) <= 0) return false;
  const std::size_t vertices = std::size_t{1} << n;
  for (std::size_t k = 0; k < vertices; ++k) {
    // Vertex evaluation inline: VertexVector insists on n >= 2.
    Rational total(w.constant);
    for (int i = 1; i <= n; ++i)
      if (bit(k, n, i)) total += Rational(w.unary[static_cast<std::size_t>(i - 1)]);
    for (const auto& [key, coeff] : w.pairwise)
      if (bit(k, n, key.first) && bit(k, n, key.second)) total += Rational(coeff);
    if (sgn(total) > 0) return false;
  }
  return true;
}

bool closed_form_n2(const CorrelationVector& v) {
  require_complete(v, 2, "closed_form_n2");
  const Rational& p1 = v.unary(1).value();
  const Rational& p2 = v.unary(2).value();
  Rational p12 = v.pairwise(1, 2)->value();
  Rational either = p1 + p2 - p12;
  return 0 <= p12 && p12 <= p1 && p1 <= 1 &&
         p12 <= p2 && p2 <= 1 &&
         0 <= either && either <= 1;
}

bool closed_form_n3(const CorrelationVector& v) {
  require_complete(v, 3, "closed_form_n3");
  auto u = [&](int i) { return v.unary(i).value(); };
  auto pw = [&](int i, int j) { return v.pairwise(i, j)->value(); };
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      Rational pij = pw(i, j);
      if (pij < 0 || pij > u(i) || pij > u(j)) return false;
      Rational either = u(i) + u(j) - pij;
      if (either < 0 || either > 1) return false;
    }
  return u(1) - pw(1, 2) - pw(1, 3) + pw(2, 3) >= 0 &&
         u(2) - pw(1, 2) - pw(2, 3) + pw(1, 3) >= 0 &&
         u(3) - pw(1, 3) - pw(2, 3) + pw(1, 2) >= 0;
}

CorrelationVector build_ranking_vector(std::span<const Prob> doc_priors,
                                       std::span<const Prob> doc_likelihoods,
                                       const Prob& pA) {
  if (doc_priors.size() != doc_likelihoods.size())
    throw InputError("build_ranking_vector: priors and likelihoods differ in length");
  if (doc_priors.empty()) throw InputError("build_ranking_vector: no documents");
  const int n = static_cast<int>(doc_priors.size()) + 1;
  std::vector<Prob> unary(doc_priors.begin(), doc_priors.end());
  unary.push_back(pA);
  std::map<EventPair, Prob> pairs;
  for (int i = 1; i < n; ++i)
    pairs.emplace(EventPair{i, n},
                  Prob(doc_likelihoods[static_cast<std::size_t>(i - 1)].value() * pA.value()));
  return CorrelationVector(std::move(unary), std::move(pairs));
}

namespace {

// Advances `idx` (sorted positions into a pool of size `pool`) to the next
// k-combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t pool) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < pool - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

void split_events(const CorrelationVector& v, std::vector<int> events, int relevance,
                  const MembershipOptions& opts, RankingDecomposition& out) {
  auto cert = membership(v.restrict_to(events), opts);
  if (cert.feasible) {
    out.subsets.push_back({std::move(events), std::move(cert)});
    return;
  }
  std::vector<int> candidates;
  for (int e : events)
    if (e != relevance) candidates.push_back(e);
  const std::size_t max_k = std::min(candidates.size(), events.size() - 1);
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      std::vector<int> apart;
      for (std::size_t i : idx) apart.push_back(candidates[i]);
      std::vector<int> remaining;
      std::set_difference(events.begin(), events.end(), apart.begin(), apart.end(),
                          std::back_inserter(remaining));
      auto rest = membership(v.restrict_to(remaining), opts);
      if (rest.feasible) {
        out.subsets.push_back({std::move(remaining), std::move(rest)});
        out.dropped_order.push_back(apart);
        split_events(v, std::move(apart), 0, opts, out);
        return;
      }
    } while (next_combination(idx, candidates.size()));
  }
  // Unreachable: a single remaining event is always feasible.
  throw std::logic_error("decompose: no feasible remainder found");
}

}  // namespace

RankingDecomposition decompose(const CorrelationVector& v, int relevance_index,
                               const MembershipOptions& opts) {
  if (relevance_index < 1 || relevance_index > v.n())
    throw InputError("relevance index " + std::to_string(relevance_index) + " out of range");
  if (v.n() > opts.max_n)
    throw ResourceLimit("n=" + std::to_string(v.n()) + " exceeds cap " + std::to_string(opts.max_n));
  RankingDecomposition out;
  std::vector<int> all(static_cast<std::size_t>(v.n()));
  std::iota(all.begin(), all.end(), 1);
  split_events(v, std::move(all), relevance_index, opts, out);
  return out;
}

std::string format_witness(const SeparatingWitness& w) {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const BigInt& c, const std::string& name) {
    if (c == 0) return;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    out << mag.get_str();
    if (!name.empty()) out << "·" << name;
    first = false;
  };
  for (std::size_t i = 0; i < w.unary.size(); ++i) term(w.unary[i], "p" + std::to_string(i + 1));
  for (const auto& [key, c] : w.pairwise)
    term(c, "p" + std::to_string(key.first) + "," + std::to_string(key.second));
  term(w.constant, "");
  if (first) out << "0";
  out << " > 0";
  return out.str();
}

std::string format_certificate(const PolytopeCertificate& cert) {
  std::ostringstream out;
  if (cert.feasible) {
    out << "feasible\n";
    for (const auto& [bits, weight] : cert.weights) out << "b=" << bits << " w=" << weight.str() << '\n';
  } else {
    out << "infeasible\n";
    if (cert.witness) out << "witness: " << format_witness(*cert.witness) << '\n';
  }
  return out.str();
}

}  // namespace evspace
