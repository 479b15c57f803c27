#include "evspace/estimation.hpp"

#include <algorithm>
#include <map>

#include "evspace/errors.hpp"

namespace evspace {
namespace {

// Column indices that must be known for a row to count under ExcludeUnknown.
std::vector<std::size_t> universe_columns(const EventTable& table,
                                          std::initializer_list<std::string_view> names,
                                          std::span<const std::string> scope) {
  std::vector<std::size_t> cols;
  for (auto name : names) cols.push_back(table.index_of(name));
  for (const auto& name : scope) cols.push_back(table.index_of(name));
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

bool in_universe(const TableRow& row, const std::vector<std::size_t>& cols,
                 MissingStrategy strategy) {
  if (strategy == MissingStrategy::UnknownAsAbsent) return true;
  return std::none_of(cols.begin(), cols.end(),
                      [&](std::size_t c) { return row.values[c] == Cell::Unknown; });
}

}  // namespace

std::string_view to_string(MissingStrategy s) {
  return s == MissingStrategy::ExcludeUnknown ? "exclude-unknown" : "unknown-as-absent";
}

MissingStrategy parse_missing_strategy(std::string_view text) {
  if (text == "exclude-unknown") return MissingStrategy::ExcludeUnknown;
  if (text == "unknown-as-absent") return MissingStrategy::UnknownAsAbsent;
  throw InputError("unknown strategy '" + std::string(text) + "'");
}

Prob marginal_prob(const EventTable& table, std::string_view name, MissingStrategy strategy,
                   std::span<const std::string> scope) {
  auto cols = universe_columns(table, {name}, scope);
  const std::size_t col = table.index_of(name);
  std::uint64_t universe = 0;
  std::uint64_t hits = 0;
  for (const auto& row : table.rows()) {
    if (!in_universe(row, cols, strategy)) continue;
    universe += row.count;
    if (row.values[col] == Cell::Present) hits += row.count;
  }
  if (universe == 0) throw ZeroMeasureError("no rows with known '" + std::string(name) + "'");
  return prob(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(universe));
}

Prob cond_prob(const EventTable& table, std::string_view target, std::string_view given,
               MissingStrategy strategy, std::span<const std::string> scope) {
  auto cols = universe_columns(table, {target, given}, scope);
  const std::size_t t = table.index_of(target);
  const std::size_t g = table.index_of(given);
  std::uint64_t given_mass = 0;
  std::uint64_t joint_mass = 0;
  for (const auto& row : table.rows()) {
    if (!in_universe(row, cols, strategy)) continue;
    if (row.values[g] != Cell::Present) continue;
    given_mass += row.count;
    if (row.values[t] == Cell::Present) joint_mass += row.count;
  }
  if (given_mass == 0)
    throw ZeroMeasureError("conditioning event '" + std::string(given) + "' has zero measure");
  // Frequencies are relative to the same universe, so it cancels.
  return prob(static_cast<std::int64_t>(joint_mass), static_cast<std::int64_t>(given_mass));
}

CondTriple estimate_triple(const EventTable& table, std::string_view a, std::string_view b,
                           std::string_view c, MissingStrategy strategy) {
  const std::vector<std::string> scope{std::string(a), std::string(b), std::string(c)};
  Prob p = cond_prob(table, b, a, strategy, scope);
  Prob q = cond_prob(table, c, b, strategy, scope);
  Prob r = cond_prob(table, c, a, strategy, scope);
  Prob ma = marginal_prob(table, a, strategy, scope);
  Prob mb = marginal_prob(table, b, strategy, scope);
  Prob mc = marginal_prob(table, c, strategy, scope);
  std::optional<Prob> marginal;
  if (ma == mb && mb == mc) marginal = ma;
  return CondTriple(std::move(p), std::move(q), std::move(r), std::move(marginal));
}

CorrelationVector correlation_vector_from_table(const EventTable& table,
                                                std::span<const std::string> names,
                                                MissingStrategy strategy) {
  std::vector<std::size_t> cols;
  for (const auto& name : names) cols.push_back(table.index_of(name));
  const std::size_t k = cols.size();
  std::uint64_t universe = 0;
  std::vector<std::uint64_t> single(k);
  std::map<EventPair, std::uint64_t> joint;
  for (const auto& row : table.rows()) {
    if (!in_universe(row, cols, strategy)) continue;
    universe += row.count;
    for (std::size_t i = 0; i < k; ++i) {
      if (row.values[cols[i]] != Cell::Present) continue;
      single[i] += row.count;
      for (std::size_t j = i + 1; j < k; ++j)
        if (row.values[cols[j]] == Cell::Present)
          joint[{static_cast<int>(i + 1), static_cast<int>(j + 1)}] += row.count;
    }
  }
  if (universe == 0) throw ZeroMeasureError("no rows with all observables known");
  const auto total = static_cast<std::int64_t>(universe);
  std::vector<Prob> unary;
  for (auto s : single) unary.push_back(prob(static_cast<std::int64_t>(s), total));
  std::map<EventPair, Prob> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      EventPair key{static_cast<int>(i + 1), static_cast<int>(j + 1)};
      auto it = joint.find(key);
      pairs.emplace(key, prob(static_cast<std::int64_t>(it == joint.end() ? 0 : it->second), total));
    }
  return CorrelationVector(std::move(unary), std::move(pairs));
}

CondTriple smooth_triple(const CondTriple& base, const CondTriple& background,
                         const SmoothingCoeffs& coeffs) {
  auto blend = [](const Prob& w, const Prob& bg, const Prob& x) {
    return Prob(w.value() * bg.value() + (1 - w.value()) * x.value());
  };
  return CondTriple(blend(coeffs.alpha, background.p, base.p),
                    blend(coeffs.beta, background.q, base.q),
                    blend(coeffs.gamma, background.r, base.r));
}

CondTriple broker_mix(std::span<const CondTriple> triples, std::span<const Prob> weights) {
  if (triples.size() != weights.size())
    throw InputError("broker_mix: triples and weights differ in length");
  if (triples.empty()) throw InputError("broker_mix: no components");
  Rational sum, p, q, r;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Rational& w = weights[i].value();
    sum += w;
    p += w * triples[i].p.value();
    q += w * triples[i].q.value();
    r += w * triples[i].r.value();
  }
  if (sum != 1) throw InputError("broker_mix: weights sum to " + to_string(sum) + ", not 1");
  return CondTriple(Prob(p), Prob(q), Prob(r));
}

CondTriple MixtureSpec::mix() const {
  std::vector<CondTriple> triples;
  std::vector<Prob> weights;
  for (const auto& c : components) {
    triples.push_back(c.triple);
    weights.push_back(c.weight);
  }
  return broker_mix(triples, weights);
}

}  // namespace evspace
