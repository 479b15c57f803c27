// Acceptance criteria 1-12. One PASS/FAIL line per criterion; the exit status
// is nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evspace/admissibility.hpp"
#include "evspace/cli.hpp"
#include "evspace/errors.hpp"
#include "evspace/estimation.hpp"
#include "evspace/event_table.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/quantum.hpp"
#include "support.hpp"

using namespace evspace;
using testing::P;
using testing::T;

namespace {

// Pinned sizes and tolerances.
constexpr int kRandomCases = 1000;      // criteria 6, 9, 11
constexpr int kDecomposeCases = 100;    // criterion 10
constexpr int kMaxDenominator = 12;     // randomized rationals
constexpr int kMaxDecomposeEvents = 6;  // criterion 10
constexpr double kRoundTripTol = 1e-12;  // criterion 9
constexpr unsigned kSeed = 20260415;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string verdict_row(const CondTriple& t) {
  auto v = classify(t);
  auto yn = [](bool b) { return b ? "Yes" : "No"; };
  return std::string(yn(v.classical)) + "/" + yn(v.real_qs) + "/" + yn(v.complex_qs);
}

EventTable load_table(const std::string& name) {
  std::ifstream in((cli::default_data_dir() / name).string());
  if (!in) throw InputError("missing fixture " + name);
  return parse_event_table(in);
}

CorrelationVector random_complete(std::mt19937& rng, int n) {
  std::vector<Prob> unary;
  for (int i = 0; i < n; ++i) unary.push_back(testing::random_prob(rng, kMaxDenominator));
  std::map<EventPair, Prob> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs[{i, j}] = testing::random_prob(rng, kMaxDenominator);
  return CorrelationVector(unary, pairs);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  // Columns (Pr(B|C), Pr(B|A), Pr(C|A)) map onto (q, p, r).
  struct Row {
    const char *bc, *ba, *ca, *expected;
  };
  const Row rows[] = {{"1", "1", "1", "Yes/Yes/Yes"},
                      {"1/4", "1/4", "1/2", "Yes/No/Yes"},
                      {"1/4", "1/4", "1/4", "No/Yes/Yes"},
                      {"1/12", "1/12", "1/12", "No/No/No"}};
  for (const auto& r : rows) {
    CondTriple t(P(r.ba), P(r.bc), P(r.ca));
    std::string got = verdict_row(t);
    if (got != r.expected) return fail(to_string(t) + " gave " + got + ", expected " + r.expected);
  }
  return {true, "4 rows match"};
}

Outcome criterion2() {
  auto out = smooth_triple(T("3/4", "1/4", "9/15"), T("1/2", "1/2", "1/2"),
                           {P("1/9"), P("1/9"), P("2/17")});
  if (!(out == T("13/18", "5/18", "10/17"))) return fail("smoothed to " + to_string(out));
  if (check_classical(out)) return fail("check_classical accepted " + to_string(out));
  return {true, to_string(out) + " violates the classical bound"};
}

Outcome criterion3() {
  auto s1 = T("2/5", "1/5", "2/5");
  auto s2 = T("2/5", "1/5", "1/5");
  std::vector<CondTriple> ts{s1, s2};
  std::vector<Prob> w{P("1/2"), P("1/2")};
  auto mixed = broker_mix(ts, w);
  std::string mix_note = to_string(mixed) + (check_classical(mixed) ? " passes" : " fails");
  std::vector<std::string> problems;
  for (const auto& [name, t] : {std::pair{"S1", s1}, std::pair{"S2", s2}}) {
    if (!check_classical(t)) {
      auto b = classify(t).classical_bounds;
      problems.push_back(std::string(name) + " " + to_string(t) + " fails: r=" + t.r.str() +
                         " outside [" + b.lower.str() + ", " + b.upper.str() + "]");
    }
  }
  if (!(mixed == T("4/10", "2/10", "3/10"))) problems.push_back("mixture is " + to_string(mixed));
  if (check_classical(mixed)) problems.push_back("mixture passes");
  if (!problems.empty()) {
    std::string d;
    for (const auto& p : problems) d += (d.empty() ? "" : "; ") + p;
    return fail(d + "; mixture " + mix_note);
  }
  return {true, "both components pass, mixture " + mix_note};
}

Outcome criterion4() {
  auto t = estimate_triple(load_table("missing_relevance.tbl"), "A", "B", "C", MissingStrategy::ExcludeUnknown);
  if (!(t.p == P("2/5") && t.q == P("4/5") && t.r == P("1/5")))
    return fail("exclude-unknown estimate " + to_string(t));
  auto v = classify(t);
  if (!v.classical || !v.boundary) return fail("estimate not admitted on the boundary");
  auto pinned = T("2/5", "5/6", "1/6");
  if (check_classical(pinned)) return fail("pinned " + to_string(pinned) + " passes");
  return {true, to_string(t) + " on the bound; " + to_string(pinned) + " violates"};
}

Outcome criterion5() {
  auto t = T("1/10", "2/10", "3/10");
  if (check_classical(t)) return fail("classical accepts");
  if (check_complex_qs(t)) return fail("complex accepts");
  return {true, "rejected by both"};
}

// Criteria 6 and 8 share the randomized vectors.
struct PolytopeRun {
  Outcome six;
  int certificates = 0;
  int unsound = 0;
  std::string first_unsound;
};

PolytopeRun run_polytope_cases() {
  std::mt19937 rng(kSeed);
  PolytopeRun run;
  auto audit = [&](const CorrelationVector& v, const PolytopeCertificate& cert) {
    ++run.certificates;
    if (!testing::certificate_sound(v, cert)) {
      if (run.unsound++ == 0) run.first_unsound = serialize(v);
    }
  };
  int n2_feasible = 0;
  for (int i = 0; i < kRandomCases; ++i) {
    auto v = random_complete(rng, 2);
    auto cert = membership(v);
    audit(v, cert);
    n2_feasible += cert.feasible;
    if (closed_form_n2(v) != cert.feasible) {
      run.six = fail("n=2 disagreement on " + serialize(v));
      return run;
    }
  }
  int n3_feasible = 0;
  for (int i = 0; i < kRandomCases; ++i) {
    CondTriple t = testing::random_triple(rng, kMaxDenominator);
    auto v = testing::induced_vector(t);
    auto cert = membership(v);
    audit(v, cert);
    n3_feasible += cert.feasible;
    if (check_classical(t) != cert.feasible) {
      run.six = fail("marginal-1/2 disagreement on " + to_string(t));
      return run;
    }
  }
  run.six = {true, std::to_string(kRandomCases) + " n=2 vectors (" + std::to_string(n2_feasible) +
                       " feasible), " + std::to_string(kRandomCases) + " triples (" +
                       std::to_string(n3_feasible) + " feasible)"};
  return run;
}

Outcome criterion7() {
  auto v = parse_correlation_vector("n=3\np1=1/2\np2=1/2\np3=1/2\np1,2=1/8\np1,3=1/8\np2,3=1/8\n");
  if (!closed_form_n3(v)) return fail("displayed rows reject the vector");
  auto cert = membership(v);
  if (cert.feasible) return fail("membership feasible");
  if (!testing::certificate_sound(v, cert)) return fail("witness does not separate");
  return {true, "witness " + format_witness(*cert.witness)};
}

Outcome criterion8(const PolytopeRun& run) {
  if (run.unsound > 0)
    return fail(std::to_string(run.unsound) + " unsound certificates, first on " + run.first_unsound);
  return {true, std::to_string(run.certificates) + " certificates re-substituted"};
}

Outcome criterion9() {
  std::mt19937 rng(kSeed + 9);
  int accepted = 0, reals = 0, draws = 0;
  double worst = 0.0;
  while (accepted < kRandomCases) {
    ++draws;
    CondTriple t = testing::random_triple(rng, kMaxDenominator);
    if (!check_complex_qs(t)) continue;
    ++accepted;
    auto q = realize(t);
    const std::array<double, 3> got{amplitude_prob(q.a, q.b), amplitude_prob(q.b, q.c),
                                    amplitude_prob(q.a, q.c)};
    const std::array<double, 3> want{t.p.to_double(), t.q.to_double(), t.r.to_double()};
    for (int k = 0; k < 3; ++k) {
      double err = std::abs(got[k] - want[k]);
      worst = std::max(worst, err);
      if (err > kRoundTripTol) return fail("round-trip error " + std::to_string(err) + " on " + to_string(t));
    }
    bool is_real = q.field == Field::Real;
    reals += is_real;
    if (is_real != check_real_qs(t)) return fail("field mismatch on " + to_string(t));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  return {true, std::to_string(accepted) + " of " + std::to_string(draws) + " draws realized (" +
                    std::to_string(reals) + " real), max error " + buf};
}

Outcome criterion10() {
  std::mt19937 rng(kSeed + 10);
  int tested = 0, max_pieces = 0;
  while (tested < kDecomposeCases) {
    int n = std::uniform_int_distribution<int>(3, kMaxDecomposeEvents)(rng);
    CorrelationVector v = [&] {
      if (rng() % 2) return random_complete(rng, n);
      std::vector<Prob> priors, likes;
      for (int i = 0; i < n - 1; ++i) {
        priors.push_back(testing::random_prob(rng, kMaxDenominator));
        likes.push_back(testing::random_prob(rng, kMaxDenominator));
      }
      return build_ranking_vector(priors, likes, testing::random_prob(rng, kMaxDenominator));
    }();
    if (membership(v).feasible) continue;
    ++tested;
    auto d = decompose(v, n);
    if (d.subsets.size() < 2) return fail("single subset for " + serialize(v));
    std::vector<int> covered;
    for (const auto& piece : d.subsets) {
      std::vector<int> ev = piece.events;
      auto sub = v.restrict_to(ev);
      if (!piece.certificate.feasible || !testing::certificate_sound(sub, piece.certificate))
        return fail("piece without a feasible certificate in " + serialize(v));
      covered.insert(covered.end(), ev.begin(), ev.end());
    }
    std::sort(covered.begin(), covered.end());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    if (covered != all) return fail("events not covered exactly once in " + serialize(v));
    max_pieces = std::max<int>(max_pieces, static_cast<int>(d.subsets.size()));
  }
  return {true, std::to_string(tested) + " infeasible vectors split (up to " +
                    std::to_string(max_pieces) + " subsets)"};
}

Outcome criterion11() {
  // Random complete tables over A, B, C whose three marginal counts agree.
  std::mt19937 rng(kSeed + 11);
  int tested = 0, violations = 0, half_tested = 0, half_violations = 0;
  std::string first;
  while (tested < kRandomCases) {
    std::array<int, 8> counts{};
    int total = 0;
    for (auto& c : counts) total += c = std::uniform_int_distribution<int>(0, 4)(rng);
    std::array<int, 3> m{0, 0, 0};
    for (int k = 0; k < 8; ++k)
      for (int i = 0; i < 3; ++i)
        if ((k >> (2 - i)) & 1) m[i] += counts[k];
    if (m[0] == 0 || m[0] != m[1] || m[1] != m[2]) continue;
    std::vector<TableRow> rows;
    for (int k = 0; k < 8; ++k) {
      TableRow row;
      for (int i = 0; i < 3; ++i) row.values.push_back((k >> (2 - i)) & 1 ? Cell::Present : Cell::Absent);
      row.count = counts[k];
      rows.push_back(row);
    }
    EventTable table({"A", "B", "C"}, rows);
    auto t = estimate_triple(table, "A", "B", "C", MissingStrategy::ExcludeUnknown);
    ++tested;
    bool half = 2 * m[0] == total;
    half_tested += half;
    if (!check_classical(t)) {
      ++violations;
      half_violations += half;
      if (first.empty()) first = to_string(t) + " at marginal " + t.marginal->str();
    }
  }
  std::string summary = std::to_string(violations) + "/" + std::to_string(tested) +
                        " tables violate (first " + (first.empty() ? "-" : first) + "); at marginal 1/2: " +
                        std::to_string(half_violations) + "/" + std::to_string(half_tested);
  if (violations > 0) return fail(summary);
  return {true, summary};
}

Outcome criterion12() {
  std::ostringstream out, err;
  int code = cli::run({"reproduce"}, out, err);
  auto checks = cli::golden_checks(cli::default_data_dir());
  int passed = static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
  if (code != cli::kOk) return fail("reproduce exited " + std::to_string(code));
  if (passed != static_cast<int>(checks.size()))
    return fail(std::to_string(passed) + "/" + std::to_string(checks.size()) + " examples");
  return {true, std::to_string(passed) + "/" + std::to_string(checks.size()) + " pinned examples, exit 0"};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome>> results;
  PolytopeRun polytope;
  try {
    polytope = run_polytope_cases();
  } catch (const std::exception& e) {
    polytope.six = fail(std::string("exception: ") + e.what());
    polytope.unsound = -1;
    polytope.first_unsound = "(not run)";
  }

  results.emplace_back("survey table verdicts", guarded(criterion1));
  results.emplace_back("smoothing pathology", guarded(criterion2));
  results.emplace_back("broker pathology", guarded(criterion3));
  results.emplace_back("missing values", guarded(criterion4));
  results.emplace_back("neither space", guarded(criterion5));
  results.emplace_back("polytope oracle equivalence", polytope.six);
  results.emplace_back("n=3 necessity gap", guarded(criterion7));
  results.emplace_back("certificate soundness", guarded([&] { return criterion8(polytope); }));
  results.emplace_back("quantum round-trip", guarded(criterion9));
  results.emplace_back("decomposition", guarded(criterion10));
  results.emplace_back("classical soundness on equal marginals", guarded(criterion11));
  results.emplace_back("reproduce", guarded(criterion12));

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, o] = results[i];
    failed += !o.passed;
    std::printf("criterion %2zu: %s  %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
