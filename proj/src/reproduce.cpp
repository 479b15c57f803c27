#include <fstream>
#include <functional>
#include <sstream>

#include "evspace/admissibility.hpp"
#include "evspace/cli.hpp"
#include "evspace/corpus.hpp"
#include "evspace/errors.hpp"
#include "evspace/estimation.hpp"
#include "evspace/event_table.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/report.hpp"

namespace evspace::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("missing fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CondTriple T(std::int64_t pn, std::int64_t pd, std::int64_t qn, std::int64_t qd,
             std::int64_t rn, std::int64_t rd) {
  return CondTriple(prob(pn, pd), prob(qn, qd), prob(rn, rd));
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

class Golden {
 public:
  void add(std::string name, std::string expected, const std::function<std::string()>& compute) {
    GoldenCheck c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    try {
      c.actual = compute();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.passed = c.actual == c.expected;
    checks_.push_back(std::move(c));
  }
  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::vector<GoldenCheck> checks_;
};

// Runs the CLI in-process with --json and returns (exit code, report).
std::pair<int, Report> run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  std::ostringstream out, err;
  int code = run(args, out, err);
  if (code != kOk) return {code, Report()};
  return {code, Report::parse(out.str())};
}

}  // namespace

std::vector<GoldenCheck> golden_checks(const fs::path& data_dir) {
  Golden g;
  const auto fixture = [&](const char* name) { return (data_dir / name).string(); };

  // Core ingestion.
  g.add("event-space table: 8 listed events, total frequency 10", "rows=6 total=10", [&] {
    auto t = parse_event_table(slurp(fixture("event_space.tbl")));
    return "rows=" + std::to_string(t.rows().size()) + " total=" + std::to_string(t.total_count());
  });
  g.add("missing-relevance table: 12 tuples, 2 unknown cells", "total=12 unknown=2", [&] {
    auto t = parse_event_table(slurp(fixture("missing_relevance.tbl")));
    return "total=" + std::to_string(t.total_count()) + " unknown=" + std::to_string(t.unknown_cells());
  });
  g.add("prob(13, 18)", "13/18", [] { return prob(13, 18).str(); });

  // Three-observable inequalities.
  g.add("classical (13/18, 5/18, 10/17)", "No", [] { return yes_no(check_classical(T(13, 18, 5, 18, 10, 17))); });
  g.add("classical (1/2, 1/2, 1/2) with co-occurrence 1/4", "Yes mu=1/4", [] {
    auto t = T(1, 2, 1, 2, 1, 2);
    return yes_no(check_classical(t)) + " mu=" + Prob(t.p.value() * Rational(1, 2)).str();
  });
  g.add("classical (1/4, 1/4, 1/2)", "Yes", [] { return yes_no(check_classical(T(1, 4, 1, 4, 1, 2))); });
  g.add("complex QS (1/12, 1/12, 1/12)", "No", [] { return yes_no(check_complex_qs(T(1, 12, 1, 12, 1, 12))); });
  g.add("neither space (1/10, 2/10, 3/10)", "CS=No CoQS=No", [] {
    auto t = T(1, 10, 2, 10, 3, 10);
    return "CS=" + yes_no(check_classical(t)) + " CoQS=" + yes_no(check_complex_qs(t));
  });
  g.add("complex QS (1/4, 1/4, 1/2)", "Yes", [] { return yes_no(check_complex_qs(T(1, 4, 1, 4, 1, 2))); });
  g.add("real QS (1/4, 1/4, 1/4)", "Yes", [] { return yes_no(check_real_qs(T(1, 4, 1, 4, 1, 4))); });
  g.add("real QS (1/4, 1/4, 1/2)", "No", [] { return yes_no(check_real_qs(T(1, 4, 1, 4, 1, 2))); });
  g.add("table row: query 33 nonnormal/attainable", "CS=Yes ReQS=Yes CoQS=Yes",
        [] { return verdict_summary(classify(T(1, 1, 1, 1, 1, 1))); });
  g.add("table row: query 30 infinity/typesetting", "CS=Yes ReQS=No CoQS=Yes",
        [] { return verdict_summary(classify(T(1, 4, 1, 4, 1, 2))); });
  g.add("table row: query 30 translates/infinity", "CS=No ReQS=Yes CoQS=Yes",
        [] { return verdict_summary(classify(T(1, 4, 1, 4, 1, 4))); });
  g.add("table row: query 37 registers/compatible", "CS=No ReQS=No CoQS=No",
        [] { return verdict_summary(classify(T(1, 12, 1, 12, 1, 12))); });

  // Correlation polytope.
  g.add("vertex b=01", "(0, 1, 0)", [] {
    auto b = vertex_vector("01");
    return "(" + std::to_string(b.unary(1)) + ", " + std::to_string(b.unary(2)) + ", " +
           std::to_string(b.pairwise(1, 2)) + ")";
  });
  g.add("membership p12 > p1 (1/2, 1/2, 3/5)", "infeasible, witness separates", [&] {
    auto v = parse_correlation_vector(slurp(fixture("vectors/n2_infeasible.vec")));
    auto c = membership(v);
    return std::string(c.feasible ? "feasible" : "infeasible") +
           (verify_certificate(v, c) && c.witness ? ", witness separates" : ", bad certificate");
  });
  g.add("closed form n=2 (1/2, 1/2, 3/5)", "No", [&] {
    return yes_no(closed_form_n2(parse_correlation_vector(slurp(fixture("vectors/n2_infeasible.vec")))));
  });
  g.add("infeasible vector splits into at least two single-space subsets", "subsets>=2 all feasible", [&] {
    auto v = parse_correlation_vector(slurp(fixture("vectors/n3_gap.vec")));
    auto d = decompose(v, v.n());
    bool ok = !membership(v).feasible;
    for (const auto& piece : d.subsets) ok = ok && piece.certificate.feasible;
    return std::string(d.subsets.size() >= 2 ? "subsets>=2" : "subsets<2") +
           (ok ? " all feasible" : " infeasible piece");
  });

  // Estimation.
  g.add("event-space Pr(B|A), Pr(C|B), Pr(C|A)", "2/5 4/5 1/5", [&] {
    auto t = parse_event_table(slurp(fixture("event_space.tbl")));
    auto s = MissingStrategy::ExcludeUnknown;
    return cond_prob(t, "B", "A", s).str() + " " + cond_prob(t, "C", "B", s).str() + " " +
           cond_prob(t, "C", "A", s).str();
  });
  g.add("S1 p1 = Pr(B|A), q1 = mu(B and C)/mu(B), r1 = Pr(C|A)", "2/5 1/5 2/5", [&] {
    auto t = parse_event_table(slurp(fixture("s1.tbl")));
    auto s = MissingStrategy::ExcludeUnknown;
    return cond_prob(t, "B", "A", s).str() + " " + cond_prob(t, "C", "B", s).str() + " " +
           cond_prob(t, "C", "A", s).str();
  });
  g.add("S2 triple", "(2/5, 1/5, 1/5)", [&] {
    auto t = parse_event_table(slurp(fixture("s2.tbl")));
    return to_string(estimate_triple(t, "A", "B", "C", MissingStrategy::ExcludeUnknown));
  });
  g.add("S1 and S2 each admit a single event space (frequency measure)", "Yes Yes", [&] {
    std::string out;
    const std::vector<std::string> abc{"A", "B", "C"};
    for (const char* f : {"s1.tbl", "s2.tbl"}) {
      auto t = parse_event_table(slurp(fixture(f)));
      auto v = correlation_vector_from_table(t, abc, MissingStrategy::ExcludeUnknown);
      out += (out.empty() ? "" : " ") + yes_no(membership(v).feasible);
    }
    return out;
  });
  g.add("event-space estimate: classical holds on the bound", "(2/5, 4/5, 1/5) CS=Yes boundary=Yes", [&] {
    auto t = estimate_triple(parse_event_table(slurp(fixture("event_space.tbl"))), "A", "B", "C",
                             MissingStrategy::ExcludeUnknown);
    auto v = classify(t);
    return to_string(t) + " CS=" + yes_no(v.classical) + " boundary=" + yes_no(v.boundary);
  });
  g.add("missing-relevance estimate over the ten known tuples", "(2/5, 4/5, 1/5)", [&] {
    return to_string(estimate_triple(parse_event_table(slurp(fixture("missing_relevance.tbl"))), "A", "B", "C",
                                     MissingStrategy::ExcludeUnknown));
  });
  g.add("missing-relevance second estimate (2/5, 5/6, 1/6) violates", "No",
        [] { return yes_no(check_classical(T(2, 5, 5, 6, 1, 6))); });
  g.add("smoothing with (1/9, 1/9, 2/17)", "(13/18, 5/18, 10/17) CS=No", [] {
    auto t = smooth_triple(T(3, 4, 1, 4, 9, 15), T(1, 2, 1, 2, 1, 2),
                           {prob(1, 9), prob(1, 9), prob(2, 17)});
    return to_string(t) + " CS=" + yes_no(check_classical(t));
  });
  g.add("broker mixture at alpha = 1/2", "(2/5, 1/5, 3/10) CS=No", [] {
    std::vector<CondTriple> ts{T(2, 5, 1, 5, 2, 5), T(2, 5, 1, 5, 1, 5)};
    std::vector<Prob> ws{prob(1, 2), prob(1, 2)};
    auto t = broker_mix(ts, ws);
    return to_string(t) + " CS=" + yes_no(check_classical(t));
  });

  // Corpus survey.
  auto survey_row = [&](const std::string& query, const std::string& b, const std::string& c) {
    std::ifstream docs(data_dir / "cacm_toy/docs.txt"), qrels(data_dir / "cacm_toy/qrels.txt");
    if (!docs || !qrels) throw InputError("missing cacm_toy fixture");
    for (const auto& row : survey_corpus(parse_corpus(docs, qrels)))
      if (row.query_id == query && row.term_b == b && row.term_c == c)
        return row.triple.q.str() + " " + row.triple.p.str() + " " + row.triple.r.str() + " " +
               verdict_summary(row.verdict);
    return std::string("row not found");
  };
  g.add("survey query 33 attainable/nonnormal", "1 1 1 CS=Yes ReQS=Yes CoQS=Yes",
        [&] { return survey_row("33", "attainable", "nonnormal"); });
  g.add("survey query 30 infinity/typesetting", "1/4 1/4 1/2 CS=Yes ReQS=No CoQS=Yes",
        [&] { return survey_row("30", "infinity", "typesetting"); });
  g.add("survey query 30 infinity/translates", "1/4 1/4 1/4 CS=No ReQS=Yes CoQS=Yes",
        [&] { return survey_row("30", "infinity", "translates"); });
  g.add("survey query 37 compatible/registers", "1/12 1/12 1/12 CS=No ReQS=No CoQS=No",
        [&] { return survey_row("37", "compatible", "registers"); });

  // Command line.
  g.add("cli: check 13/18 5/18 10/17", "exit=0 CS=No ReQS=No CoQS=Yes", [] {
    auto [code, r] = run_json({"check", "13/18", "5/18", "10/17"});
    return "exit=" + std::to_string(code) + " " + r.data().value("summary", std::string("?"));
  });
  g.add("cli: check 1 1 1", "exit=0 CS=Yes ReQS=Yes CoQS=Yes", [] {
    auto [code, r] = run_json({"check", "1", "1", "1"});
    return "exit=" + std::to_string(code) + " " + r.data().value("summary", std::string("?"));
  });
  g.add("cli: vector membership n2_infeasible.vec", "exit=0 infeasible witness", [&] {
    auto [code, r] = run_json({"vector", "membership", fixture("vectors/n2_infeasible.vec")});
    const auto& c = r.data()["certificate"];
    return "exit=" + std::to_string(code) + (c.value("feasible", true) ? " feasible" : " infeasible") +
           (c.contains("witness") ? " witness" : "");
  });
  g.add("cli: estimate event_space.tbl A B C --strategy exclude-unknown", "exit=0 2/5 4/5 1/5", [&] {
    auto [code, r] = run_json({"estimate", fixture("event_space.tbl"), "A", "B", "C", "--strategy",
                               "exclude-unknown"});
    const auto& t = r.data()["triple"];
    return "exit=" + std::to_string(code) + " " + t.value("p", "?") + " " + t.value("q", "?") + " " +
           t.value("r", "?");
  });
  g.add("cli: mix --alpha 1/2 s1.tbl s2.tbl", "exit=0 2/5 1/5 3/10 CS=No", [&] {
    auto [code, r] = run_json({"mix", "--alpha", "1/2", fixture("s1.tbl"), fixture("s2.tbl")});
    const auto& t = r.data()["triple"];
    return "exit=" + std::to_string(code) + " " + t.value("p", "?") + " " + t.value("q", "?") + " " +
           t.value("r", "?") + " " + (r.data()["verdict"].value("CS", true) ? "CS=Yes" : "CS=No");
  });

  return g.take();
}

}  // namespace evspace::cli
