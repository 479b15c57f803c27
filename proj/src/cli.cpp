#include "evspace/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "evspace/admissibility.hpp"
#include "evspace/corpus.hpp"
#include "evspace/errors.hpp"
#include "evspace/estimation.hpp"
#include "evspace/event_table.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/quantum.hpp"
#include "evspace/report.hpp"

namespace evspace::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Prob> parse_prob_list(const std::string& text) {
  std::vector<Prob> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_prob(item));
  return out;
}

CondTriple parse_triple_list(const std::string& text) {
  auto v = parse_prob_list(text);
  if (v.size() != 3) throw InputError("expected three comma-separated probabilities: '" + text + "'");
  return CondTriple(v[0], v[1], v[2]);
}

void symmetry_warnings(Report& report, const CondTriple& t) {
  if (!t.marginal)
    report.warn("equal-marginals premise unchecked: marginal not supplied");
  else if (t.marginal->value() != Rational(1, 2))
    report.warn("equal-marginals premise not met: marginal " + t.marginal->str() + " != 1/2");
}

Report triple_report(const std::string& command, const CondTriple& t, NumberStyle style) {
  Report report(command);
  auto verdict = classify(t);
  report.data()["triple"] = triple_json(t, style);
  report.data()["verdict"] = verdict_json(verdict, style);
  report.data()["summary"] = verdict_summary(verdict);
  symmetry_warnings(report, t);
  return report;
}

int max_n_from_env(int fallback) {
  const char* env = std::getenv("EVSPACE_MAX_N");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw InputError(std::string("EVSPACE_MAX_N is not a positive integer: '") + env + "'");
  }
}

}  // namespace

std::filesystem::path default_data_dir() {
#ifdef EVSPACE_DATA_DIR
  return EVSPACE_DATA_DIR;
#else
  return "data";
#endif
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissibility of observed probabilities: classical event space, "
               "real or complex quantum space.",
               "evspace"};
  app.require_subcommand(1);
  bool json = false;
  bool decimal = false;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--float", decimal, "Print decimals instead of exact rationals");

  // check
  auto* check = app.add_subcommand("check", "Classify a conditional triple (p, q, r)");
  std::string p_text, q_text, r_text, marginal_text;
  check->add_option("p", p_text, "Pr between A and B")->required();
  check->add_option("q", q_text, "Pr between B and C")->required();
  check->add_option("r", r_text, "Pr between A and C")->required();
  check->add_option("--marginal", marginal_text, "Common marginal of A, B, C");

  // vector membership | decompose
  auto* vector = app.add_subcommand("vector", "Correlation-polytope queries");
  vector->require_subcommand(1);
  std::string vector_file;
  int max_n = -1;
  int relevance = -1;
  auto* membership_cmd = vector->add_subcommand("membership", "Polytope membership with certificate");
  membership_cmd->add_option("file", vector_file, "Correlation vector file")->required();
  membership_cmd->add_option("--max-n", max_n, "Cap on the number of events");
  auto* decompose_cmd = vector->add_subcommand("decompose", "Split into single-space subsets");
  decompose_cmd->add_option("file", vector_file, "Correlation vector file")->required();
  decompose_cmd->add_option("--relevance", relevance, "Relevance event index (default n)");
  decompose_cmd->add_option("--max-n", max_n, "Cap on the number of events");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate (p, q, r) from an event table");
  std::string table_file, strategy_text = "exclude-unknown";
  std::vector<std::string> names;
  estimate->add_option("table", table_file, "Event table file")->required();
  estimate->add_option("observables", names, "Observables A B C (default: first three)")
      ->expected(0, 3);
  estimate->add_option("--strategy", strategy_text, "exclude-unknown | unknown-as-absent");

  // mix
  auto* mix = app.add_subcommand("mix", "Broker mixture of per-collection triples");
  std::string alpha_text, weights_text, observables_text;
  std::vector<std::string> table_files;
  mix->add_option("tables", table_files, "Per-collection event tables")->required();
  mix->add_option("--alpha", alpha_text, "Weight of the first of two tables");
  mix->add_option("--weights", weights_text, "Comma-separated weights, one per table");
  mix->add_option("--observables", observables_text, "Comma-separated A,B,C names");
  mix->add_option("--strategy", strategy_text, "exclude-unknown | unknown-as-absent");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "Linear smoothing toward a background triple");
  std::string base_text, background_text = "1/2,1/2,1/2", beta_text, gamma_text;
  smooth->add_option("--base", base_text, "p,q,r")->required();
  smooth->add_option("--background", background_text, "p,q,r (default 1/2,1/2,1/2)");
  smooth->add_option("--alpha", alpha_text, "Coefficient for p")->required();
  smooth->add_option("--beta", beta_text, "Coefficient for q")->required();
  smooth->add_option("--gamma", gamma_text, "Coefficient for r")->required();

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "Hilbert-space realization of (p, q, r)");
  realize_cmd->add_option("p", p_text)->required();
  realize_cmd->add_option("q", q_text)->required();
  realize_cmd->add_option("r", r_text)->required();

  // survey
  auto* survey = app.add_subcommand("survey", "Term-pair survey over a test collection");
  std::string docs_file, qrels_file;
  survey->add_option("documents", docs_file, "Documents file")->required();
  survey->add_option("qrels", qrels_file, "Relevance judgments file")->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Replay every pinned example");
  std::string data_dir = default_data_dir().string();
  reproduce->add_option("--data-dir", data_dir, "Fixture directory");

  for (auto* sub : {check, vector, membership_cmd, decompose_cmd, estimate, mix, smooth,
                    realize_cmd, survey, reproduce})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const NumberStyle style = decimal ? NumberStyle::Decimal : NumberStyle::Exact;
  auto emit = [&](const Report& report) {
    out << (json ? report.render_json() : report.render_text());
  };

  try {
    if (*check) {
      std::optional<Prob> marginal;
      if (!marginal_text.empty()) marginal = parse_prob(marginal_text);
      CondTriple t(parse_prob(p_text), parse_prob(q_text), parse_prob(r_text), marginal);
      emit(triple_report("check", t, style));
      return kOk;
    }

    if (*vector) {
      MembershipOptions opts;
      opts.max_n = max_n > 0 ? max_n : max_n_from_env(opts.max_n);
      auto v = parse_correlation_vector(read_file(vector_file));
      if (*membership_cmd) {
        Report report("vector membership");
        report.data()["n"] = v.n();
        report.data()["certificate"] = certificate_json(membership(v, opts), style);
        emit(report);
      } else {
        int rel = relevance > 0 ? relevance : v.n();
        Report report("vector decompose");
        report.data()["n"] = v.n();
        report.data()["relevance"] = rel;
        report.data()["decomposition"] = decomposition_json(decompose(v, rel, opts), style);
        emit(report);
      }
      return kOk;
    }

    if (*estimate) {
      auto table = parse_event_table(read_file(table_file));
      auto strategy = parse_missing_strategy(strategy_text);
      if (names.empty()) {
        if (table.observables().size() < 3) throw InputError("table has fewer than three observables");
        names.assign(table.observables().begin(), table.observables().begin() + 3);
      }
      if (names.size() != 3) throw InputError("estimate needs exactly three observables");
      auto t = estimate_triple(table, names[0], names[1], names[2], strategy);
      auto report = triple_report("estimate", t, style);
      report.data()["strategy"] = std::string(to_string(strategy));
      emit(report);
      return kOk;
    }

    if (*mix) {
      auto strategy = parse_missing_strategy(strategy_text);
      std::vector<Prob> weights;
      if (!weights_text.empty()) {
        weights = parse_prob_list(weights_text);
      } else if (!alpha_text.empty()) {
        if (table_files.size() != 2) throw InputError("--alpha needs exactly two tables");
        Prob alpha = parse_prob(alpha_text);
        weights = {alpha, alpha.complement()};
      } else {
        throw InputError("mix needs --alpha or --weights");
      }
      if (weights.size() != table_files.size())
        throw InputError("one weight per table required");
      std::vector<CondTriple> triples;
      Report::Json components = Report::Json::array();
      for (std::size_t i = 0; i < table_files.size(); ++i) {
        auto table = parse_event_table(read_file(table_files[i]));
        std::vector<std::string> abc;
        if (!observables_text.empty()) {
          std::stringstream ss(observables_text);
          for (std::string s; std::getline(ss, s, ',');) abc.push_back(s);
        } else {
          abc.assign(table.observables().begin(),
                     table.observables().begin() + std::min<std::size_t>(3, table.observables().size()));
        }
        if (abc.size() != 3) throw InputError("mix needs three observables per table");
        triples.push_back(estimate_triple(table, abc[0], abc[1], abc[2], strategy));
        Report::Json c = Report::Json::object();
        c["table"] = table_files[i];
        c["weight"] = number_json(weights[i].value(), style);
        c["triple"] = triple_json(triples.back(), style);
        c["summary"] = verdict_summary(classify(triples.back()));
        components.push_back(std::move(c));
      }
      auto mixed = broker_mix(triples, weights);
      auto report = triple_report("mix", mixed, style);
      report.data()["components"] = std::move(components);
      emit(report);
      return kOk;
    }

    if (*smooth) {
      SmoothingCoeffs coeffs{parse_prob(alpha_text), parse_prob(beta_text), parse_prob(gamma_text)};
      auto t = smooth_triple(parse_triple_list(base_text), parse_triple_list(background_text), coeffs);
      emit(triple_report("smooth", t, style));
      return kOk;
    }

    if (*realize_cmd) {
      CondTriple t(parse_prob(p_text), parse_prob(q_text), parse_prob(r_text));
      Report report("realize");
      report.data()["triple"] = triple_json(t, style);
      report.data()["realization"] = realization_json(realize(t));
      emit(report);
      return kOk;
    }

    if (*survey) {
      std::ifstream docs(docs_file), qrels(qrels_file);
      if (!docs) throw InputError("cannot open '" + docs_file + "'");
      if (!qrels) throw InputError("cannot open '" + qrels_file + "'");
      auto rows = survey_corpus(parse_corpus(docs, qrels));
      Report report("survey");
      Report::Json arr = Report::Json::array();
      for (const auto& row : rows) arr.push_back(survey_row_json(row, style));
      report.data()["rows"] = std::move(arr);
      emit(report);
      return kOk;
    }

    if (*reproduce) {
      auto checks = golden_checks(data_dir);
      const GoldenCheck* first_failure = nullptr;
      for (const auto& c : checks)
        if (!c.passed && !first_failure) first_failure = &c;
      if (json) {
        Report report("reproduce");
        Report::Json arr = Report::Json::array();
        for (const auto& c : checks)
          arr.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected},
                         {"actual", c.actual}});
        report.data()["checks"] = std::move(arr);
        report.data()["all_passed"] = first_failure == nullptr;
        emit(report);
      } else {
        for (const auto& c : checks)
          out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.actual << "]\n";
        out << checks.size() - static_cast<std::size_t>(std::count_if(
                                   checks.begin(), checks.end(),
                                   [](const GoldenCheck& c) { return !c.passed; }))
            << "/" << checks.size() << " examples reproduced\n";
      }
      if (first_failure) {
        err << "first divergence: " << first_failure->name << ": expected "
            << first_failure->expected << ", got " << first_failure->actual << '\n';
        return kReproduceMismatch;
      }
      return kOk;
    }
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace evspace::cli
