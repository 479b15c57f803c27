#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "evspace/admissibility.hpp"
#include "evspace/cli.hpp"
#include "evspace/corpus.hpp"
#include "evspace/errors.hpp"
#include "evspace/estimation.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/quantum.hpp"
#include "evspace/report.hpp"

namespace py = pybind11;
using namespace evspace;

namespace {

// Accepts str, int or fractions.Fraction; all render as parseable literals.
Prob to_prob(const py::handle& obj) { return parse_prob(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

CondTriple to_triple(const py::handle& p, const py::handle& q, const py::handle& r,
                     const py::object& marginal = py::none()) {
  std::optional<Prob> m;
  if (!marginal.is_none()) m = to_prob(marginal);
  return CondTriple(to_prob(p), to_prob(q), to_prob(r), m);
}

CondTriple to_triple(const py::sequence& seq) {
  if (py::len(seq) != 3) throw InputError("expected a (p, q, r) triple");
  return to_triple(seq[0], seq[1], seq[2]);
}

py::tuple from_triple(const CondTriple& t) {
  return py::make_tuple(to_fraction(t.p.value()), to_fraction(t.q.value()), to_fraction(t.r.value()));
}

py::dict verdict_dict(const AdmissibilityVerdict& v) {
  py::dict d;
  d["classical"] = v.classical;
  d["real_qs"] = v.real_qs;
  d["complex_qs"] = v.complex_qs;
  d["classical_bounds"] = py::make_tuple(to_fraction(v.classical_bounds.lower.value()),
                                         to_fraction(v.classical_bounds.upper.value()));
  d["complex_bounds"] = py::make_tuple(v.complex_bounds.lower, v.complex_bounds.upper);
  d["symmetry_checked"] = v.symmetry_checked;
  d["boundary"] = v.boundary;
  return d;
}

py::dict certificate_dict(const PolytopeCertificate& c) {
  py::dict d;
  d["feasible"] = c.feasible;
  py::dict weights;
  for (const auto& [bits, w] : c.weights) weights[py::str(bits)] = to_fraction(w.value());
  d["weights"] = weights;
  d["witness"] = c.witness ? py::object(py::str(format_witness(*c.witness))) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact admissibility tests for observed conditional probabilities.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ZeroMeasureError>(m, "ZeroMeasureError", PyExc_ZeroDivisionError);
  py::register_exception<IncoherentInputs>(m, "IncoherentInputs", PyExc_ValueError);
  py::register_exception<NotRepresentable>(m, "NotRepresentable", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("check_classical", [](py::object p, py::object q, py::object r) {
    return check_classical(to_triple(p, q, r));
  });
  m.def("check_complex_qs", [](py::object p, py::object q, py::object r) {
    return check_complex_qs(to_triple(p, q, r));
  });
  m.def("check_real_qs", [](py::object p, py::object q, py::object r) {
    return check_real_qs(to_triple(p, q, r));
  });
  m.def("classify",
        [](py::object p, py::object q, py::object r, py::object marginal) {
          return verdict_dict(classify(to_triple(p, q, r, marginal)));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("marginal") = py::none());

  m.def("statistical_invariant", [](py::object pb, py::object given_a, py::object given_not_a) {
    auto rep = statistical_invariant(to_prob(pb), to_prob(given_a), to_prob(given_not_a));
    py::dict d;
    d["ratio"] = rep.ratio ? to_fraction(*rep.ratio) : py::object(py::float_(INFINITY));
    d["holds"] = rep.holds;
    d["between"] = rep.between;
    d["degenerate"] = rep.degenerate;
    return d;
  });
  m.def("ltp_compose", [](py::object pa, py::object given_a, py::object given_not_a) {
    return to_fraction(ltp_compose(to_prob(pa), to_prob(given_a), to_prob(given_not_a)).value());
  });
  m.def("bayes_invert", [](py::object given_a, py::object pa, py::object pb) {
    return to_fraction(bayes_invert(to_prob(given_a), to_prob(pa), to_prob(pb)).value());
  });

  m.def("membership",
        [](const std::string& vector_text, int max_n) {
          return certificate_dict(membership(parse_correlation_vector(vector_text), {max_n}));
        },
        py::arg("vector_text"), py::arg("max_n") = 12);
  m.def("decompose",
        [](const std::string& vector_text, py::object relevance) {
          auto v = parse_correlation_vector(vector_text);
          int rel = relevance.is_none() ? v.n() : relevance.cast<int>();
          py::list out;
          for (const auto& piece : decompose(v, rel).subsets)
            out.append(py::make_tuple(piece.events, certificate_dict(piece.certificate)));
          return out;
        },
        py::arg("vector_text"), py::arg("relevance") = py::none());

  m.def("estimate_triple",
        [](const std::string& table_text, const std::string& a, const std::string& b,
           const std::string& c, const std::string& strategy) {
          auto t = estimate_triple(parse_event_table(table_text), a, b, c,
                                   parse_missing_strategy(strategy));
          return py::make_tuple(from_triple(t),
                                t.marginal ? to_fraction(t.marginal->value()) : py::none());
        },
        py::arg("table_text"), py::arg("a") = "A", py::arg("b") = "B", py::arg("c") = "C",
        py::arg("strategy") = "exclude-unknown");
  m.def("smooth_triple", [](py::sequence base, py::sequence background, py::sequence coeffs) {
    if (py::len(coeffs) != 3) throw InputError("expected (alpha, beta, gamma)");
    SmoothingCoeffs k{to_prob(coeffs[0]), to_prob(coeffs[1]), to_prob(coeffs[2])};
    return from_triple(smooth_triple(to_triple(base), to_triple(background), k));
  });
  m.def("broker_mix", [](py::list triples, py::list weights) {
    std::vector<CondTriple> ts;
    std::vector<Prob> ws;
    for (auto t : triples) ts.push_back(to_triple(t.cast<py::sequence>()));
    for (auto w : weights) ws.push_back(to_prob(w));
    return from_triple(broker_mix(ts, ws));
  });

  m.def("realize", [](py::object p, py::object q, py::object r) {
    auto real = realize(to_triple(p, q, r));
    py::dict d;
    d["a"] = real.a.components();
    d["b"] = real.b.components();
    d["c"] = real.c.components();
    d["phase"] = real.phase;
    d["field"] = std::string(to_string(real.field));
    return d;
  });

  m.def("survey", [](const std::string& docs_text, const std::string& qrels_text) {
    std::istringstream docs(docs_text), qrels(qrels_text);
    py::list out;
    for (const auto& row : survey_corpus(parse_corpus(docs, qrels))) {
      py::dict d;
      d["query"] = row.query_id;
      d["terms"] = py::make_tuple(row.term_b, row.term_c);
      d["triple"] = from_triple(row.triple);
      d["verdict"] = verdict_dict(row.verdict);
      out.append(d);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
