#include "evspace/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "evspace/errors.hpp"

namespace evspace {
namespace {

using Json = Report::Json;

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return yes_no(v.get<bool>());
  if (v.is_null()) return "-";
  if (v.is_number_float()) {
    std::ostringstream out;
    out << std::setprecision(15) << v.get<double>();
    return out.str();
  }
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_inline(const Json& v) {
  if (is_scalar(v)) return true;
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return is_inline(e); });
}

std::string inline_text(const Json& v) {
  if (is_scalar(v)) return scalar_text(v);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + inline_text(v[i]);
  return out + "]";
}

void render(const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& value = it.value();
    out << pad << it.key() << ":";
    if (is_inline(value)) {
      out << ' ' << inline_text(value) << '\n';
    } else if (value.is_array()) {
      out << '\n';
      for (const auto& item : value) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(item, indent + 2, out);
        } else {
          out << pad << "  - " << inline_text(item) << '\n';
        }
      }
    } else {
      out << '\n';
      render(value, indent + 1, out);
    }
  }
}

}  // namespace

Report::Report(std::string command) { data_["command"] = std::move(command); }

void Report::warn(std::string message) {
  if (!data_.contains("warnings")) data_["warnings"] = Json::array();
  data_["warnings"].push_back(std::move(message));
}

std::vector<std::string> Report::warnings() const {
  std::vector<std::string> out;
  if (data_.contains("warnings"))
    for (const auto& w : data_["warnings"]) out.push_back(w.get<std::string>());
  return out;
}

std::string Report::render_text() const {
  std::ostringstream out;
  render(data_, 0, out);
  return out.str();
}

std::string Report::render_json() const { return data_.dump(2) + "\n"; }

Report Report::parse(std::string_view machine_text) {
  Report r;
  try {
    r.data_ = Json::parse(machine_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  if (!r.data_.is_object()) throw InputError("malformed report: not an object");
  return r;
}

Json number_json(const Rational& value, NumberStyle style) {
  if (style == NumberStyle::Decimal) return to_double(value);
  return to_string(value);
}

Json triple_json(const CondTriple& t, NumberStyle style) {
  Json j = Json::object();
  j["p"] = number_json(t.p.value(), style);
  j["q"] = number_json(t.q.value(), style);
  j["r"] = number_json(t.r.value(), style);
  j["marginal"] = t.marginal ? number_json(t.marginal->value(), style) : Json(nullptr);
  return j;
}

Json verdict_json(const AdmissibilityVerdict& v, NumberStyle style) {
  Json j = Json::object();
  j["CS"] = v.classical;
  j["ReQS"] = v.real_qs;
  j["CoQS"] = v.complex_qs;
  j["classical_bounds"] = {{"lower", number_json(v.classical_bounds.lower.value(), style)},
                           {"upper", number_json(v.classical_bounds.upper.value(), style)}};
  j["complex_bounds"] = {{"lower", v.complex_bounds.lower}, {"upper", v.complex_bounds.upper}};
  j["boundary"] = v.boundary;
  j["symmetry_checked"] = v.symmetry_checked;
  return j;
}

Json certificate_json(const PolytopeCertificate& c, NumberStyle style) {
  Json j = Json::object();
  j["feasible"] = c.feasible;
  if (c.feasible) {
    Json weights = Json::array();
    for (const auto& [bits, w] : c.weights)
      weights.push_back({{"b", bits}, {"w", number_json(w.value(), style)}});
    j["weights"] = std::move(weights);
  } else if (c.witness) {
    j["witness"] = format_witness(*c.witness);
  }
  return j;
}

Json decomposition_json(const RankingDecomposition& d, NumberStyle style) {
  Json j = Json::object();
  Json subsets = Json::array();
  for (const auto& piece : d.subsets)
    subsets.push_back({{"events", piece.events},
                       {"certificate", certificate_json(piece.certificate, style)}});
  j["subsets"] = std::move(subsets);
  j["dropped_order"] = d.dropped_order;
  return j;
}

Json realization_json(const QuantumRealization& q) {
  auto vec = [](const StateVector& v) {
    Json arr = Json::array();
    for (const auto& c : v.components()) arr.push_back({c.real(), c.imag()});
    return arr;
  };
  Json j = Json::object();
  j["a"] = vec(q.a);
  j["b"] = vec(q.b);
  j["c"] = vec(q.c);
  j["phase"] = q.phase;
  j["cos_phase"] = std::cos(q.phase);
  j["field"] = std::string(to_string(q.field));
  return j;
}

Json survey_row_json(const SurveyRow& row, NumberStyle style) {
  Json j = Json::object();
  j["query"] = row.query_id;
  j["terms"] = {row.term_b, row.term_c};
  j["Pr(B|C)"] = number_json(row.triple.q.value(), style);
  j["Pr(B|A)"] = number_json(row.triple.p.value(), style);
  j["Pr(C|A)"] = number_json(row.triple.r.value(), style);
  j["CS"] = row.verdict.classical;
  j["ReQS"] = row.verdict.real_qs;
  j["CoQS"] = row.verdict.complex_qs;
  return j;
}

std::string verdict_summary(const AdmissibilityVerdict& v) {
  return "CS=" + yes_no(v.classical) + " ReQS=" + yes_no(v.real_qs) +
         " CoQS=" + yes_no(v.complex_qs);
}

}  // namespace evspace
