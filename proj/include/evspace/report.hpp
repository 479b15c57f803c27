#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "evspace/corpus.hpp"
#include "evspace/pitowsky.hpp"
#include "evspace/quantum.hpp"
#include "evspace/triple.hpp"

namespace evspace {

/// Exact rationals (`"13/18"`) or decimals.
enum class NumberStyle { Exact, Decimal };

/// Structured command output. Keys keep insertion order so the machine form
/// is stable; `parse` reads that form back.
class Report {
 public:
  using Json = nlohmann::ordered_json;

  Report() = default;
  explicit Report(std::string command);

  Json& data() noexcept { return data_; }
  const Json& data() const noexcept { return data_; }

  void warn(std::string message);
  std::vector<std::string> warnings() const;

  std::string render_text() const;
  std::string render_json() const;
  static Report parse(std::string_view machine_text);

  friend bool operator==(const Report& a, const Report& b) { return a.data_ == b.data_; }

 private:
  Json data_ = Json::object();
};

Report::Json number_json(const Rational& value, NumberStyle style);
Report::Json triple_json(const CondTriple& t, NumberStyle style);
Report::Json verdict_json(const AdmissibilityVerdict& v, NumberStyle style);
Report::Json certificate_json(const PolytopeCertificate& c, NumberStyle style);
Report::Json decomposition_json(const RankingDecomposition& d, NumberStyle style);
Report::Json realization_json(const QuantumRealization& q);
Report::Json survey_row_json(const SurveyRow& row, NumberStyle style);

/// "CS=No ReQS=Yes CoQS=Yes".
std::string verdict_summary(const AdmissibilityVerdict& v);

}  // namespace evspace
