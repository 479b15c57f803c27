#pragma once

#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "evspace/triple.hpp"

namespace evspace {

struct Document {
  std::string id;
  std::set<std::string> terms;
};

struct QueryJudgments {
  std::string id;
  std::set<std::string> relevant;
};

/// Documents with their index terms plus per-query relevance sets. Every
/// relevant id must name a document.
class Corpus {
 public:
  Corpus(std::vector<Document> documents, std::vector<QueryJudgments> queries);

  const std::vector<Document>& documents() const noexcept { return documents_; }
  const std::vector<QueryJudgments>& queries() const noexcept { return queries_; }
  std::size_t size() const noexcept { return documents_.size(); }

 private:
  std::vector<Document> documents_;
  std::vector<QueryJudgments> queries_;
};

/// Documents file: one document per line, `<id> <term> <term> ...`.
/// Qrels file: `<query id> <doc id>` per line, queries kept in first-seen
/// order. Both whitespace separated; `#` lines are comments.
Corpus parse_corpus(std::istream& documents, std::istream& qrels);

struct SurveyRow {
  std::string query_id;
  std::string term_b;  // lexicographically smaller term
  std::string term_c;
  /// q = Pr(B|C), p = Pr(B|A), r = Pr(C|A) with A = relevance; marginal is
  /// Pr(A), which every selected term shares.
  CondTriple triple;
  AdmissibilityVerdict verdict;
};

/// For each query: keep the terms whose document frequency equals the
/// number of relevant documents (so Pr(term) = Pr(relevance) exactly), then
/// classify every unordered pair of kept terms.
std::vector<SurveyRow> survey_corpus(const Corpus& corpus);

}  // namespace evspace
