#include "evspace/corpus.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "evspace/admissibility.hpp"
#include "evspace/errors.hpp"

namespace evspace {

Corpus::Corpus(std::vector<Document> documents, std::vector<QueryJudgments> queries)
    : documents_(std::move(documents)), queries_(std::move(queries)) {
  if (documents_.empty()) throw InputError("corpus has no documents");
  std::unordered_set<std::string> ids;
  for (const auto& d : documents_)
    if (!ids.insert(d.id).second) throw InputError("duplicate document id '" + d.id + "'");
  for (const auto& q : queries_)
    for (const auto& r : q.relevant)
      if (!ids.count(r))
        throw InputError("query " + q.id + " judges unknown document '" + r + "'");
}

Corpus parse_corpus(std::istream& documents, std::istream& qrels) {
  std::vector<Document> docs;
  std::string line;
  while (std::getline(documents, line)) {
    std::istringstream fields(line);
    Document d;
    if (!(fields >> d.id) || d.id.front() == '#') continue;
    for (std::string term; fields >> term;) d.terms.insert(term);
    docs.push_back(std::move(d));
  }
  std::vector<QueryJudgments> queries;
  std::map<std::string, std::size_t> slot;
  std::size_t line_no = 0;
  while (std::getline(qrels, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string qid, did, extra;
    if (!(fields >> qid) || qid.front() == '#') continue;
    if (!(fields >> did) || (fields >> extra))
      throw InputError("qrels line " + std::to_string(line_no) + ": expected '<query> <doc>'");
    auto [it, fresh] = slot.emplace(qid, queries.size());
    if (fresh) queries.push_back({qid, {}});
    queries[it->second].relevant.insert(did);
  }
  return Corpus(std::move(docs), std::move(queries));
}

std::vector<SurveyRow> survey_corpus(const Corpus& corpus) {
  // Inverted index: term -> documents containing it.
  std::map<std::string, std::set<std::string>> postings;
  for (const auto& d : corpus.documents())
    for (const auto& t : d.terms) postings[t].insert(d.id);

  auto overlap = [](const std::set<std::string>& x, const std::set<std::string>& y) {
    std::int64_t n = 0;
    for (const auto& id : x) n += y.count(id);
    return n;
  };

  const auto N = static_cast<std::int64_t>(corpus.size());
  std::vector<SurveyRow> out;
  for (const auto& query : corpus.queries()) {
    const auto R = static_cast<std::int64_t>(query.relevant.size());
    if (R == 0) continue;
    Prob relevance = prob(R, N);
    std::vector<const std::string*> selected;
    for (const auto& [term, docs] : postings)
      if (prob(static_cast<std::int64_t>(docs.size()), N) == relevance) selected.push_back(&term);
    for (std::size_t i = 0; i < selected.size(); ++i)
      for (std::size_t j = i + 1; j < selected.size(); ++j) {
        const auto& B = postings.at(*selected[i]);
        const auto& C = postings.at(*selected[j]);
        Prob q = prob(overlap(B, C), static_cast<std::int64_t>(C.size()));
        Prob p = prob(overlap(B, query.relevant), R);
        Prob r = prob(overlap(C, query.relevant), R);
        CondTriple t(p, q, r, relevance);
        out.push_back({query.id, *selected[i], *selected[j], t, classify(t)});
      }
  }
  return out;
}

}  // namespace evspace
