#include "evspace/correlation_vector.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "evspace/errors.hpp"

namespace evspace {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view s, std::size_t line_no) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("line " + std::to_string(line_no) + ": bad index '" +
                     std::string(s) + "'");
  return value;
}

}  // namespace

CorrelationVector::CorrelationVector(std::vector<Prob> unary,
                                     std::map<EventPair, Prob> pairwise)
    : unary_(std::move(unary)), pairwise_(std::move(pairwise)) {
  if (unary_.empty()) throw InputError("empty correlation vector");
  for (const auto& [key, value] : pairwise_) {
    auto [i, j] = key;
    if (i < 1 || j > n() || i >= j)
      throw InputError("pair index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for n=" + std::to_string(n()));
  }
}

const Prob& CorrelationVector::unary(int i) const {
  if (i < 1 || i > n()) throw InputError("event index " + std::to_string(i) + " out of range");
  return unary_[static_cast<std::size_t>(i - 1)];
}

std::optional<Prob> CorrelationVector::pairwise(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = pairwise_.find({i, j});
  if (it == pairwise_.end()) return std::nullopt;
  return it->second;
}

bool CorrelationVector::is_complete() const {
  return pairwise_.size() == static_cast<std::size_t>(n() * (n() - 1) / 2);
}

CorrelationVector CorrelationVector::restrict_to(std::span<const int> events) const {
  std::vector<Prob> unary;
  std::map<EventPair, Prob> pairs;
  for (std::size_t a = 0; a < events.size(); ++a) {
    unary.push_back(this->unary(events[a]));
    if (a > 0 && events[a] <= events[a - 1])
      throw InputError("restrict_to expects strictly increasing events");
    for (std::size_t b = a + 1; b < events.size(); ++b)
      if (auto p = pairwise(events[a], events[b]))
        pairs.emplace(EventPair{static_cast<int>(a + 1), static_cast<int>(b + 1)}, *p);
  }
  return CorrelationVector(std::move(unary), std::move(pairs));
}

CorrelationVector parse_correlation_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::map<int, Prob> unary;
  std::map<EventPair, Prob> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw InputError("line " + std::to_string(line_no) + ": expected key=value");
    std::string_view key = trim(s.substr(0, eq));
    std::string_view value = trim(s.substr(eq + 1));
    if (key == "n") {
      n = parse_index(value, line_no);
      continue;
    }
    if (key.empty() || key.front() != 'p')
      throw InputError("line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    key.remove_prefix(1);
    Prob p = parse_prob(value);
    if (auto comma = key.find(','); comma != std::string_view::npos) {
      int i = parse_index(key.substr(0, comma), line_no);
      int j = parse_index(key.substr(comma + 1), line_no);
      if (i > j) std::swap(i, j);
      if (i == j) throw InputError("line " + std::to_string(line_no) + ": pair needs i < j");
      if (!pairs.emplace(EventPair{i, j}, p).second)
        throw InputError("line " + std::to_string(line_no) + ": duplicate entry");
    } else {
      int i = parse_index(key, line_no);
      if (!unary.emplace(i, p).second)
        throw InputError("line " + std::to_string(line_no) + ": duplicate entry");
    }
  }
  if (n < 0) throw InputError("missing n=");
  if (n < 2) throw InputError("correlation vector needs n >= 2");
  std::vector<Prob> u;
  for (int i = 1; i <= n; ++i) {
    auto it = unary.find(i);
    if (it == unary.end()) throw InputError("missing p" + std::to_string(i));
    u.push_back(it->second);
  }
  if (unary.size() != static_cast<std::size_t>(n))
    throw InputError("unary index out of range for n=" + std::to_string(n));
  return CorrelationVector(std::move(u), std::move(pairs));
}

std::string serialize(const CorrelationVector& v) {
  std::ostringstream out;
  out << "n=" << v.n() << '\n';
  for (int i = 1; i <= v.n(); ++i) out << 'p' << i << '=' << v.unary(i).str() << '\n';
  for (const auto& [key, p] : v.pairwise_entries())
    out << 'p' << key.first << ',' << key.second << '=' << p.str() << '\n';
  return out.str();
}

}  // namespace evspace
