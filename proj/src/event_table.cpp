#include "evspace/event_table.hpp"

#include <algorithm>
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

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Cell parse_cell(std::string_view token, std::size_t line_no) {
  if (token == "1") return Cell::Present;
  if (token == "0") return Cell::Absent;
  if (token == "?") return Cell::Unknown;
  throw InputError("line " + std::to_string(line_no) + ": unknown symbol '" +
                   std::string(token) + "'");
}

char cell_char(Cell c) {
  switch (c) {
    case Cell::Present: return '1';
    case Cell::Absent: return '0';
    case Cell::Unknown: return '?';
  }
  return '?';
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  // token is "xN"
  std::string_view digits = token.substr(1);
  if (!digits.empty() && digits.front() == '-')
    throw InputError("line " + std::to_string(line_no) + ": negative count");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw InputError("line " + std::to_string(line_no) + ": bad count '" +
                     std::string(token) + "'");
  return value;
}

}  // namespace

EventTable::EventTable(std::vector<std::string> observables, std::vector<TableRow> rows)
    : observables_(std::move(observables)) {
  if (observables_.empty()) throw InputError("table has no observables");
  for (std::size_t i = 0; i < observables_.size(); ++i) {
    if (observables_[i].empty()) throw InputError("empty observable name");
    for (std::size_t j = 0; j < i; ++j)
      if (observables_[i] == observables_[j])
        throw InputError("duplicate observable '" + observables_[i] + "'");
  }
  for (auto& row : rows) {
    if (row.values.size() != observables_.size())
      throw InputError("row arity " + std::to_string(row.values.size()) +
                       " does not match " + std::to_string(observables_.size()) +
                       " observables");
    if (row.count == 0) continue;
    total_ += row.count;
    rows_.push_back(std::move(row));
  }
  if (rows_.empty()) throw InputError("empty table");
}

std::size_t EventTable::index_of(std::string_view name) const {
  auto it = std::find(observables_.begin(), observables_.end(), name);
  if (it == observables_.end())
    throw InputError("unknown observable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - observables_.begin());
}

bool EventTable::has_observable(std::string_view name) const {
  return std::find(observables_.begin(), observables_.end(), name) != observables_.end();
}

std::size_t EventTable::unknown_cells() const {
  std::size_t n = 0;
  for (const auto& row : rows_)
    n += static_cast<std::size_t>(std::count(row.values.begin(), row.values.end(), Cell::Unknown));
  return n;
}

EventTable parse_event_table(std::istream& in) {
  std::vector<std::string> names;
  std::vector<TableRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!have_header) {
      for (auto name : split(s, ',')) names.emplace_back(name);
      have_header = true;
      continue;
    }
    TableRow row;
    auto tokens = split(s, ',');
    // The count suffix may follow the last cell after whitespace or a comma.
    std::string_view last = tokens.back();
    if (auto ws = last.find_first_of(" \t"); ws != std::string_view::npos) {
      std::string_view suffix = trim(last.substr(ws));
      tokens.back() = trim(last.substr(0, ws));
      if (suffix.empty() || suffix.front() != 'x')
        throw InputError("line " + std::to_string(line_no) + ": unknown symbol '" +
                         std::string(suffix) + "'");
      row.count = parse_count(suffix, line_no);
    } else if (!last.empty() && last.front() == 'x') {
      row.count = parse_count(last, line_no);
      tokens.pop_back();
    }
    for (auto token : tokens) row.values.push_back(parse_cell(token, line_no));
    if (row.values.size() != names.size())
      throw InputError("line " + std::to_string(line_no) + ": row has " +
                       std::to_string(row.values.size()) + " cells, expected " +
                       std::to_string(names.size()));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw InputError("empty table");
  return EventTable(std::move(names), std::move(rows));
}

EventTable parse_event_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_event_table(in);
}

std::string serialize(const EventTable& table) {
  std::ostringstream out;
  const auto& names = table.observables();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.values.size(); ++i)
      out << (i ? "," : "") << cell_char(row.values[i]);
    if (row.count != 1) out << " x" << row.count;
    out << '\n';
  }
  return out.str();
}

}  // namespace evspace
