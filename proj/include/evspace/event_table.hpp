#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace evspace {

enum class Cell : std::uint8_t { Absent, Present, Unknown };

struct TableRow {
  std::vector<Cell> values;
  std::uint64_t count = 1;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Tuples of ternary observable values with multiplicities. Rows with a zero
/// count are accepted and dropped; a table must keep at least one row.
class EventTable {
 public:
  EventTable(std::vector<std::string> observables, std::vector<TableRow> rows);

  const std::vector<std::string>& observables() const noexcept { return observables_; }
  const std::vector<TableRow>& rows() const noexcept { return rows_; }
  std::uint64_t total_count() const noexcept { return total_; }

  /// Column index of `name`; throws InputError when absent.
  std::size_t index_of(std::string_view name) const;
  bool has_observable(std::string_view name) const;

  /// Number of Unknown cells across the stored rows (not weighted by count).
  std::size_t unknown_cells() const;

  friend bool operator==(const EventTable&, const EventTable&) = default;

 private:
  std::vector<std::string> observables_;
  std::vector<TableRow> rows_;
  std::uint64_t total_ = 0;
};

/// Text format: a header of comma-separated observable names, then one row
/// per line of cells from {1, 0, ?} with an optional `xN` count suffix.
/// `#` starts a comment line; blank lines are skipped.
EventTable parse_event_table(std::istream& in);
EventTable parse_event_table(std::string_view text);

std::string serialize(const EventTable& table);

}  // namespace evspace
