#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualsys {

/// Raised when a capture-table file cannot be ingested. `row()` is the
/// 1-based line number of the offending row, 0 for whole-file problems.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t row, const std::string& what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Two-row cross-classification of recorded events: row 0 holds events not
/// mentioned in other sources, row 1 those that are; column j counts events
/// with j surviving archive letters, j = 0..m. The (0, 0) cell is the
/// unknown count and has no stored value.
class CaptureTable {
 public:
  /// `no_mention[0]` must be empty, every other cell present and >= 0.
  CaptureTable(int m, std::vector<std::optional<std::int64_t>> no_mention,
               std::vector<std::int64_t> mention);

  /// All known cells zero.
  static CaptureTable empty(int m = 5);

  int m() const { return m_; }
  std::optional<std::int64_t> no_mention(int j) const { return no_mention_.at(j); }
  std::int64_t mention(int j) const { return mention_.at(j); }

  std::int64_t observed_total() const;

  /// Cell-wise sum; tables must share m.
  CaptureTable operator+(const CaptureTable& other) const;

 private:
  int m_;
  std::vector<std::optional<std::int64_t>> no_mention_;
  std::vector<std::int64_t> mention_;
};

/// 2x2 reduction: archive presence collapsed to "any letters".
struct ReducedTable {
  std::int64_t n01 = 0;  ///< not mentioned elsewhere, >= 1 letter
  std::int64_t n10 = 0;  ///< mentioned elsewhere, no letters
  std::int64_t n11 = 0;  ///< mentioned elsewhere, >= 1 letter

  std::int64_t observed_total() const { return n01 + n10 + n11; }
  friend bool operator==(const ReducedTable&, const ReducedTable&) = default;
};

/// Observed-data statistics consumed by the letter-count models.
struct SummaryStats {
  int m = 5;
  std::int64_t n0_plus_known = 0;  ///< row 0 total without the unknown cell
  std::int64_t n1_plus = 0;
  std::int64_t s1 = 0;             ///< sum_j j * n_{+j}
  double s2_known = 0.0;           ///< sum_j n_{+j} ln(j!(m-j)!) over known cells
  std::int64_t observed_total = 0;
  /// Known part of each column total n_{+j}; entry 0 excludes the unknown cell.
  std::vector<std::int64_t> column_known;

  /// s2 once `n` unknown events are added to column 0: each contributes ln(0! m!).
  double s2(std::int64_t n) const;
};

/// Reads the `mentioned_other,letters,count` CSV. When `m` is not given it is
/// the larger of 5 and the highest letter count present.
CaptureTable load_capture_table(const std::filesystem::path& path,
                                std::optional<int> m = std::nullopt);

/// Same, from in-memory text.
CaptureTable parse_capture_table(const std::string& text, std::optional<int> m = std::nullopt);

ReducedTable reduce(const CaptureTable& table);

SummaryStats summarize(const CaptureTable& table);

}  // namespace dualsys
