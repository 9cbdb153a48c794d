#include "dualsys/capture_data.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <utility>

#include "dualsys/lognum.hpp"

namespace dualsys {

namespace {

constexpr std::string_view kHeader = "mentioned_other,letters,count";
constexpr int kDefaultLetters = 5;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view field, std::size_t row, const char* name) {
  field = trim(field);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IngestError(row, std::string("field '") + name + "' is not an integer: '" +
                               std::string(field) + "'");
  }
  return value;
}

struct Cell {
  std::size_t row;
  std::int64_t count;
};

}  // namespace

IngestError::IngestError(std::size_t row, const std::string& what)
    : std::runtime_error(row == 0 ? what : "row " + std::to_string(row) + ": " + what),
      row_(row) {}

CaptureTable::CaptureTable(int m, std::vector<std::optional<std::int64_t>> no_mention,
                           std::vector<std::int64_t> mention)
    : m_(m), no_mention_(std::move(no_mention)), mention_(std::move(mention)) {
  if (m_ < 1) {
    throw std::invalid_argument("capture table needs m >= 1");
  }
  const auto width = static_cast<std::size_t>(m_) + 1;
  if (no_mention_.size() != width || mention_.size() != width) {
    throw std::invalid_argument("capture table rows must have m + 1 cells");
  }
  if (no_mention_[0].has_value()) {
    throw std::invalid_argument("the (no mention, 0 letters) cell is the unknown and must be absent");
  }
  for (std::size_t j = 1; j < width; ++j) {
    if (!no_mention_[j].has_value() || *no_mention_[j] < 0) {
      throw std::invalid_argument("known cells must be present and non-negative");
    }
  }
  if (std::any_of(mention_.begin(), mention_.end(), [](std::int64_t c) { return c < 0; })) {
    throw std::invalid_argument("known cells must be present and non-negative");
  }
}

CaptureTable CaptureTable::empty(int m) {
  std::vector<std::optional<std::int64_t>> no_mention(static_cast<std::size_t>(m) + 1, 0);
  no_mention[0].reset();
  return CaptureTable(m, std::move(no_mention), std::vector<std::int64_t>(m + 1, 0));
}

std::int64_t CaptureTable::observed_total() const {
  std::int64_t total = 0;
  for (int j = 0; j <= m_; ++j) {
    total += no_mention_[j].value_or(0) + mention_[j];
  }
  return total;
}

CaptureTable CaptureTable::operator+(const CaptureTable& other) const {
  if (other.m_ != m_) {
    throw std::invalid_argument("cannot add capture tables with different m");
  }
  auto no_mention = no_mention_;
  auto mention = mention_;
  for (int j = 0; j <= m_; ++j) {
    if (j > 0) {
      *no_mention[j] += *other.no_mention_[j];
    }
    mention[j] += other.mention_[j];
  }
  return CaptureTable(m_, std::move(no_mention), std::move(mention));
}

double SummaryStats::s2(std::int64_t n) const {
  return s2_known + static_cast<double>(n) * log_factorial(m);
}

CaptureTable parse_capture_table(const std::string& text, std::optional<int> m) {
  if (m && *m < 1) {
    throw std::invalid_argument("letters maximum must be >= 1");
  }
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  bool saw_header = false;
  std::map<std::pair<int, int>, Cell> cells;
  int max_letters = 0;

  while (std::getline(in, line)) {
    ++row;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') {
      view.remove_suffix(1);
    }
    if (row == 1 && view.starts_with("\xEF\xBB\xBF")) {
      view.remove_prefix(3);
    }
    if (!saw_header) {
      if (trim(view) != kHeader) {
        throw IngestError(row, "expected header '" + std::string(kHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    if (trim(view).empty()) {
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = view.find(',', start);
      fields.push_back(view.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) {
      throw IngestError(row, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    const auto mentioned = parse_int(fields[0], row, "mentioned_other");
    const auto letters = parse_int(fields[1], row, "letters");
    const auto count = parse_int(fields[2], row, "count");

    if (mentioned != 0 && mentioned != 1) {
      throw IngestError(row, "mentioned_other must be 0 or 1");
    }
    if (letters < 0 || (m && letters > *m)) {
      throw IngestError(row, "letters out of range: " + std::to_string(letters));
    }
    if (count < 0) {
      throw IngestError(row, "negative count");
    }
    if (mentioned == 0 && letters == 0) {
      throw IngestError(row, "cell (mentioned_other=0, letters=0) is the unknown and must not be given");
    }
    const std::pair key{static_cast<int>(mentioned), static_cast<int>(letters)};
    if (const auto it = cells.find(key); it != cells.end()) {
      throw IngestError(row, "duplicate cell, first given on row " + std::to_string(it->second.row));
    }
    cells.emplace(key, Cell{row, count});
    max_letters = std::max(max_letters, static_cast<int>(letters));
  }
  if (!saw_header) {
    throw IngestError(0, "empty capture table file");
  }

  const int width_m = m.value_or(std::max(kDefaultLetters, max_letters));
  std::vector<std::optional<std::int64_t>> no_mention(width_m + 1, 0);
  no_mention[0].reset();
  std::vector<std::int64_t> mention(width_m + 1, 0);
  for (const auto& [key, cell] : cells) {
    if (key.first == 0) {
      no_mention[key.second] = cell.count;
    } else {
      mention[key.second] = cell.count;
    }
  }
  return CaptureTable(width_m, std::move(no_mention), std::move(mention));
}

CaptureTable load_capture_table(const std::filesystem::path& path, std::optional<int> m) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError(0, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_capture_table(buffer.str(), m);
}

ReducedTable reduce(const CaptureTable& table) {
  ReducedTable reduced;
  reduced.n10 = table.mention(0);
  for (int j = 1; j <= table.m(); ++j) {
    reduced.n01 += *table.no_mention(j);
    reduced.n11 += table.mention(j);
  }
  return reduced;
}

SummaryStats summarize(const CaptureTable& table) {
  SummaryStats stats;
  stats.m = table.m();
  stats.column_known.assign(table.m() + 1, 0);
  for (int j = 0; j <= table.m(); ++j) {
    const std::int64_t upper = table.no_mention(j).value_or(0);
    const std::int64_t lower = table.mention(j);
    const std::int64_t column = upper + lower;
    stats.column_known[j] = column;
    stats.n0_plus_known += upper;
    stats.n1_plus += lower;
    stats.s1 += j * column;
    stats.s2_known +=
        static_cast<double>(column) * (log_factorial(j) + log_factorial(table.m() - j));
  }
  stats.observed_total = stats.n0_plus_known + stats.n1_plus;
  return stats;
}

}  // namespace dualsys
