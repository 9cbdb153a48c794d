#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "dualsys/capture_data.hpp"

using namespace dualsys;

namespace {

const std::filesystem::path kBundledTable = DUALSYS_DATA_DIR "/table1.csv";

std::size_t ingest_error_row(const std::string& text) {
  try {
    parse_capture_table(text);
  } catch (const IngestError& e) {
    return e.row();
  }
  FAIL("expected IngestError");
  return 0;
}

}  // namespace

TEST_SUITE("capture_data") {
  TEST_CASE("bundled table loads with the expected cells") {
    const auto table = load_capture_table(kBundledTable);
    REQUIRE(table.m() == 5);
    CHECK_FALSE(table.no_mention(0).has_value());
    const std::int64_t upper[] = {0, 162, 20, 5, 3, 0};
    const std::int64_t lower[] = {143, 3, 0, 1, 0, 0};
    for (int j = 1; j <= 5; ++j) CHECK(*table.no_mention(j) == upper[j]);
    for (int j = 0; j <= 5; ++j) CHECK(table.mention(j) == lower[j]);
    CHECK(table.observed_total() == 337);
  }

  TEST_CASE("reduce") {
    const auto reduced = reduce(load_capture_table(kBundledTable));
    CHECK(reduced == ReducedTable{190, 143, 4});
    CHECK(reduced.observed_total() == 337);
    CHECK(reduce(CaptureTable::empty()) == ReducedTable{0, 0, 0});

    const auto mention_only = parse_capture_table("mentioned_other,letters,count\n1,0,4\n1,2,3\n");
    CHECK(reduce(mention_only).n01 == 0);
    CHECK(reduce(mention_only).n11 == 3);
  }

  TEST_CASE("summarize bundled table") {
    const auto stats = summarize(load_capture_table(kBundledTable));
    CHECK(stats.s1 == 235);
    CHECK(stats.n1_plus == 147);
    CHECK(stats.n0_plus_known == 190);
    CHECK(stats.observed_total == 337);
    CHECK(stats.column_known == std::vector<std::int64_t>{143, 165, 20, 6, 3, 0});
    // ln(j!(5-j)!) = ln 120, ln 24, ln 12, ln 12, ln 24, ln 120
    const double expected = 143 * std::log(120.0) + 165 * std::log(24.0) + 20 * std::log(12.0) +
                            6 * std::log(12.0) + 3 * std::log(24.0);
    CHECK(stats.s2_known == doctest::Approx(expected).epsilon(1e-13));
    CHECK(stats.s2(10) == doctest::Approx(expected + 10 * std::log(120.0)).epsilon(1e-13));
  }

  TEST_CASE("summarize empty table") {
    const auto stats = summarize(CaptureTable::empty());
    CHECK(stats.s1 == 0);
    CHECK(stats.s2_known == 0.0);
    CHECK(stats.n1_plus == 0);
    CHECK(stats.n0_plus_known == 0);
    CHECK(stats.observed_total == 0);
  }

  TEST_CASE("summarize is additive over cell-wise sums") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> cell(0, 300);
    auto random_table = [&] {
      std::vector<std::optional<std::int64_t>> upper(6);
      std::vector<std::int64_t> lower(6);
      for (int j = 0; j <= 5; ++j) {
        if (j > 0) upper[j] = cell(rng);
        lower[j] = cell(rng);
      }
      return CaptureTable(5, upper, lower);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_table();
      const auto b = random_table();
      const auto sa = summarize(a), sb = summarize(b), sab = summarize(a + b);
      CHECK(sab.s1 == sa.s1 + sb.s1);
      CHECK(sab.n1_plus == sa.n1_plus + sb.n1_plus);
      CHECK(sab.observed_total == sa.observed_total + sb.observed_total);
      CHECK(sab.s2_known == doctest::Approx(sa.s2_known + sb.s2_known).epsilon(1e-13));
    }
  }

  TEST_CASE("CRLF, BOM and blank lines are accepted") {
    const auto table =
        parse_capture_table("\xEF\xBB\xBFmentioned_other,letters,count\r\n0,1,2\r\n\r\n1,0,3\r\n");
    CHECK(*table.no_mention(1) == 2);
    CHECK(table.mention(0) == 3);
    CHECK(table.m() == 5);
  }

  TEST_CASE("m follows the data or an explicit bound") {
    CHECK(parse_capture_table("mentioned_other,letters,count\n0,7,1\n").m() == 7);
    CHECK(parse_capture_table("mentioned_other,letters,count\n0,2,1\n", 3).m() == 3);
    CHECK_THROWS_AS(parse_capture_table("mentioned_other,letters,count\n0,4,1\n", 3), IngestError);
  }

  TEST_CASE("ingestion errors name the row") {
    CHECK(ingest_error_row("") == 0);
    CHECK(ingest_error_row("letters,count\n") == 1);
    CHECK(ingest_error_row("mentioned_other,letters,count\n0,1,5\n0,0,3\n") == 3);
    CHECK(ingest_error_row("mentioned_other,letters,count\n0,1,5\n1,1,1\n0,1,2\n") == 4);
    CHECK(ingest_error_row("mentioned_other,letters,count\n1,1,-4\n") == 2);
    CHECK(ingest_error_row("mentioned_other,letters,count\n2,1,4\n") == 2);
    CHECK(ingest_error_row("mentioned_other,letters,count\n1,x,4\n") == 2);
    CHECK(ingest_error_row("mentioned_other,letters,count\n1,1\n") == 2);
    CHECK(ingest_error_row("mentioned_other,letters,count\n1,-1,3\n") == 2);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_capture_table("/nonexistent/table.csv"), IngestError);
  }

  TEST_CASE("the unknown cell cannot be supplied through the constructor") {
    std::vector<std::optional<std::int64_t>> upper{0, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(CaptureTable(5, upper, std::vector<std::int64_t>(6, 0)), std::invalid_argument);
  }
}
