#include <cstdio>
#include <fstream>
#include <set>

#include "cyclocode/ghw.hpp"
#include "cyclocode/report.hpp"
#include "cyclocode/verify.hpp"
#include "doctest.h"

using namespace cyclo;

TEST_CASE("default grid composition") {
  auto grid = default_grid();
  CHECK(grid.size() == 4091);

  std::set<std::tuple<int64_t, int, int, int, std::vector<int>>> seen;
  std::map<std::tuple<int64_t, int, int>, std::set<int>> hs;
  for (const auto& raw : grid) {
    CHECK(validate_spec(raw).empty());
    CHECK(raw.t.size() <= 3);
    CHECK(seen.insert({raw.p, raw.e, raw.m, raw.h, raw.t}).second);
    hs[{raw.p, raw.e, raw.m}].insert(raw.h);
  }
  CHECK(hs[{2, 1, 4}] == std::set<int>{3});
  CHECK(hs[{2, 1, 6}] == std::set<int>{3, 7});
  CHECK(hs[{3, 1, 2}] == std::set<int>{2});
  CHECK(hs[{3, 1, 4}] == std::set<int>{2, 4, 5, 8});
  CHECK(hs[{3, 1, 6}] == std::set<int>{2, 4, 7, 13, 14, 26});
  CHECK(hs.count({2, 1, 2}) == 0);

  int64_t h26 = 0;
  for (const auto& raw : grid)
    if (raw.p == 3 && raw.m == 6 && raw.h == 26) ++h26;
  CHECK(h26 == 26 + 325 + 2600);
}

TEST_CASE("grid text parsing") {
  auto grid = parse_grid_text("# header comment\n"
                              "2 1 6 3 0,2\n"
                              "\n"
                              "3 1 2 2 0   # trailing comment\n");
  REQUIRE(grid.size() == 2);
  CHECK(grid[0].p == 2);
  CHECK(grid[0].m == 6);
  CHECK(grid[0].t == std::vector<int>{0, 2});
  CHECK(grid[1].p == 3);
  CHECK(grid[1].h == 2);
  CHECK(grid[1].t == std::vector<int>{0});

  auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_grid_text(text);
      FAIL("expected grid_parse_error for: ", text);
    } catch (const Error& e) {
      CHECK(e.code() == errc::grid_parse_error);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("2 1 6 3\n", "line 1");
  expect_parse_error("ok\n2 x 6 3 0\n", "line 1");  // first line already malformed
  expect_parse_error("2 1 6 3 0\n2 1 6 x 0\n", "line 2");
  expect_parse_error("2 1 6 3 0,,2\n", "empty entry");
  expect_parse_error("2 1 6 3 0 9\n", "expected 5 fields");

  // Syntactically fine, semantically invalid: parsing must accept it.
  auto bad = parse_grid_text("2 1 4 5 0\n");
  REQUIRE(bad.size() == 1);
  CHECK(!validate_spec(bad[0]).empty());
}

TEST_CASE("grid file parsing and io errors") {
  const char* path = "verify_test_grid.tmp";
  {
    std::ofstream out(path);
    out << "# two specs\n2 1 4 3 0,1\n3 1 2 2 0,1\n";
  }
  auto grid = parse_grid_file(path);
  REQUIRE(grid.size() == 2);
  CHECK(grid[0].h == 3);
  CHECK(grid[1].t == std::vector<int>{0, 1});
  std::remove(path);

  try {
    parse_grid_file("definitely_missing_grid_file.txt");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::io_error);
  }
}

TEST_CASE("battery agrees with the single-spec engine") {
  std::vector<RawSpec> grid = {
      {2, 1, 4, 3, {0}},    {2, 1, 4, 3, {0, 1}}, {2, 1, 4, 3, {0, 1, 2}},
      {3, 1, 2, 2, {0}},    {3, 1, 2, 2, {0, 1}}, {3, 1, 4, 5, {1, 3}},
      {2, 1, 6, 3, {0, 2}},
  };
  GridSummary summary;
  auto recs = GridRunner().run(grid, &summary);
  REQUIRE(recs.size() == grid.size());
  CHECK(summary.total == int64_t(grid.size()));
  CHECK(summary.passed == int64_t(grid.size()));
  CHECK(summary.mismatched == 0);
  CHECK(summary.invalid == 0);

  for (size_t i = 0; i < grid.size(); ++i) {
    const auto& rec = recs[i];
    CAPTURE(i);
    REQUIRE(rec.valid);
    REQUIRE(rec.error.empty());
    CHECK(rec.ok);
    CHECK(rec.rank == grid[i].m);
    CHECK(rec.monotone_ok);
    CHECK(rec.duality_checked == (grid[i].m <= 4));
    CHECK(rec.duality_ok);

    auto ctx = FieldCtx::build(grid[i].p, grid[i].e, grid[i].m);
    GhwEngine engine(ctx, make_spec(grid[i]));
    auto wd = weight_distribution(engine.code());
    std::vector<std::pair<int64_t, int64_t>> expect(wd.counts.begin(), wd.counts.end());
    CHECK(rec.weights.counts == expect);

    REQUIRE(int(rec.per_r.size()) == grid[i].m);
    for (int r = 1; r <= grid[i].m; ++r) {
      const auto& rr = rec.per_r[size_t(r - 1)];
      CAPTURE(r);
      CHECK(rr.r == r);
      CHECK(rr.methods_agree);
      int64_t want = engine.compute(r, GhwMethod::direct).d_r;
      CHECK(rr.d_r == want);
      CHECK(rr.direct.d == want);
      CHECK(rr.dual.d == want);
      CHECK(rr.gauss.d == want);
      CHECK(rr.period.d == want);
      CHECK(rr.witness.r == grid[i].m - r);
      CHECK(rr.direct.witness_ok);
      CHECK(rr.dual.witness_ok);
      CHECK(rr.gauss.witness_ok);
      CHECK(rr.period.witness_ok);
      CHECK(rr.bounds_ok);
      CHECK(rr.closed_forms_ok);
    }
  }

  // Spot flags: (2,1,4,3,{0}) is two valued with an even minimal witness.
  CHECK(recs[0].semiprimitive.has_value());
  CHECK(recs[0].semiprimitive->l == 2);
  CHECK(recs[0].weights.prediction.has_value());
  CHECK(recs[0].weights.prediction_match);
  CHECK(recs[0].two_weight_match);
  CHECK(recs[0].exp_sum_closed_form_ok);
  // Simplex case: one nonzero weight, s == h.
  CHECK(recs[2].weights.distinct_nonzero == 1);
  CHECK(recs[2].two_weight_match);
}

TEST_CASE("battery isolates invalid specs") {
  std::vector<RawSpec> grid = {
      {2, 1, 4, 3, {0}},
      {2, 1, 4, 5, {0}},  // h = 5 out of range
      {3, 1, 2, 2, {0}},
      {6, 1, 2, 2, {0}},  // p not prime
  };
  GridSummary summary;
  auto recs = GridRunner().run(grid, &summary);
  REQUIRE(recs.size() == 4);
  CHECK(summary.total == 4);
  CHECK(summary.passed == 2);
  CHECK(summary.mismatched == 0);
  CHECK(summary.invalid == 2);

  CHECK(recs[0].valid);
  CHECK(recs[0].ok);
  CHECK(!recs[1].valid);
  REQUIRE(recs[1].violations.size() == 1);
  CHECK(recs[1].violations[0] == SpecViolation::h_out_of_range);
  CHECK(!recs[1].ok);
  CHECK(recs[2].valid);
  CHECK(recs[2].ok);
  CHECK(!recs[3].valid);
  CHECK(recs[3].violations == std::vector{SpecViolation::not_prime});
}

TEST_CASE("json records round trip byte identically") {
  std::vector<RawSpec> grid = {{2, 1, 6, 3, {0}}, {2, 1, 4, 5, {0}}, {3, 1, 2, 2, {0, 1}}};
  GridSummary summary;
  auto recs = GridRunner().run(grid, &summary);

  for (const auto& rec : recs) {
    std::string line = record_to_json(rec);
    CHECK(reserialize_json(line) == line);
    CHECK(line.find('\n') == std::string::npos);
  }

  // Flagship content spot checks, including the symbol names.
  std::string flag = record_to_json(recs[0]);
  CHECK(flag.find("\"n0\":21") != std::string::npos);
  CHECK(flag.find("\"eta\":[5.0,-3.0,-3.0]") != std::string::npos);
  CHECK(flag.find("\"d_r\":8") != std::string::npos);
  CHECK(flag.find("\"h0\":0") != std::string::npos);
  CHECK(flag.find("\"ok\":true") != std::string::npos);

  std::string invalid = record_to_json(recs[1]);
  CHECK(invalid.find("\"valid\":false") != std::string::npos);
  CHECK(invalid.find("HOutOfRange") != std::string::npos);
  CHECK(invalid.find("\"n0\"") == std::string::npos);

  std::string all = records_to_jsonl(recs, summary);
  CHECK(std::count(all.begin(), all.end(), '\n') == 4);  // 3 records + summary
  CHECK(all.find("\"summary\":{\"total\":3,\"passed\":2,\"mismatched\":0,\"invalid\":1}") !=
        std::string::npos);
  CHECK(summary_line(summary) == "grid: total=3 passed=2 mismatched=0 invalid=1");
}

TEST_CASE("csv layout is flat per rank with a fixed header") {
  std::vector<RawSpec> grid = {{3, 1, 2, 2, {0}}, {2, 1, 4, 5, {0}}};
  GridSummary summary;
  auto recs = GridRunner().run(grid, &summary);
  std::string csv = records_to_csv(recs);

  std::vector<std::string> lines;
  for (size_t pos = 0; pos < csv.size();) {
    size_t nl = csv.find('\n', pos);
    lines.push_back(csv.substr(pos, nl - pos));
    pos = nl + 1;
  }
  REQUIRE(lines.size() == 4);  // header + 2 ranks + 1 invalid row
  CHECK(lines[0].substr(0, 16) == "p,e,m,h,t,valid,");

  auto count_fields = [](const std::string& line) {
    int fields = 1;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++fields;
    }
    return fields;
  };
  int want = count_fields(lines[0]);
  CHECK(want == 44);
  for (size_t i = 1; i < lines.size(); ++i) {
    CAPTURE(i);
    CHECK(count_fields(lines[i]) == want);
  }

  CHECK(lines[1].substr(0, 14) == "3,1,2,2,\"0\",tr");
  CHECK(lines[3].find("HOutOfRange") != std::string::npos);
  CHECK(lines[3].find("false") != std::string::npos);
}
