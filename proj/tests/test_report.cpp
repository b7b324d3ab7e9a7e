#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "finsum/report.hpp"

using finsum::Int;
using finsum::OutputFormat;
using finsum::Rational;
using nlohmann::json;

TEST(Report, FormatNames) {
  EXPECT_EQ(finsum::parse_output_format("json"), OutputFormat::Json);
  EXPECT_EQ(finsum::parse_output_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(finsum::parse_output_format("human"), OutputFormat::Human);
  EXPECT_FALSE(finsum::parse_output_format("xml").has_value());
}

TEST(Report, CheckJsonRoundTrip) {
  const auto report = finsum::check_identity("Y1-B", 5, 2);
  const json j = finsum::to_json(report);
  EXPECT_EQ(j.at("lhs"), "-4");
  EXPECT_EQ(j.at("rhs"), "-8");
  EXPECT_EQ(j.at("h"), 5);
  EXPECT_FALSE(j.at("pass").get<bool>());
  EXPECT_EQ(finsum::check_report_from_json(json::parse(j.dump())), report);
}

TEST(Report, LargeIntegersSurviveAsStrings) {
  finsum::CheckReport r{"DED-REC", Int("123456789012345678901234567890"), Int(7), Rational(1, 3), Rational(1, 3), true};
  const json j = finsum::to_json(r);
  EXPECT_TRUE(j.at("h").is_string());
  EXPECT_EQ(finsum::check_report_from_json(j), r);
}

TEST(Report, ScanJsonRoundTrip) {
  const std::vector<std::string> ids{"Y1-B", "Y-S5"};
  const auto reports = finsum::scan(ids, 12, 12);
  for (const auto& r : reports) {
    const auto back = finsum::scan_report_from_json(json::parse(finsum::to_json(r).dump()));
    EXPECT_EQ(back, r) << r.id;
  }
  const json arr = json::parse(finsum::render_scans(reports, OutputFormat::Json));
  ASSERT_TRUE(arr.is_array());
  EXPECT_EQ(arr[0].at("mode"), "conjecture");
  EXPECT_EQ(arr[0].at("range").at("k_max"), 12);
  EXPECT_GE(arr[0].at("failures").size(), 1U);
  EXPECT_EQ(arr[1].at("observations").at("Y_integral"), "holds");
}

TEST(Report, NoTimingIsDeterministic) {
  const std::vector<std::string> ids{"S-REC"};
  auto a = finsum::scan(ids, 15, 15);
  auto b = finsum::scan(ids, 15, 15, 4);
  a[0].elapsed_ms = 1.5;
  b[0].elapsed_ms = 99.0;
  EXPECT_EQ(finsum::render_scans(a, OutputFormat::Json, false), finsum::render_scans(b, OutputFormat::Json, false));
  EXPECT_EQ(finsum::render_scans(a, OutputFormat::Human, false), finsum::render_scans(b, OutputFormat::Human, false));
  EXPECT_NE(finsum::render_scans(a, OutputFormat::Json, true), finsum::render_scans(b, OutputFormat::Json, true));
}

TEST(Report, Csv) {
  const std::vector<finsum::CheckReport> checks{finsum::check_identity("B1-REC", 3, 5),
                                                finsum::check_identity("Y1-B", 5, 2)};
  EXPECT_EQ(finsum::render_checks(checks, OutputFormat::Csv),
            "identity,h,k,lhs,rhs,pass\n"
            "B1-REC,3,5,4,4,true\n"
            "Y1-B,5,2,-4,-8,false\n");
  const std::vector<std::string> ids{"S-REC"};
  EXPECT_EQ(finsum::render_scans(finsum::scan(ids, 10, 10), OutputFormat::Csv), "identity,h,k,lhs,rhs,pass\n");
}

TEST(Report, HumanLines) {
  const std::vector<finsum::CheckReport> checks{finsum::check_identity("B1-REC", 3, 5)};
  EXPECT_EQ(finsum::render_checks(checks, OutputFormat::Human), "B1-REC (3,5): pass  lhs=4  rhs=4\n");
  const std::vector<std::string> ids{"Y1-B"};
  const auto text = finsum::render_scans(finsum::scan(ids, 6, 6), OutputFormat::Human, false);
  EXPECT_NE(text.find("Y1-B [conjecture]: "), std::string::npos);
  EXPECT_NE(text.find("  FAIL (5,2): lhs=-4 rhs=-8\n"), std::string::npos);
}

TEST(Report, SeriesJson) {
  const finsum::SeriesResult r = finsum::finite_series(finsum::SeriesKind::FinS3, 1, 3);
  const json j = finsum::to_json(r);
  EXPECT_EQ(j.at("kind"), "FIN_S3");
  EXPECT_EQ(j.at("exact"), "1/3");
  EXPECT_NEAR(j.at("approx").get<double>(), 1.0 / 3.0, 1e-12);
  const std::vector<finsum::SeriesResult> one{r};
  EXPECT_EQ(json::parse(finsum::render_series(one, OutputFormat::Json)), j);
}
