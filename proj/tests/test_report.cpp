#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "pie/report.hpp"

using namespace pie;

namespace {

IdentityReport pass_report()
{
    IdentityReport r;
    r.id = IdentityId::ClassSum;
    r.range.n_min = 1;
    r.range.n_max = 60;
    return r;
}

IdentityReport fail_report()
{
    IdentityReport r;
    r.id = IdentityId::Thm23;
    r.mode = Mode::Numeric;
    r.range.n_min = 1;
    r.range.n_max = 30;
    r.range.z = {"1.5"};
    r.range.c = {"0.4"};
    r.first_failure = Failure{7, "z=1.5", "1/3", "2/3"};
    r.condition = 12.5;
    return r;
}

}  // namespace

TEST(Report, EmptyJsonIsBrackets)
{
    EXPECT_EQ(reports_to_json({}), "[]\n");
}

TEST(Report, SinglePassReport)
{
    std::vector<IdentityReport> reports{pass_report()};
    auto j = nlohmann::json::parse(reports_to_json(reports));
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_EQ(j[0]["id"], "CLASS_SUM");
    EXPECT_EQ(j[0]["mode"], "exact");
    EXPECT_TRUE(j[0]["first_failure"].is_null());
    EXPECT_FALSE(j[0].contains("condition"));
    EXPECT_EQ(j[0]["range"]["n_max"], 60);
}

TEST(Report, FailureFieldsAreStrings)
{
    std::vector<IdentityReport> reports{pass_report(), fail_report()};
    auto j = nlohmann::json::parse(reports_to_json(reports));
    EXPECT_EQ(j[1]["status"], "fail");
    EXPECT_EQ(j[1]["first_failure"]["lhs"], "1/3");
    EXPECT_EQ(j[1]["first_failure"]["n"], 7);
    EXPECT_DOUBLE_EQ(j[1]["condition"].get<double>(), 12.5);
}

TEST(Report, KeysSortedAndStable)
{
    std::vector<IdentityReport> reports{fail_report()};
    const auto text = reports_to_json(reports);
    EXPECT_EQ(text, reports_to_json(reports));
    EXPECT_LT(text.find("\"condition\""), text.find("\"elapsed_ms\""));
    EXPECT_LT(text.find("\"elapsed_ms\""), text.find("\"first_failure\""));
    EXPECT_LT(text.find("\"mode\""), text.find("\"range\""));
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(Report, CsvAndText)
{
    std::vector<IdentityReport> reports{pass_report(), fail_report()};
    auto csv = reports_to_csv(reports);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "id,mode,status,n_min,n_max,q_order,z,c,elapsed_ms,failure_n,failure_where,failure_lhs,failure_rhs");
    EXPECT_NE(csv.find("CLASS_SUM,exact,pass,1,60,0,,,0.000,,,,"), std::string::npos);
    EXPECT_NE(csv.find("THM_2_3,numeric,fail,1,30,0,1.5,0.4,0.000,7,z=1.5,1/3,2/3"), std::string::npos);
    auto text = reports_to_text(reports);
    EXPECT_NE(text.find("PASS CLASS_SUM"), std::string::npos);
    EXPECT_NE(text.find("FAIL THM_2_3"), std::string::npos);
}

TEST(Report, FormatParsing)
{
    EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
    EXPECT_EQ(parse_report_format("text"), ReportFormat::Text);
    EXPECT_FALSE(parse_report_format("xml"));
}

TEST(Report, EmitDetectsFailedSink)
{
    std::ostringstream good;
    std::vector<IdentityReport> reports{pass_report()};
    EXPECT_TRUE(emit_report(reports, ReportFormat::Json, good));
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    EXPECT_FALSE(emit_report(reports, ReportFormat::Json, bad));
}
