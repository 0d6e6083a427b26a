#include "pie/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace pie {

namespace {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
nlohmann::json to_json(const IdentityReport& r)
{
    nlohmann::json j;
    j["id"] = std::string(tag(r.id));
    j["mode"] = std::string(to_string(r.mode));
    j["status"] = r.passed() ? "pass" : "fail";
    j["elapsed_ms"] = r.elapsed_ms;
    j["range"] = {
        {"n_min", r.range.n_min}, {"n_max", r.range.n_max}, {"q_order", r.range.q_order},
        {"z", r.range.z},         {"c", r.range.c},
    };
    if (r.first_failure) {
        const auto& f = *r.first_failure;
        j["first_failure"] = {{"n", f.n}, {"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    }
    else {
        j["first_failure"] = nullptr;
    }
    if (r.condition)
        j["condition"] = *r.condition;
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ";" : "") + items[i];
    return out;
}

std::string fixed3(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text)
{
    if (text == "json")
        return ReportFormat::Json;
    if (text == "csv")
        return ReportFormat::Csv;
    if (text == "text")
        return ReportFormat::Text;
    return std::nullopt;
}

std::string reports_to_json(std::span<const IdentityReport> reports)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return (reports.empty() ? std::string("[]") : arr.dump(2)) + "\n";
}

std::string reports_to_csv(std::span<const IdentityReport> reports)
{
    std::ostringstream os;
    os << "id,mode,status,n_min,n_max,q_order,z,c,elapsed_ms,failure_n,failure_where,failure_lhs,failure_rhs\n";
    for (const auto& r : reports) {
        os << tag(r.id) << ',' << to_string(r.mode) << ',' << (r.passed() ? "pass" : "fail") << ',' << r.range.n_min
           << ',' << r.range.n_max << ',' << r.range.q_order << ',' << csv_field(join(r.range.z)) << ','
           << csv_field(join(r.range.c)) << ',' << fixed3(r.elapsed_ms) << ',';
        if (r.first_failure)
            os << r.first_failure->n << ',' << csv_field(r.first_failure->where) << ',' << csv_field(r.first_failure->lhs)
               << ',' << csv_field(r.first_failure->rhs);
        else
            os << ",,,";
        os << '\n';
    }
    return os.str();
}

std::string reports_to_text(std::span<const IdentityReport> reports)
{
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << tag(r.id) << " mode=" << to_string(r.mode);
        if (r.range.n_max > 0)
            os << " n=" << r.range.n_min << ".." << r.range.n_max;
        if (r.range.q_order > 0)
            os << " q_order=" << r.range.q_order;
        if (r.condition)
            os << " condition=" << r.condition.value();
        os << " elapsed_ms=" << fixed3(r.elapsed_ms);
        if (r.first_failure) {
            const auto& f = *r.first_failure;
            os << "\n  first failure at n=" << f.n << " [" << f.where << "]: lhs=" << f.lhs << " rhs=" << f.rhs;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_reports(std::span<const IdentityReport> reports, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Json: return reports_to_json(reports);
    case ReportFormat::Csv: return reports_to_csv(reports);
    case ReportFormat::Text: return reports_to_text(reports);
    }
    return {};
}

bool emit_report(std::span<const IdentityReport> reports, ReportFormat format, std::ostream& sink)
{
    sink << render_reports(reports, format);
    sink.flush();
    return static_cast<bool>(sink);
}

}  // namespace pie
