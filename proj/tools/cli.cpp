#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pie/errors.hpp"
#include "pie/generating_functions.hpp"
#include "pie/identities.hpp"
#include "pie/involution.hpp"
#include "pie/report.hpp"

namespace pie::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

double parse_real(const std::string& s, std::string_view whole)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    return v;
}

struct Options {
    // verify / report-all
    std::vector<std::string> ids;
    bool all = false;
    int n_min = 1;
    int n_max = 60;
    std::string mode = "exact";
    std::string z_text;
    std::string c_text;
    double tolerance = 1e-9;
    int q_order = 30;
    unsigned m_max = 5;
    int k_max = 4;
    std::string format = "json";
    std::string output = "-";
    bool no_timing = false;
    bool n_max_given = false;

    // series
    std::string series_name;
    unsigned m = 1;
    std::string series_c = "1";
    std::string side = "lhs";

    // involution
    int inv_n = 0;
    int inv_modulus = 0;
    bool trace = false;
    bool sweep = false;
};

// Default n range in numeric mode unless --n-max is passed to verify.
constexpr int kNumericDefaultNMax = 30;

CheckConfig make_config(const Options& o, Mode mode)
{
    CheckConfig cfg;
    cfg.mode = mode;
    cfg.n_min = o.n_min;
    cfg.n_max = mode == Mode::Numeric && !o.n_max_given ? std::min(o.n_max, kNumericDefaultNMax) : o.n_max;
    cfg.tolerance = o.tolerance;
    cfg.q_order = o.q_order;
    cfg.m_max = o.m_max;
    cfg.dilcher_k_max = o.k_max;
    cfg.measure_time = !o.no_timing;
    if (o.n_min > cfg.n_max)
        throw UsageError("--n-min exceeds --n-max");

    if (mode == Mode::Exact) {
        if (!o.z_text.empty()) {
            cfg.exponents.clear();
            for (const auto& item : split_list(o.z_text)) {
                const double v = parse_real(trim(item), item);
                if (v < 0 || v != static_cast<unsigned>(v))
                    throw UsageError("exact mode needs nonnegative integer exponents, got '" + item + "'");
                cfg.exponents.push_back(static_cast<unsigned>(v));
            }
        }
        if (!o.c_text.empty()) {
            cfg.c_values.clear();
            for (const auto& item : split_list(o.c_text))
                cfg.c_values.push_back(parse_rational(item));
        }
        return cfg;
    }

    if (!o.z_text.empty()) {
        cfg.z_grid.clear();
        for (const auto& item : split_list(o.z_text))
            cfg.z_grid.push_back(parse_complex(item));
    }
    if (!o.c_text.empty()) {
        cfg.c_grid.clear();
        for (const auto& item : split_list(o.c_text))
            cfg.c_grid.push_back(parse_complex(item));
    }
    for (auto c : cfg.c_grid)
        if (std::abs(c) > cfg.c_disk)
            throw UsageError("c values must satisfy |c| <= " + std::to_string(cfg.c_disk));
    if (cfg.z_grid.empty() || cfg.c_grid.empty())
        throw UsageError("numeric grids must be nonempty");
    return cfg;
}

int write_output(const Options& o, const std::string& text, std::ostream& out, std::ostream& err)
{
    if (o.output == "-") {
        out << text;
        out.flush();
        if (!out) {
            err << "error: failed writing to standard output\n";
            return kExitFail;
        }
        return kExitPass;
    }
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << o.output << '\n';
        return kExitFail;
    }
    return kExitPass;
}

int emit(const Options& o, const std::vector<IdentityReport>& reports, std::ostream& out, std::ostream& err)
{
    const auto format = parse_report_format(o.format);
    if (!format)
        throw UsageError("unknown format '" + o.format + "'");
    const int written = write_output(o, render_reports(reports, *format), out, err);
    if (written != kExitPass)
        return written;
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return all_pass ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const Mode mode = o.mode == "numeric" ? Mode::Numeric : Mode::Exact;
    const auto cfg = make_config(o, mode);
    if (o.all == !o.ids.empty())
        throw UsageError("verify needs exactly one of --id or --all");

    std::vector<IdentityReport> reports;
    if (o.all) {
        reports = check_all(cfg);
    }
    else {
        std::vector<IdentityId> ids;
        for (const auto& text : o.ids) {
            auto id = parse_identity(text);
            if (!id)
                throw UsageError("unknown identity '" + text + "'");
            if (mode == Mode::Numeric && !supports_numeric(*id))
                throw UsageError(std::string(tag(*id)) + " has no numeric mode");
            ids.push_back(*id);
        }
        for (auto id : ids)
            reports.push_back(check_identity(id, cfg));
    }
    return emit(o, reports, out, err);
}

int cmd_report_all(const Options& o, std::ostream& out, std::ostream& err)
{
    auto reports = check_all(make_config(o, Mode::Exact));
    auto numeric = check_all(make_config(o, Mode::Numeric));
    reports.insert(reports.end(), numeric.begin(), numeric.end());
    return emit(o, reports, out, err);
}

template <class R>
TruncatedSeries<R> pick_series(const Options& o, const R& c)
{
    const int order = o.q_order;
    const auto& name = o.series_name;
    if (name == "A")
        return series_A(c, order);
    if (name == "M")
        return series_M(o.m, c, order);
    if (name == "K") {
        if (o.m < 1)
            throw UsageError("K needs --m >= 1");
        return series_K(o.m, c, order);
    }
    if (name == "entry4") {
        auto pair = series_entry4(c, order);
        if (o.side == "lhs")
            return pair.lhs;
        if (o.side == "rhs")
            return pair.rhs;
        throw UsageError("entry4 sides are lhs and rhs");
    }
    if constexpr (std::is_same_v<R, mpq_class>) {
        if (name == "dilcher") {
            if (c != 1)
                throw UsageError("dilcher takes no --c");
            auto triple = series_dilcher_binomial<mpq_class>(static_cast<int>(o.m), order);
            if (o.side == "lhs" || o.side == "binomial")
                return triple.binomial_sum;
            if (o.side == "alternating")
                return triple.alternating_sum;
            if (o.side == "rhs" || o.side == "lambert")
                return triple.nested_lambert;
            throw UsageError("dilcher sides are binomial, alternating and lambert");
        }
    }
    else if (name == "dilcher") {
        throw UsageError("dilcher takes no --c");
    }
    throw UsageError("unknown series '" + name + "'");
}

template <class R>
std::string series_csv(const TruncatedSeries<R>& s)
{
    std::ostringstream os;
    for (int i = 0; i <= s.order(); ++i)
        if (!ring_is_zero(s[i]))
            os << i << ',' << ring_to_string(s[i]) << '\n';
    return os.str();
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err)
{
    std::string text;
    if (o.series_c == "symbolic")
        text = series_csv(pick_series(o, CPolynomial::c()));
    else
        text = series_csv(pick_series(o, parse_rational(o.series_c)));
    return write_output(o, text, out, err);
}

int cmd_involution(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.inv_n < 1)
        throw UsageError("--n must be positive");
    std::ostringstream os;
    bool ok = true;

    if (o.sweep) {
        int classes = 0, problems = 0;
        for (int n = 1; n <= o.inv_n; ++n)
            for (int modulus = 1; modulus <= n; ++modulus) {
                if (o.inv_modulus > 0 && modulus != o.inv_modulus)
                    continue;
                ++classes;
                auto audit = audit_pairing(n, modulus);
                if (!audit.ok()) {
                    ++problems;
                    os << "FAIL " << *audit.problem << '\n';
                }
            }
        os << "sweep n<=" << o.inv_n << ": " << classes << " classes, " << problems << " problems\n";
        ok = problems == 0;
    }
    else {
        if (o.inv_modulus < 1 || o.inv_modulus > o.inv_n)
            throw UsageError("--N-divisor must lie in 1..n");
        for (const auto& p : enumerate_distinct(o.inv_n)) {
            if (!in_class(p, o.inv_modulus))
                continue;
            auto t = pair(p, o.inv_modulus);
            if (o.trace)
                os << t.serialize();
            else
                os << p.to_string() << " -> " << (t.output ? t.output->to_string() : std::string("fixed")) << ' '
                   << to_string(t.pairing_case) << '\n';
        }
        auto audit = audit_pairing(o.inv_n, o.inv_modulus);
        os << "n=" << o.inv_n << " N=" << o.inv_modulus << " members=" << audit.members << " fixed=" << audit.fixed << ' '
           << (audit.ok() ? std::string("ok") : "FAIL " + *audit.problem) << '\n';
        ok = audit.ok();
    }
    const int written = write_output(o, os.str(), out, err);
    if (written != kExitPass)
        return written;
    return ok ? kExitPass : kExitFail;
}

void add_report_options(CLI::App& cmd, Options& o)
{
    cmd.add_option("--n-min", o.n_min, "Smallest n")->envname("PIE_N_MIN")->check(CLI::Range(1, 200));
    cmd.add_option("--n-max", o.n_max, "Largest n")->envname("PIE_N_MAX")->check(CLI::Range(1, 200));
    cmd.add_option("--z", o.z_text, "Comma-separated exponents (exact) or complex z grid (numeric)")->envname("PIE_Z");
    cmd.add_option("--c", o.c_text, "Comma-separated rational c values (exact) or complex c grid (numeric)")
        ->envname("PIE_C");
    cmd.add_option("--tol", o.tolerance, "Relative tolerance in numeric mode")
        ->envname("PIE_TOL")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--q-order", o.q_order, "Truncation order of q-series")
        ->envname("PIE_Q_ORDER")
        ->check(CLI::Range(1, 200));
    cmd.add_option("--m-max", o.m_max, "Largest t-power for the exponential relation")
        ->envname("PIE_M_MAX")
        ->check(CLI::Range(1, 10));
    cmd.add_option("--k-max", o.k_max, "Largest k for the binomial q-series identity")
        ->envname("PIE_K_MAX")
        ->check(CLI::Range(1, kMaxDilcherK));
    cmd.add_option("--format", o.format, "json, csv or text")
        ->envname("PIE_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd.add_option("--output", o.output, "Output path, '-' for standard output")->envname("PIE_OUTPUT");
    cmd.add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0")->envname("PIE_NO_TIMING");
}

}  // namespace

std::complex<double> parse_complex(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw std::invalid_argument("empty complex number");
    if (s.back() != 'i' && s.back() != 'j')
        return {parse_real(s, text), 0.0};
    s.pop_back();
    // Split at the last sign that does not follow an exponent marker.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    const std::string re = split == std::string::npos ? std::string() : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

mpq_class parse_rational(std::string_view text)
{
    const std::string s = trim(text);
    const auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (s.empty())
        throw bad();
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw bad();
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const auto frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw bad();
        mpz_class num, den;
        if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
            throw bad();
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0)
        throw bad();
    q.canonicalize();
    return q;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact and sampled checks of weighted partition identities", "pie"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check registered identities");
    verify->add_option("--id", o.ids, "Identity tag, e.g. BS_BASIC (repeatable, comma-separated)")->delimiter(',');
    verify->add_flag("--all", o.all, "Check every identity that supports the mode");
    verify->add_option("--mode", o.mode, "exact or numeric")
        ->envname("PIE_MODE")
        ->check(CLI::IsMember({"exact", "numeric"}));
    add_report_options(*verify, o);

    auto* report_all = app.add_subcommand("report-all", "Check every identity in both modes");
    add_report_options(*report_all, o);

    auto* series = app.add_subcommand("series", "Dump q-series coefficients as power,coefficient rows");
    series->add_option("--name", o.series_name, "entry4, M, K, A or dilcher")
        ->required()
        ->check(CLI::IsMember({"entry4", "M", "K", "A", "dilcher"}));
    series->add_option("--order", o.q_order, "Truncation order")->envname("PIE_Q_ORDER")->check(CLI::Range(1, 200));
    series->add_option("--m", o.m, "Index m of M and K; k for dilcher")->check(CLI::Range(0, 20));
    series->add_option("--c", o.series_c, "Rational value of c, or 'symbolic'");
    series->add_option("--side", o.side, "lhs/rhs for entry4; binomial/alternating/lambert for dilcher");
    series->add_option("--output", o.output, "Output path, '-' for standard output")->envname("PIE_OUTPUT");

    auto* involution = app.add_subcommand("involution", "Apply the sign-reversing pairing on D(n) and C(N)");
    involution->add_option("--n", o.inv_n, "Weight n")->required()->check(CLI::Range(1, 200));
    involution->add_option("--N-divisor", o.inv_modulus, "Class index N")->check(CLI::PositiveNumber);
    involution->add_flag("--trace", o.trace, "Print each step");
    involution->add_flag("--sweep", o.sweep, "Audit every class with weight up to n");
    involution->add_option("--output", o.output, "Output path, '-' for standard output")->envname("PIE_OUTPUT");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    o.n_max_given = verify->parsed() && verify->get_option("--n-max")->count() > 0;

    try {
        if (verify->parsed())
            return cmd_verify(o, out, err);
        if (report_all->parsed())
            return cmd_report_all(o, out, err);
        if (series->parsed())
            return cmd_series(o, out, err);
        return cmd_involution(o, out, err);
    }
    catch (const AlgorithmFault& e) {
        err << e.what() << '\n';
        return kExitFail;
    }
    catch (const ConsistencyFault& e) {
        err << e.what() << '\n';
        return kExitFail;
    }
    catch (const std::logic_error& e) {  // invalid_argument, out_of_range, domain_error, usage
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
}

}  // namespace pie::cli
