#include "eulersums/cli.hpp"

#include "eulersums/bench.hpp"
#include "eulersums/closed_forms.hpp"
#include "eulersums/exact_numbers.hpp"
#include "eulersums/hankel.hpp"
#include "eulersums/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eulersums::cli {

namespace {

using Json = nlohmann::ordered_json;
using numeric::Complex;

constexpr unsigned kCostWarningIndex = 10000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    double tol = 1e-10;
    std::optional<int> q;
    std::optional<std::string> seed;
};

Json log2_json(const closed::Log2Linear& v) {
    return Json{{"rational_part", v.rational_part.to_string()}, {"log2_coeff", v.log2_coeff.to_string()}};
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string bound_name(numeric::BoundKind k) { return k == numeric::BoundKind::Rigorous ? "rigorous" : "heuristic"; }

// Shortest form that reads back to the same double.
std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), r.ptr);
}

// Collects records; JSON is printed as one array, CSV as header plus rows.
class Output {
public:
    Output(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

    void header(std::vector<std::string> columns) { columns_ = std::move(columns); }

    void add(Json record, const std::vector<std::string>& csv_row) {
        records_.push_back(std::move(record));
        rows_.push_back(csv_row);
    }

    void flush() {
        if (csv_) {
            out_ << join(columns_) << '\n';
            for (const auto& r : rows_) out_ << join(r) << '\n';
        } else {
            out_ << Json(records_).dump(2) << '\n';
        }
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        return line;
    }

    std::ostream& out_;
    bool csv_;
    std::vector<std::string> columns_;
    std::vector<Json> records_;
    std::vector<std::vector<std::string>> rows_;
};

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    const auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + text + "' as re[,im]");
        }
        if (used != part.size() || !std::isfinite(v)) throw UsageError("cannot parse '" + text + "' as re[,im]");
        return v;
    };
    if (comma == std::string::npos) return {to_double(text), 0.0};
    return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

numeric::AccelConfig accel_config(const Options& opt) {
    numeric::AccelConfig cfg;
    cfg.tol = opt.tol;
    if (opt.q) cfg.q = *opt.q;
    return cfg;
}

void warn_cost(unsigned n, std::ostream& err) {
    if (n > kCostWarningIndex) {
        err << "warning: exact tables beyond index " << kCostWarningIndex
            << " take quadratic time and memory in the index\n";
    }
}

// ---- tables ---------------------------------------------------------------

void cmd_tables(const std::string& kind, unsigned max_n, Output& out, std::ostream& err) {
    if (max_n < 1) throw UsageError("max_n must be at least 1");
    warn_cost(max_n, err);
    out.header({"n", "value"});
    const auto row = [&](unsigned n, const std::string& value) {
        out.add(Json{{"kind", "table_row"}, {"table", kind}, {"n", n}, {"value", value}}, {std::to_string(n), value});
    };
    if (kind == "c_coeff") {
        const auto c = closed::c_coefficients(max_n);
        for (unsigned n = 1; n <= max_n; ++n) row(n, c[n - 1].to_string());
        return;
    }
    for (unsigned n = 0; n <= max_n; ++n) {
        if (kind == "bernoulli") row(n, exact::bernoulli(n).to_string());
        else if (kind == "euler_zero") row(n, exact::euler_zero(n).to_string());
        else row(n, exact::genocchi(n).get_str());
    }
}

// ---- values ---------------------------------------------------------------

void cmd_values(const std::string& fn, unsigned m_max, Output& out) {
    out.header({"s", "type", "rational_part", "log2_coeff", "residue", "order"});
    for (unsigned m = 0; m <= m_max; ++m) {
        const long s = -static_cast<long>(m);
        if (fn == "v" && closed::is_v_pole(s)) {
            const auto pole = closed::v_residue(s);
            const std::string residue = pole.residue.rational_part.to_string();
            out.add(Json{{"kind", "value"},
                         {"function", fn},
                         {"s", s},
                         {"pole", Json{{"order", pole.order}, {"residue", residue}}}},
                    {std::to_string(s), "pole", "", "", residue, std::to_string(pole.order)});
            continue;
        }
        closed::Log2Linear v;
        if (fn == "u") v = closed::u_value(m);
        else if (fn == "w") v = closed::w_value(m);
        else v = closed::Log2Linear(closed::v_value_even(m / 2));
        out.add(Json{{"kind", "value"}, {"function", fn}, {"s", s}, {"value", log2_json(v)}},
                {std::to_string(s), "value", v.rational_part.to_string(), v.log2_coeff.to_string(), "", ""});
    }
}

// ---- eval -----------------------------------------------------------------

void cmd_eval(const std::string& fn, Complex s, const Options& opt, Output& out) {
    const auto cfg = accel_config(opt);
    numeric::ValueWithError v;
    Json config{{"tol", cfg.tol}};
    if (fn == "u" || fn == "v" || fn == "w") {
        config["q"] = cfg.resolved_q(s);
        config["quad_nodes"] = cfg.quad_nodes;
        config["period_cap"] = cfg.period_cap;
    }
    if (fn == "u") v = numeric::u_num(s, cfg);
    else if (fn == "v") v = numeric::v_num(s, cfg);
    else if (fn == "w") v = numeric::w_num(s, cfg);
    else if (fn == "eta") v = numeric::eta_num(s, cfg);
    else if (fn == "zeta") v = numeric::zeta_num(s, cfg);
    else {
        if (s.imag() != 0.0) {
            throw numeric::EvalError(numeric::ErrorKind::UnsupportedRegion, "G is evaluated on the real axis only");
        }
        config["quad_nodes"] = cfg.quad_nodes;
        v = hankel::g_num(s.real(), cfg);
    }
    out.header({"function", "s_re", "s_im", "re", "im", "error_bound", "bound_kind"});
    out.add(Json{{"kind", "value"},
                 {"function", fn},
                 {"s", complex_json(s)},
                 {"value", complex_json(v.value)},
                 {"error_bound", v.error_bound},
                 {"bound_kind", bound_name(v.bound_kind)},
                 {"terms_used", v.terms_used},
                 {"config", config}},
            {fn, format_double(s.real()), format_double(s.imag()), format_double(v.value.real()),
             format_double(v.value.imag()), format_double(v.error_bound), bound_name(v.bound_kind)});
}

// ---- verify ---------------------------------------------------------------

class Checks {
public:
    Checks(Output& out, std::string suite) : out_(out), suite_(std::move(suite)) {
        out_.header({"suite", "check", "index", "passed", "lhs", "rhs"});
    }

    void exact(const std::string& check, long index, bool passed, const std::string& lhs, const std::string& rhs) {
        failures_ += passed ? 0 : 1;
        out_.add(Json{{"kind", "verification"},
                      {"suite", suite_},
                      {"check", check},
                      {"index", index},
                      {"passed", passed},
                      {"lhs", lhs},
                      {"rhs", rhs}},
                 {suite_, check, std::to_string(index), passed ? "true" : "false", lhs, rhs});
    }

    void numeric(const std::string& check, double s, Complex lhs, double lhs_bound, Complex rhs, double tol) {
        const double diff = std::abs(lhs - rhs);
        const bool passed = diff < tol;
        failures_ += passed ? 0 : 1;
        out_.add(Json{{"kind", "verification"},
                      {"suite", suite_},
                      {"check", check},
                      {"s", s},
                      {"passed", passed},
                      {"lhs", complex_json(lhs)},
                      {"lhs_error_bound", lhs_bound},
                      {"rhs", complex_json(rhs)},
                      {"difference", diff},
                      {"tolerance", tol}},
                 {suite_, check, format_double(s), passed ? "true" : "false", format_double(lhs.real()),
                  format_double(rhs.real())});
    }

    int failures() const { return failures_; }

private:
    Output& out_;
    std::string suite_;
    int failures_ = 0;
};

int cmd_verify(const std::string& suite, std::optional<unsigned> max_n_opt, const Options& opt, Output& out,
               std::ostream& err) {
    Checks checks(out, suite);
    if (suite == "exact_identities") {
        const unsigned max_n = max_n_opt.value_or(200);
        if (max_n < 1) throw UsageError("max_n must be at least 1");
        warn_cost(2 * max_n, err);
        for (unsigned n = 1; n <= max_n; ++n) {
            const auto c1 = closed::check_corollary1(n);
            checks.exact("corollary1", n, c1.passed, c1.lhs.to_string(), c1.rhs.to_string());
            const auto br = closed::check_bridge(n);
            checks.exact("bridge", n, br.passed, br.lhs.to_string(), br.rhs.to_string());
        }
        for (unsigned k = 0; k <= max_n; ++k) {
            const Rational eta = closed::eta_nonpositive(k);
            const Rational rel = (Rational(1) - Rational(pow2(k + 1))) * closed::zeta_nonpositive(k);
            checks.exact("eta_zeta_relation", k, eta == rel, eta.to_string(), rel.to_string());
            const Rational e0 = exact::euler_zero(2 * k + 2);
            checks.exact("euler_even_zero", 2 * k + 2, e0.is_zero(), e0.to_string(), "0");
            const Rational e1 = exact::euler_eval(k + 1, Rational(1));
            const Rational minus_e0 = -exact::euler_zero(k + 1);
            checks.exact("euler_one_reflection", k + 1, e1 == minus_e0, e1.to_string(), minus_e0.to_string());
            bool integral = true;
            std::string g;
            try {
                g = exact::genocchi(k).get_str();
            } catch (const std::logic_error& e) {
                integral = false;
                g = e.what();
            }
            checks.exact("genocchi_integral", k, integral, g, "integer");
        }
    } else if (suite == "continuation") {
        const unsigned max_n = max_n_opt.value_or(6);
        auto cfg = accel_config(opt);
        const double tol = opt.tol;
        cfg.tol = 0.1 * tol;
        for (unsigned m = 0; m <= max_n; ++m) {
            const double s = -static_cast<double>(m);
            const auto u = numeric::u_num(s, cfg);
            checks.numeric("u", s, u.value, u.error_bound, closed::u_value(m).to_double(), tol);
            const auto w = numeric::w_num(s, cfg);
            checks.numeric("w", s, w.value, w.error_bound, closed::w_value(m).to_double(), tol);
            if (m >= 2 && m % 2 == 0) {
                const auto v = numeric::v_num(s, cfg);
                checks.numeric("v", s, v.value, v.error_bound, closed::v_value_even(m / 2).to_double(), tol);
            }
        }
    } else {
        numeric::AccelConfig cfg;
        cfg.tol = 1e-12;
        for (const double s : {0.5, 1.5, 2.5}) {
            const auto r = hankel::theorem4_residual(s, cfg);
            checks.numeric("theorem4", s, r.lhs.value, r.lhs.error_bound, r.rhs.value, opt.tol);
        }
    }
    return checks.failures() == 0 ? kExitOk : kExitVerifyFailed;
}

// ---- bench ----------------------------------------------------------------

void cmd_bench(const std::string& fn, Complex s, const std::vector<std::string>& methods, int digits, Output& out) {
    if (s.imag() != 0.0) throw UsageError("bench takes a real s");
    const auto series = fn == "u" ? bench::Series::U : fn == "v" ? bench::Series::V : bench::Series::W;
    std::vector<bench::Method> ms;
    for (const auto& m : methods) ms.push_back(m == "naive" ? bench::Method::Naive : bench::Method::Boole);
    std::vector<bench::BenchRow> rows;
    try {
        rows = bench::run(series, s.real(), ms, digits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out.header({"function", "method", "s", "digits", "terms", "value", "error", "error_bound", "seconds", "converged"});
    for (const auto& r : rows) {
        out.add(Json{{"kind", "benchmark_row"},
                     {"function", r.function},
                     {"method", r.method},
                     {"s", r.s},
                     {"digits", r.digits},
                     {"terms", r.terms},
                     {"value", r.value},
                     {"error", r.error},
                     {"error_bound", r.error_bound},
                     {"seconds", r.seconds},
                     {"converged", r.converged}},
                {r.function, r.method, format_double(r.s), std::to_string(r.digits), std::to_string(r.terms),
                 format_double(r.value), format_double(r.error), format_double(r.error_bound),
                 format_double(r.seconds), r.converged ? "true" : "false"});
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric values of alternating Euler sums"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", opt.tol, "Target tolerance")->check(CLI::PositiveNumber);
    app.add_option("--q", opt.q, "Truncation order of the tail expansions")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Reserved; the tool is deterministic");

    std::string table_kind;
    unsigned table_max = 0;
    auto* tables = app.add_subcommand("tables", "Exact number tables");
    tables->add_option("kind", table_kind)->required()->check(CLI::IsMember({"bernoulli", "euler_zero", "genocchi", "c_coeff"}));
    tables->add_option("max_n", table_max)->required();

    std::string values_fn;
    unsigned values_max = 0;
    auto* values = app.add_subcommand("values", "Exact values and poles at s = 0, -1, ..., -m_max");
    values->add_option("function", values_fn)->required()->check(CLI::IsMember({"u", "v", "w"}));
    values->add_option("m_max", values_max)->required();

    std::string eval_fn;
    std::string eval_s;
    auto* eval = app.add_subcommand("eval", "Numeric value at complex s (\"re\" or \"re,im\")");
    eval->add_option("function", eval_fn)->required()->check(CLI::IsMember({"u", "v", "w", "eta", "zeta", "G"}));
    eval->add_option("s", eval_s)->required()->allow_extra_args(false);

    std::string suite;
    std::optional<unsigned> verify_max;
    auto* verify = app.add_subcommand("verify", "Identity verification suites");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"exact_identities", "continuation", "theorem4"}));
    verify->add_option("max_n", verify_max);

    std::string bench_fn;
    std::string bench_s;
    std::vector<std::string> methods{"naive", "boole"};
    int digits = 8;
    auto* bench_cmd = app.add_subcommand("bench", "Partial sums against the accelerated evaluator");
    bench_cmd->add_option("function", bench_fn)->required()->check(CLI::IsMember({"u", "v", "w"}));
    bench_cmd->add_option("s", bench_s)->required();
    bench_cmd->add_option("--methods", methods)->delimiter(',')->check(CLI::IsMember({"naive", "boole"}));
    bench_cmd->add_option("--digits", digits)->check(CLI::Range(1, 15));

    std::vector<const char*> argv{args.empty() ? "eulersums" : args[0].c_str()};
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (opt.seed) {
        err << "error: --seed is reserved; every command is deterministic\n";
        return kExitUsage;
    }

    Output output(out, opt.format == "csv");
    int status = kExitOk;
    try {
        if (*tables) cmd_tables(table_kind, table_max, output, err);
        else if (*values) cmd_values(values_fn, values_max, output);
        else if (*eval) cmd_eval(eval_fn, parse_complex(eval_s), opt, output);
        else if (*verify) status = cmd_verify(suite, verify_max, opt, output, err);
        else cmd_bench(bench_fn, parse_complex(bench_s), methods, digits, output);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const numeric::EvalError& e) {
        const std::string reason(numeric::reason_code(e.kind()));
        err << "error: " << e.what() << '\n';
        if (opt.format == "csv") {
            out << "kind,reason,message\nerror," << reason << ",\"" << e.what() << "\"\n";
        } else {
            out << Json::array({Json{{"kind", "error"}, {"reason", reason}, {"message", e.what()}}}).dump(2) << '\n';
        }
        return kExitDomain;
    }
    output.flush();
    return status;
}

}  // namespace eulersums::cli
