#include "gls/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gls/asymptotics.hpp"
#include "gls/enumerator.hpp"
#include "gls/normality_stats.hpp"
#include "gls/report.hpp"
#include "gls/simplex_sums.hpp"
#include "gls/system_io.hpp"
#include "gls/verify.hpp"

namespace gls {

namespace {

// Epsilon arguments accept "a/b", "b^-k" and decimal literals; decimals are
// converted to the exact binary rational of the double with a warning.
Rational parse_eps(const std::string& text, std::ostream& err) {
    if (text.find('.') != std::string::npos) {
        // Every finite double is an exact dyadic rational.
        const double value = std::stod(text);
        int exp = 0;
        const double mantissa = std::frexp(value, &exp);
        Rational exact(BigInt(static_cast<std::int64_t>(std::ldexp(mantissa, 53))),
                       BigInt(1) << 53);
        if (exp > 0) exact *= BigInt(1) << exp;
        if (exp < 0) exact /= BigInt(1) << -exp;
        err << "warning: decimal threshold " << text
            << " converted to exact binary rational " << to_string(exact) << "\n";
        return exact;
    }
    return parse_rational(text);
}

// "2^-8..2^-40" -> thresholds 2^-8, 2^-9, ..., 2^-40.
std::vector<Rational> expand_eps_range(const std::string& range) {
    const auto sep = range.find("..");
    if (sep == std::string::npos) throw CLI::ValidationError("--eps-range expects a..b");
    const Rational from = parse_rational(range.substr(0, sep));
    const Rational to = parse_rational(range.substr(sep + 2));
    if (from <= to) throw CLI::ValidationError("--eps-range must decrease");
    std::vector<Rational> eps_list;
    for (Rational eps = from; eps >= to; eps /= 2) eps_list.push_back(eps);
    return eps_list;
}

struct Options {
    std::string system_path;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 20240601;
};

std::ostream& open_output(const Options& opt, std::ofstream& file, std::ostream& fallback) {
    if (opt.out_path.empty()) return fallback;
    file.open(opt.out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out_path);
    return file;
}

RunMeta make_meta(const std::string& command, const DigitSystem& sys, const Options& opt) {
    RunMeta meta;
    meta.command = command;
    meta.system = sys.describe();
    meta.symbols = symbols_string(sys);
    meta.user_order = user_order_string(sys);
    meta.seed = opt.seed;
    return meta;
}

void emit(const Options& opt, std::ostream& out, const RunMeta& meta, const Table& table) {
    if (opt.format == "json")
        write_json(out, meta, table);
    else
        write_csv(out, meta, table);
}

int run_gen(const DigitSystem& sys, std::uint64_t n, const std::string& boundaries_path,
            std::ostream& out, std::ostream& err) {
    err << "# system: " << sys.describe() << " symbols: " << symbols_string(sys)
        << " version: " << kVersion << "\n";
    std::unique_ptr<std::ofstream> boundaries;
    if (!boundaries_path.empty()) {
        boundaries = std::make_unique<std::ofstream>(boundaries_path);
        if (!*boundaries) throw std::runtime_error("cannot open " + boundaries_path);
    }
    const bool compact = sys.single_char_symbols();
    DigitStream stream(sys);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (boundaries && stream.at_word_start()) *boundaries << i << "\n";
        const Digit d = stream.next();
        if (!compact && i) out << ' ';
        out << sys.symbol(d);
    }
    out << "\n";
    return 0;
}

int run_stats(const DigitSystem& sys, const Options& opt, std::uint64_t N, int K,
              std::uint64_t row_cap, bool reservoir, std::ostream& out) {
    const HotSpotReport report = hot_spot_report(sys, N, K, row_cap, reservoir);
    Table table;
    table.columns = {"word", "count", "measure_num", "measure_den", "ratio"};
    for (const auto& row : report.rows)
        table.rows.push_back({format_word(sys, row.word), std::to_string(row.count),
                              numerator(row.measure).str(), denominator(row.measure).str(),
                              format_double(row.ratio)});
    RunMeta meta = make_meta("stats", sys, opt);
    meta.params = {{"N", std::to_string(N)},
                   {"K", std::to_string(K)},
                   {"max_ratio", format_double(report.max_ratio)},
                   {"min_ratio", format_double(report.min_ratio)}};
    emit(opt, out, meta, table);
    return 0;
}

int run_sums(const DigitSystem& sys, const Options& opt, const std::vector<Rational>& eps_list,
             const std::string& query_text, bool force_float, std::ostream& out) {
    const simplex::Eval mode =
        force_float ? simplex::Eval::float_only : simplex::Eval::exact_and_float;
    Word query;
    const bool has_query = !query_text.empty();
    if (has_query) query = parse_word(sys, query_text);

    Table table;
    table.columns = {"eps", "digit_sum", "word_sum", "lattice_points",
                     "digit_sum_scaled", "word_sum_scaled"};
    if (has_query) table.columns.push_back("occurrence_sum");
    for (const Rational& eps : eps_list) {
        const auto S = simplex::digit_sum(sys, eps, mode);
        const auto Ssharp = simplex::word_sum(sys, eps, mode);
        const double s_val = force_float ? S.float_value : S.value.convert_to<double>();
        const double sharp_val =
            force_float ? Ssharp.float_value : Ssharp.value.convert_to<double>();
        const double log_abs = std::abs(log_rational(eps));
        std::vector<std::string> row{
            to_string(eps),
            force_float ? format_double(S.float_value) : S.value.str(),
            force_float ? format_double(Ssharp.float_value) : Ssharp.value.str(),
            std::to_string(S.lattice_count),
            format_double(log_abs > 0 ? s_val * to_double(eps) / log_abs : 0.0),
            format_double(sharp_val * to_double(eps))};
        if (has_query) {
            const auto occ = simplex::occurrence_sum(sys, eps, query, mode);
            row.push_back(force_float ? format_double(occ.float_value) : occ.value.str());
        }
        table.rows.push_back(std::move(row));
    }
    RunMeta meta = make_meta("sums", sys, opt);
    meta.params = {{"mode", force_float ? "float" : "exact"}};
    if (has_query) meta.params.emplace_back("string", query_text);
    emit(opt, out, meta, table);
    return 0;
}

int run_laplace(const DigitSystem& sys, const Options& opt, const std::string& check,
                const std::vector<Rational>& eps_list, std::uint64_t samples,
                std::ostream& out) {
    const Rational eps = eps_list.empty() ? Rational(1, 1024) : eps_list.front();
    nlohmann::ordered_json doc;
    doc["meta"] = {{"version", kVersion}, {"command", "laplace"},
                   {"system", sys.describe()}, {"check", check},
                   {"seed", opt.seed}};

    if (check == "max" || check == "hessian") {
        const auto analysis = asymptotics::laplace_analysis(sys, eps);
        doc["eps"] = to_string(eps);
        doc["scale"] = analysis.scale;
        doc["maximizer"] = analysis.maximizer;
        doc["value_at_max"] = analysis.value_at_max;
        doc["minus_log_eps"] = -analysis.log_eps;
        doc["curvature"] = analysis.curvature;
        doc["eigenvalues"] = analysis.eigenvalues;
        doc["eigenvectors"] = analysis.eigenvectors;
    } else if (check == "taylor") {
        doc["eps"] = to_string(eps);
        doc["residual"] = asymptotics::taylor_residual(sys, eps, samples, opt.seed);
    } else if (check == "concavity") {
        const auto report = asymptotics::concavity_check(sys, eps, samples, opt.seed);
        doc["eps"] = to_string(eps);
        doc["samples"] = report.samples;
        doc["max_second_derivative"] = report.max_value;
        doc["min_second_derivative"] = report.min_value;
        doc["all_negative"] = report.max_value < 0.0;
    } else if (check == "gauss") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (double Z : {1e4, 1e6})
            for (double C : {0.5, 1.0, 2.0}) {
                const auto g = asymptotics::gaussian_sum_check(Z, C);
                rows.push_back({{"Z", Z}, {"C", C}, {"sum", g.sum},
                                {"reference", g.reference}, {"rel_error", g.rel_error}});
            }
        doc["gaussian"] = rows;
    } else if (check == "sandwich") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : asymptotics::sandwich_scan(sys, eps_list)) {
            nlohmann::ordered_json r{{"eps", to_string(row.eps)}, {"valid", row.valid}};
            if (row.valid) {
                r["digit_ratio_lower"] = row.digit_ratio_lower;
                r["digit_ratio_upper"] = row.digit_ratio_upper;
                r["word_ratio_lower"] = row.word_ratio_lower;
                r["word_ratio_upper"] = row.word_ratio_upper;
            } else {
                r["note"] = row.note;
            }
            rows.push_back(std::move(r));
        }
        doc["sandwich"] = rows;
    } else if (check == "hbound") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : asymptotics::surface_growth_scan(sys, eps_list))
            rows.push_back({{"eps", to_string(row.eps)},
                            {"digit_sum_scaled", row.digit_sum_scaled},
                            {"word_sum_scaled", row.word_sum_scaled}});
        doc["surface_growth"] = rows;
    } else {
        throw CLI::ValidationError("unknown --check " + check);
    }
    out << doc.dump(2) << "\n";
    return 0;
}

int run_verify(const DigitSystem& sys, const Options& opt, std::ostream& out) {
    const auto results = run_verification(sys, opt.seed);
    for (const auto& r : results)
        out << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
    const bool ok = all_passed(results);
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Champernowne constructions over finite-digit product-measure systems"};
    app.require_subcommand(1);

    Options opt;

    // gen
    auto* gen = app.add_subcommand("gen", "emit digits of the concatenation expansion");
    std::uint64_t gen_n = 0;
    std::string boundaries_path;
    gen->add_option("--system", opt.system_path, "system config JSON")->required();
    gen->add_option("--n", gen_n, "number of digits")->required();
    gen->add_option("--boundaries", boundaries_path, "write word-start digit indices to file");
    gen->add_option("--out", opt.out_path, "output file (default stdout)");

    // stats
    auto* stats = app.add_subcommand("stats", "block frequencies and hot-spot ratios");
    std::uint64_t stats_N = 0, row_cap = 1u << 24;
    int stats_K = 1;
    bool reservoir = false;
    stats->add_option("--system", opt.system_path)->required();
    stats->add_option("--N", stats_N, "prefix length")->required();
    stats->add_option("--K", stats_K, "max block length")->required();
    stats->add_option("--row-cap", row_cap, "max report rows");
    stats->add_flag("--reservoir", reservoir, "track only the top-measure words");
    stats->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
    stats->add_option("--out", opt.out_path);

    // sums
    auto* sums = app.add_subcommand("sums", "lattice sums over the measure simplex");
    std::vector<std::string> eps_args;
    std::string eps_range, query_text;
    bool force_float = false, force_exact = false;
    sums->add_option("--system", opt.system_path)->required();
    sums->add_option("--eps", eps_args, "threshold, given as a/b or 2^-k (repeatable)");
    sums->add_option("--eps-range", eps_range, "halving range, e.g. 2^-8..2^-40");
    sums->add_option("--string", query_text, "count occurrences of this word");
    sums->add_flag("--float", force_float, "log-space path only");
    sums->add_flag("--exact", force_exact, "exact path (default)");
    sums->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
    sums->add_option("--out", opt.out_path);

    // laplace
    auto* laplace = app.add_subcommand("laplace", "maximizer, curvature and growth checks");
    std::string check = "max";
    std::vector<std::string> laplace_eps_args;
    std::string laplace_eps_range;
    std::uint64_t samples = 1000;
    laplace->add_option("--system", opt.system_path)->required();
    laplace->add_option("--check", check)
        ->check(CLI::IsMember({"max", "hessian", "taylor", "concavity", "gauss", "sandwich",
                               "hbound"}));
    laplace->add_option("--eps", laplace_eps_args, "threshold (repeatable for scans)");
    laplace->add_option("--eps-range", laplace_eps_range, "halving range for scans");
    laplace->add_option("--samples", samples, "sample count for randomized checks");
    laplace->add_option("--seed", opt.seed, "seed for randomized checks");
    laplace->add_option("--out", opt.out_path);

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-module invariant battery");
    verify->add_option("--system", opt.system_path)->required();
    verify->add_option("--seed", opt.seed, "seed for randomized checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        const DigitSystem sys = load_system_file(opt.system_path);
        std::ofstream file;
        std::ostream& sink = open_output(opt, file, out);

        if (*gen) return run_gen(sys, gen_n, boundaries_path, sink, err);
        if (*stats) return run_stats(sys, opt, stats_N, stats_K, row_cap, reservoir, sink);
        if (*sums) {
            std::vector<Rational> eps_list;
            for (const std::string& text : eps_args) eps_list.push_back(parse_eps(text, err));
            if (!eps_range.empty())
                for (Rational& eps : expand_eps_range(eps_range))
                    eps_list.push_back(std::move(eps));
            if (eps_list.empty()) throw CLI::ValidationError("sums needs --eps or --eps-range");
            return run_sums(sys, opt, eps_list, query_text, force_float && !force_exact, sink);
        }
        if (*laplace) {
            std::vector<Rational> eps_list;
            for (const std::string& text : laplace_eps_args)
                eps_list.push_back(parse_eps(text, err));
            if (!laplace_eps_range.empty())
                for (Rational& eps : expand_eps_range(laplace_eps_range))
                    eps_list.push_back(std::move(eps));
            return run_laplace(sys, opt, check, eps_list, samples, sink);
        }
        if (*verify) return run_verify(sys, opt, sink);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gls
