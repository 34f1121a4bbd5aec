#include "cli.hpp"

#include "trapmeasure/cantor.hpp"
#include "trapmeasure/gasket.hpp"
#include "trapmeasure/permutation.hpp"
#include "trapmeasure/render.hpp"
#include "trapmeasure/search.hpp"
#include "trapmeasure/trapezoid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace trapmeasure::cli {

namespace {

using Json = nlohmann::ordered_json;
using Value = std::variant<std::string, std::int64_t, double, bool, Rational>;

struct Field {
    std::string name;
    Value value;
};

using Row = std::vector<Field>;

// What a subcommand produced before formatting.
struct Result {
    std::vector<Row> rows;
    bool single = false;       // JSON: emit rows[0] as the document
    Json extra = Json::object();  // JSON-only keys after "rows"
    std::vector<std::string> notes;  // CSV: written to stderr
    std::string text;          // --format text
    std::string raw;           // written verbatim (SVG)
    bool violation = false;
};

std::string short_decimal(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_cell(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return csv_escape(*s);
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return format_decimal(*d);
    return std::get<bool>(v) ? "true" : "false";
}

// Decimals go through the 15-digit text form so JSON and CSV agree.
Json json_decimal(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::stod(format_decimal(x));
}

std::string render_csv(const std::vector<Row>& rows) {
    std::string out;
    if (rows.empty()) return out;
    std::string header;
    for (const auto& f : rows.front()) {
        if (!header.empty()) header += ',';
        if (std::holds_alternative<Rational>(f.value))
            header += f.name + "_num," + f.name + "_den," + f.name + "_decimal";
        else
            header += f.name;
    }
    out += header + '\n';
    for (const auto& row : rows) {
        std::string line;
        for (const auto& f : row) {
            if (!line.empty()) line += ',';
            if (const auto* r = std::get_if<Rational>(&f.value))
                line += r->numerator().get_str() + ',' + r->denominator().get_str() + ',' + format_decimal(r->to_double());
            else
                line += csv_cell(f.value);
        }
        out += line + '\n';
    }
    return out;
}

Json row_json(const Row& row) {
    Json obj = Json::object();
    for (const auto& f : row) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Rational>)
                    obj[f.name] = v.to_string();
                else if constexpr (std::is_same_v<T, double>)
                    obj[f.name] = json_decimal(v);
                else
                    obj[f.name] = v;
            },
            f.value);
    }
    for (const auto& f : row)
        if (const auto* r = std::get_if<Rational>(&f.value)) obj[f.name + "_decimal"] = json_decimal(r->to_double());
    return obj;
}

std::string render_json(const Result& res) {
    Json doc;
    if (res.single) {
        doc = row_json(res.rows.front());
    } else {
        doc = Json::object();
        doc["rows"] = Json::array();
        for (const auto& row : res.rows) doc["rows"].push_back(row_json(row));
    }
    for (const auto& [key, value] : res.extra.items()) doc[key] = value;
    return doc.dump() + '\n';
}

Json rational_json(const Rational& r) { return r.to_string(); }

Json fit_json(const std::optional<DecayFit>& fit) {
    if (!fit) return nullptr;
    return Json{{"C", json_decimal(fit->C)}, {"p", json_decimal(fit->p)}, {"residual", json_decimal(fit->residual)}};
}

std::string fit_note(const std::string& label, const std::optional<DecayFit>& fit) {
    if (!fit) return label + ": none";
    return label + ": C=" + format_decimal(fit->C) + " p=" + format_decimal(fit->p) +
           " residual=" + format_decimal(fit->residual);
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

unsigned resolve_threads(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("TRAPMEASURE_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0' || v == 0 || v > 4096)
            throw std::invalid_argument(std::string("TRAPMEASURE_THREADS must be a positive integer, got '") + env + "'");
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

TrapezoidSpec trapezoid_from(std::size_t n, const std::string& perm) {
    Permutation sigma = parse_permutation(perm, n);
    if (n != 0 && sigma.size() != n)
        throw std::invalid_argument("--n " + std::to_string(n) + " does not match permutation of length " +
                                    std::to_string(sigma.size()));
    return TrapezoidSpec(std::move(sigma));
}

Row alpha_row(const AlphaRecord& rec) {
    return {{"n", as_int(rec.n)},
            {"alpha", rec.alpha},
            {"argmin", rec.argmin.to_string()},
            {"mode", std::string(to_string(rec.mode))},
            {"perms_evaluated", as_int(rec.perms_evaluated)}};
}

std::array<Rational, 3> parse_digits(const std::string& text) {
    std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto comma = text.find(',', start);
        if ((i < 2) == (comma == std::string::npos))
            throw std::invalid_argument("--digits expects three comma-separated rationals");
        out[i] = Rational::parse(std::string_view(text).substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write output file '" + path + "'");
    file << data;
    file.flush();
    if (!file) throw std::invalid_argument("cannot write output file '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact measures of parallelogram trapezoids, fractal slices and gasket projections", "trapmeasure"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format;
    std::string output;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "csv | json | text (default depends on the subcommand)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("-o,--output", output, "Write the result here instead of stdout");
    app.add_option("--threads", threads, "Worker threads (default: TRAPMEASURE_THREADS, else all cores)")
        ->check(CLI::Range(1, 1000000));
    app.add_option("--seed", seed, "Random seed for heuristic search")->capture_default_str();

    // area
    std::size_t area_n = 0;
    std::string area_perm;
    unsigned area_samples = 0;
    auto* area_cmd = app.add_subcommand("area", "Exact area of a trapezoid (default format: text)");
    area_cmd->add_option("--n", area_n, "Size; required for named permutations");
    area_cmd->add_option("--perm", area_perm, "1,3,2 | identity | reversal | composite | digit-swap:m")->required();
    area_cmd->add_option("--oracle", area_samples, "Also report the midpoint-sampled area with this many samples");

    // slice
    std::size_t slice_n = 0;
    std::string slice_perm;
    std::string slice_y;
    bool slice_profile_flag = false;
    auto* slice_cmd = app.add_subcommand("slice", "Horizontal slice at height y, or the full slice profile");
    slice_cmd->add_option("--n", slice_n, "Size; required for named permutations");
    slice_cmd->add_option("--perm", slice_perm, "Permutation")->required();
    auto* y_opt = slice_cmd->add_option("--y", slice_y, "Height in [0, 1], rational");
    auto* profile_opt = slice_cmd->add_flag("--profile", slice_profile_flag, "Emit profile breakpoints instead");
    y_opt->excludes(profile_opt);

    // alpha
    std::size_t alpha_n = 0;
    bool alpha_exh = false;
    bool alpha_heu = false;
    std::uint64_t alpha_budget = 10'000;
    bool alpha_no_sym = false;
    bool alpha_large = false;
    auto* alpha_cmd = app.add_subcommand("alpha", "Minimal area over Sym(n) (default format: json)");
    alpha_cmd->add_option("--n", alpha_n, "Size")->required()->check(CLI::Range(1, 1000000));
    auto* exh_flag = alpha_cmd->add_flag("--exhaustive", alpha_exh, "Enumerate Sym(n) (default for n <= 8)");
    auto* heu_flag = alpha_cmd->add_flag("--heuristic", alpha_heu, "Seeded local search (default for n > 8)");
    exh_flag->excludes(heu_flag);
    alpha_cmd->add_option("--budget", alpha_budget, "Distinct permutations for --heuristic")->capture_default_str();
    alpha_cmd->add_flag("--no-symmetry", alpha_no_sym, "Evaluate every permutation, not one per symmetry class");
    alpha_cmd->add_flag("--allow-large", alpha_large, "Permit exhaustive search above n = 10");

    // alpha-scan
    std::size_t scan_max = 8;
    std::size_t scan_limit = 8;
    std::uint64_t scan_budget = 10'000;
    bool scan_no_sym = false;
    auto* scan_cmd = app.add_subcommand("alpha-scan", "alpha(n) for n = 1..max-n with a monotonicity report");
    scan_cmd->add_option("--max-n", scan_max, "Largest n")->capture_default_str();
    scan_cmd->add_option("--exhaustive-limit", scan_limit, "Exhaustive up to this n, heuristic above")
        ->capture_default_str();
    scan_cmd->add_option("--budget", scan_budget, "Heuristic budget per n")->capture_default_str();
    scan_cmd->add_flag("--no-symmetry", scan_no_sym, "Disable symmetry pruning");

    // sigma3
    unsigned sigma3_max = 6;
    auto* sigma3_cmd = app.add_subcommand("sigma3", "Areas of the digit-swap family n = 3^m and a power-law fit");
    sigma3_cmd->add_option("--max-m", sigma3_max, "Largest m")->capture_default_str()->check(CLI::Range(0u, 8u));

    // sigma-n
    std::size_t sigman_n = 0;
    auto* sigman_cmd = app.add_subcommand("sigma-n", "Composite construction for arbitrary n");
    sigman_cmd->add_option("--n", sigman_n, "Size")->required()->check(CLI::Range(1, 1000000));

    // cantor
    std::string cantor_t;
    std::string cantor_digits;
    unsigned cantor_depth = 8;
    auto* cantor_cmd = app.add_subcommand("cantor", "Partial measures of the three-digit Cantor set, with the closed form");
    auto* t_opt = cantor_cmd->add_option("--t", cantor_t, "Digit set {0, 1, t}; t >= 0 rational");
    auto* d_opt = cantor_cmd->add_option("--digits", cantor_digits, "Arbitrary digit set a,b,c in [0, 2]");
    t_opt->excludes(d_opt);
    cantor_cmd->add_option("--max-depth", cantor_depth, "Depths 0..max-depth")->capture_default_str();

    // slice-measure
    std::vector<std::string> sm_t;
    unsigned sm_depth = 6;
    auto* sm_cmd = app.add_subcommand("slice-measure", "Closed-form slice-set measure for t in [0, 1]");
    sm_cmd->add_option("--t", sm_t, "One or more t values")->required();
    sm_cmd->add_option("--depth", sm_depth, "Depth of the partial slice set shown alongside")->capture_default_str();

    // favard
    unsigned favard_depth = 6;
    unsigned favard_points = 1024;
    auto* favard_cmd = app.add_subcommand("favard", "Average projection length of the partial gasket");
    favard_cmd->add_option("--max-depth", favard_depth, "Depths 0..max-depth")->capture_default_str();
    favard_cmd->add_option("--points", favard_points, "Midpoint quadrature nodes on [0, pi)")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check an inequality or identity row by row (exit 3 on failure)");
    verify_cmd->require_subcommand(1, 1);
    verify_cmd->fallthrough();
    std::vector<unsigned> l1_depths{1, 2, 3, 4};
    unsigned l1_grid = 11;
    double l1_tol = 1e-9;
    auto* lemma1_cmd = verify_cmd->add_subcommand("lemma1", "Slice-set measure against scaled gasket projection");
    lemma1_cmd->add_option("--depth", l1_depths, "Depths")->capture_default_str();
    lemma1_cmd->add_option("--t-grid", l1_grid, "Number of equally spaced t in [0, 1]")
        ->capture_default_str()
        ->check(CLI::Range(2u, 1000u));
    lemma1_cmd->add_option("--tolerance", l1_tol, "Slack on the inequality")->capture_default_str();
    double l2_p = 0.5;
    std::vector<double> l2_n{5, 10, 20, 40};
    auto* lemma2_cmd = verify_cmd->add_subcommand("lemma2", "integral_0^n e^x x^-p dx against e^n n^-p");
    lemma2_cmd->add_option("--p", l2_p, "Exponent in (0, 1)")->capture_default_str();
    lemma2_cmd->add_option("--n", l2_n, "Upper limits")->capture_default_str();
    std::vector<std::size_t> ws_n{4};
    auto* ws_cmd = verify_cmd->add_subcommand("weighted-sum", "Composite area against the block-weighted sum");
    ws_cmd->add_option("--n", ws_n, "Sizes")->capture_default_str()->check(CLI::Range(1, 1000000));

    // render
    std::string render_what;
    std::size_t render_n = 0;
    std::string render_perm;
    unsigned render_depth = 3;
    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a trapezoid or a partial gasket");
    render_cmd->add_option("--what", render_what, "trapezoid | gasket")
        ->required()
        ->check(CLI::IsMember({"trapezoid", "gasket"}));
    render_cmd->add_option("--n", render_n, "Size; required for named permutations");
    render_cmd->add_option("--perm", render_perm, "Permutation (trapezoid)");
    render_cmd->add_option("--depth", render_depth, "Depth (gasket)")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : invalid_input;
    }

    try {
        Result res;
        std::string default_format = "csv";

        if (area_cmd->parsed()) {
            default_format = "text";
            const auto spec = trapezoid_from(area_n, area_perm);
            const Rational a = area(spec);
            Row row{{"n", as_int(spec.n())}, {"perm", spec.sigma().to_string()}, {"area", a}};
            res.text = a.to_string() + " ≈ " + short_decimal(a.to_double()) + '\n';
            if (area_samples > 0) {
                const double o = area_oracle(spec, area_samples);
                row.push_back({"oracle_samples", static_cast<std::int64_t>(area_samples)});
                row.push_back({"oracle", o});
                res.text += "oracle(" + std::to_string(area_samples) + ") ≈ " + short_decimal(o) + '\n';
            }
            res.rows.push_back(std::move(row));
            res.single = true;
        } else if (slice_cmd->parsed()) {
            const auto spec = trapezoid_from(slice_n, slice_perm);
            if (slice_profile_flag) {
                const auto profile = slice_profile(spec);
                for (const auto& bp : profile.breakpoints())
                    res.rows.push_back({{"y", bp.y}, {"measure", bp.value}});
            } else {
                if (slice_y.empty()) throw std::invalid_argument("slice needs --y or --profile");
                const auto u = slice(spec, Rational::parse(slice_y));
                for (const auto& part : u.parts()) {
                    res.rows.push_back({{"lo", part.lo}, {"hi", part.hi}});
                    res.text += "[" + part.lo.to_string() + ", " + part.hi.to_string() + "]\n";
                }
                const Rational m = u.measure();
                res.extra["measure"] = rational_json(m);
                res.extra["measure_decimal"] = json_decimal(m.to_double());
                res.text += "measure " + m.to_string() + " ≈ " + short_decimal(m.to_double()) + '\n';
            }
        } else if (alpha_cmd->parsed()) {
            default_format = "json";
            const bool use_exhaustive = alpha_exh || (!alpha_heu && alpha_n <= 8);
            AlphaRecord rec = use_exhaustive
                                  ? alpha_exhaustive(alpha_n, {!alpha_no_sym, resolve_threads(threads), alpha_large})
                                  : alpha_heuristic(alpha_n, alpha_budget, seed);
            res.rows.push_back(alpha_row(rec));
            res.single = true;
        } else if (scan_cmd->parsed()) {
            ScanOptions opts;
            opts.exhaustive_limit = scan_limit;
            opts.heuristic_budget = scan_budget;
            opts.seed = seed;
            opts.workers = resolve_threads(threads);
            opts.use_symmetry = !scan_no_sym;
            const auto report = alpha_scan(scan_max, opts);
            for (const auto& rec : report.records) res.rows.push_back(alpha_row(rec));

            std::string violations;
            Json violations_json = Json::array();
            for (auto n : report.monotonicity_violations) {
                violations += (violations.empty() ? "" : ",") + std::to_string(n);
                violations_json.push_back(n);
            }
            res.notes.push_back("monotonicity_violations: " + (violations.empty() ? std::string("none") : violations));
            std::string scaled;
            Json scaled_json = Json::array();
            for (const auto& [n, v] : report.log_scaled) {
                scaled += ' ' + std::to_string(n) + ':' + format_decimal(v);
                scaled_json.push_back(Json{{"n", n}, {"alpha_log_n", json_decimal(v)}});
            }
            res.notes.push_back("alpha_log_n:" + scaled);
            std::string bound;
            Json bound_json = Json::array();
            for (const auto& [n, a] : report.composite_upper_bound) {
                bound += ' ' + std::to_string(n) + ':' + a.to_string();
                bound_json.push_back(
                    Json{{"n", n}, {"area", rational_json(a)}, {"area_decimal", json_decimal(a.to_double())}});
            }
            res.notes.push_back("composite_upper_bound:" + bound);
            res.notes.push_back(fit_note("upper_bound_fit", report.upper_bound_fit));
            res.extra["monotonicity_violations"] = violations_json;
            res.extra["alpha_log_n"] = scaled_json;
            res.extra["composite_upper_bound"] = bound_json;
            res.extra["upper_bound_fit"] = fit_json(report.upper_bound_fit);
        } else if (sigma3_cmd->parsed()) {
            std::vector<std::pair<double, double>> pairs;
            for (unsigned m = 0; m <= sigma3_max; ++m) {
                const auto sigma = digit_swap_perm(m);
                const Rational a = area(TrapezoidSpec(sigma));
                res.rows.push_back({{"m", static_cast<std::int64_t>(m)}, {"n", as_int(sigma.size())}, {"area", a}});
                if (m >= 1) pairs.emplace_back(m, a.to_double());
            }
            std::optional<DecayFit> fit;
            if (pairs.size() >= 3) fit = decay_fit(pairs);
            res.notes.push_back(fit_note("decay_fit", fit));
            res.extra["decay_fit"] = fit_json(fit);
        } else if (sigman_cmd->parsed()) {
            const auto plan = plan_composite(sigman_n);
            std::string base3;
            for (auto d : plan.digits) base3 += static_cast<char>('0' + d);
            const auto w = weighted_sum_identity(sigman_n);
            res.rows.push_back({{"n", as_int(sigman_n)},
                                {"base3", base3},
                                {"area", w.lhs},
                                {"weighted_sum", w.rhs},
                                {"equal", w.lhs == w.rhs}});
            Json blocks = Json::array();
            for (const auto& b : plan.blocks) {
                const Rational a = area(TrapezoidSpec(digit_swap_perm(b.order)));
                blocks.push_back(Json{{"size", b.size},
                                      {"count", b.count},
                                      {"order", b.order},
                                      {"area", rational_json(a)},
                                      {"area_decimal", json_decimal(a.to_double())}});
            }
            res.extra["blocks"] = blocks;
        } else if (cantor_cmd->parsed()) {
            std::optional<Rational> t;
            std::array<Rational, 3> digits{Rational(0), Rational(1), Rational(0)};
            if (!cantor_digits.empty()) {
                digits = parse_digits(cantor_digits);
            } else if (!cantor_t.empty()) {
                t = Rational::parse(cantor_t);
                digits[2] = *t;
            } else {
                throw std::invalid_argument("cantor needs --t or --digits");
            }
            const std::optional<Rational> closed = t ? std::optional(cantor_measure_closed(*t)) : std::nullopt;
            for (unsigned depth = 0; depth <= cantor_depth; ++depth) {
                const Rational partial = partial_cantor(DigitSetSpec(depth, digits)).measure();
                Row row{{"depth", static_cast<std::int64_t>(depth)}, {"partial", partial}};
                if (closed) {
                    row.push_back({"closed", *closed});
                    row.push_back({"excess", (partial - *closed).to_double()});
                }
                res.rows.push_back(std::move(row));
            }
        } else if (sm_cmd->parsed()) {
            for (const auto& text : sm_t) {
                const Rational t = Rational::parse(text);
                const Rational closed = slice_measure_closed(t);
                res.rows.push_back({{"t", t},
                                    {"depth", static_cast<std::int64_t>(sm_depth)},
                                    {"partial", slice_set(sm_depth, t).measure()},
                                    {"closed", closed}});
            }
        } else if (favard_cmd->parsed()) {
            const unsigned workers = resolve_threads(threads);
            for (unsigned depth = 0; depth <= favard_depth; ++depth)
                res.rows.push_back({{"depth", static_cast<std::int64_t>(depth)},
                                    {"points", static_cast<std::int64_t>(favard_points)},
                                    {"favard", favard(GasketSpec(depth), favard_points, workers)}});
        } else if (lemma1_cmd->parsed()) {
            std::vector<Rational> grid;
            for (unsigned i = 0; i < l1_grid; ++i)
                grid.emplace_back(static_cast<long>(i), static_cast<long>(l1_grid - 1));
            for (auto depth : l1_depths) {
                for (const auto& row : lemma1_check(depth, grid, l1_tol)) {
                    res.rows.push_back({{"depth", static_cast<std::int64_t>(row.depth)},
                                        {"t", row.t},
                                        {"lhs", row.lhs},
                                        {"rhs", row.rhs},
                                        {"ratio", row.ratio},
                                        {"ok", row.ok}});
                    res.violation = res.violation || !row.ok;
                }
            }
        } else if (lemma2_cmd->parsed()) {
            for (const auto& row : lemma2_check(l2_p, l2_n)) {
                res.rows.push_back({{"p", l2_p}, {"n", row.n}, {"integral", row.integral}, {"ratio", row.ratio},
                                    {"ok", row.ok}});
                res.violation = res.violation || !row.ok;
            }
        } else if (ws_cmd->parsed()) {
            for (auto n : ws_n) {
                const auto w = weighted_sum_identity(n);
                const bool equal = w.lhs == w.rhs;
                res.rows.push_back({{"n", as_int(n)}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"ok", equal}});
                res.violation = res.violation || !equal;
            }
        } else if (render_cmd->parsed()) {
            if (render_what == "trapezoid") {
                if (render_perm.empty()) throw std::invalid_argument("render --what trapezoid needs --perm");
                res.raw = render_trapezoid_svg(trapezoid_from(render_n, render_perm));
            } else {
                res.raw = render_gasket_svg(GasketSpec(render_depth));
            }
        }

        std::string data;
        if (!res.raw.empty()) {
            data = res.raw;
        } else {
            const std::string fmt = format.empty() ? default_format : format;
            if (fmt == "text") {
                if (res.text.empty()) throw std::invalid_argument("--format text is not available for this subcommand");
                data = res.text;
            } else if (fmt == "json") {
                data = render_json(res);
            } else {
                data = render_csv(res.rows);
                for (const auto& note : res.notes) err << note << '\n';
            }
        }
        write_output(output, data, out);
        return res.violation ? violation : ok;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_failure;
    }
}

}  // namespace trapmeasure::cli
