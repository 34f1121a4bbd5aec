#include "trapmeasure/cantor.hpp"
#include "trapmeasure/gasket.hpp"
#include "trapmeasure/permutation.hpp"
#include "trapmeasure/render.hpp"
#include "trapmeasure/search.hpp"
#include "trapmeasure/trapezoid.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
namespace tpm = trapmeasure;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. int is accepted on the way in.
template <>
struct type_caster<tpm::Rational> {
    PYBIND11_TYPE_CASTER(tpm::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        const auto fraction = module_::import("fractions").attr("Fraction");
        object f;
        if (isinstance<int_>(src) || isinstance(src, fraction))
            f = reinterpret_borrow<object>(src);
        else if (convert && isinstance<str>(src))
            f = fraction(src);
        else
            return false;
        const auto num = str(f.attr("numerator")).cast<std::string>();
        const auto den = str(f.attr("denominator")).cast<std::string>();
        value = tpm::Rational(mpz_class(num), mpz_class(den));
        return true;
    }

    static handle cast(const tpm::Rational& r, return_value_policy, handle) {
        const auto fraction = module_::import("fractions").attr("Fraction");
        object num = module_::import("builtins").attr("int")(r.numerator().get_str());
        object den = module_::import("builtins").attr("int")(r.denominator().get_str());
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

using PermArg = std::variant<std::vector<tpm::Index>, std::string>;

tpm::Permutation to_perm(const PermArg& arg, std::size_t n) {
    if (const auto* image = std::get_if<std::vector<tpm::Index>>(&arg)) return tpm::Permutation(*image);
    return tpm::parse_permutation(std::get<std::string>(arg), n);
}

tpm::TrapezoidSpec spec_of(const PermArg& arg, std::size_t n) {
    auto sigma = to_perm(arg, n);
    if (n != 0 && sigma.size() != n) throw std::invalid_argument("n does not match the permutation length");
    return tpm::TrapezoidSpec(std::move(sigma));
}

using Pairs = std::vector<std::pair<tpm::Rational, tpm::Rational>>;

Pairs parts_of(const tpm::IntervalUnion& u) {
    Pairs out;
    for (const auto& iv : u.parts()) out.emplace_back(iv.lo, iv.hi);
    return out;
}

py::dict record_dict(const tpm::AlphaRecord& rec) {
    py::dict d;
    d["n"] = rec.n;
    d["alpha"] = rec.alpha;
    d["argmin"] = rec.argmin.image();
    d["mode"] = std::string(tpm::to_string(rec.mode));
    d["perms_evaluated"] = rec.perms_evaluated;
    d["wall_time"] = rec.wall_time.count();
    return d;
}

py::object fit_object(const std::optional<tpm::DecayFit>& fit) {
    if (!fit) return py::none();
    py::dict d;
    d["C"] = fit->C;
    d["p"] = fit->p;
    d["residual"] = fit->residual;
    return std::move(d);
}

std::array<tpm::Rational, 3> digits_of(const std::vector<tpm::Rational>& digits) {
    if (digits.size() != 3) throw std::invalid_argument("exactly three digits are required");
    return {digits[0], digits[1], digits[2]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact trapezoid measures, fractal slice sets and gasket projections";

    m.def("permutation", [](const PermArg& perm, std::size_t n) { return to_perm(perm, n).image(); },
          py::arg("perm"), py::arg("n") = 0,
          "Image list of a permutation given as a list or as 'identity', 'reversal', 'composite', 'digit-swap:m'.");
    m.def("digit_swap_perm", [](unsigned order) { return tpm::digit_swap_perm(order).image(); }, py::arg("m"));
    m.def("composite_sigma", [](std::size_t n) { return tpm::composite_sigma(n).image(); }, py::arg("n"));
    m.def(
        "plan_composite",
        [](std::size_t n) {
            const auto plan = tpm::plan_composite(n);
            py::list blocks;
            for (const auto& b : plan.blocks) blocks.append(py::make_tuple(b.size, b.count, b.order));
            return py::make_tuple(plan.digits, blocks);
        },
        py::arg("n"), "(base-3 digits, [(size, count, order), ...]) largest block first.");
    m.def("canonical_class", [](const std::vector<tpm::Index>& image) {
        return tpm::canonical_class(tpm::Permutation(image)).image();
    });

    m.def("area", [](const PermArg& perm, std::size_t n) { return tpm::area(spec_of(perm, n)); }, py::arg("perm"),
          py::arg("n") = 0, "Exact area as a Fraction.");
    m.def("area_oracle",
          [](const PermArg& perm, unsigned samples, std::size_t n) { return tpm::area_oracle(spec_of(perm, n), samples); },
          py::arg("perm"), py::arg("samples") = 10'000, py::arg("n") = 0);
    m.def("slice", [](const PermArg& perm, const tpm::Rational& y, std::size_t n) {
        return parts_of(tpm::slice(spec_of(perm, n), y));
    }, py::arg("perm"), py::arg("y"), py::arg("n") = 0, "Merged slice intervals at height y.");
    m.def(
        "slice_profile",
        [](const PermArg& perm, std::size_t n) {
            Pairs out;
            const auto profile = tpm::slice_profile(spec_of(perm, n));
            for (const auto& bp : profile.breakpoints()) out.emplace_back(bp.y, bp.value);
            return out;
        },
        py::arg("perm"), py::arg("n") = 0);
    m.def(
        "weighted_sum_identity",
        [](std::size_t n) {
            const auto w = tpm::weighted_sum_identity(n);
            return py::make_tuple(w.lhs, w.rhs);
        },
        py::arg("n"));

    m.def(
        "alpha_exhaustive",
        [](std::size_t n, bool use_symmetry, unsigned workers, bool allow_large) {
            const auto rec = [&] {
                py::gil_scoped_release release;
                return tpm::alpha_exhaustive(n, {use_symmetry, workers, allow_large});
            }();
            return record_dict(rec);
        },
        py::arg("n"), py::arg("use_symmetry") = true, py::arg("workers") = 1, py::arg("allow_large") = false);
    m.def(
        "alpha_heuristic",
        [](std::size_t n, std::uint64_t budget, std::uint64_t seed) {
            return record_dict(tpm::alpha_heuristic(n, budget, seed));
        },
        py::arg("n"), py::arg("budget") = 10'000, py::arg("seed") = 1);
    m.def(
        "alpha_scan",
        [](std::size_t max_n, std::size_t exhaustive_limit, std::uint64_t budget, std::uint64_t seed, unsigned workers) {
            tpm::ScanOptions opts;
            opts.exhaustive_limit = exhaustive_limit;
            opts.heuristic_budget = budget;
            opts.seed = seed;
            opts.workers = workers;
            const auto report = tpm::alpha_scan(max_n, opts);
            py::list records;
            for (const auto& rec : report.records) records.append(record_dict(rec));
            py::dict d;
            d["records"] = records;
            d["monotonicity_violations"] = report.monotonicity_violations;
            d["log_scaled"] = report.log_scaled;
            d["composite_upper_bound"] = report.composite_upper_bound;
            d["upper_bound_fit"] = fit_object(report.upper_bound_fit);
            return d;
        },
        py::arg("max_n"), py::arg("exhaustive_limit") = 8, py::arg("budget") = 10'000, py::arg("seed") = 1,
        py::arg("workers") = 1);

    m.def("anchor_points", [](unsigned depth, const std::vector<tpm::Rational>& digits) {
        return tpm::anchor_points(tpm::DigitSetSpec(depth, digits_of(digits)));
    }, py::arg("depth"), py::arg("digits"));
    m.def("partial_cantor", [](unsigned depth, const std::vector<tpm::Rational>& digits) {
        return parts_of(tpm::partial_cantor(tpm::DigitSetSpec(depth, digits_of(digits))));
    }, py::arg("depth"), py::arg("digits"));
    m.def("partial_cantor_measure", [](unsigned depth, const std::vector<tpm::Rational>& digits) {
        return tpm::partial_cantor(tpm::DigitSetSpec(depth, digits_of(digits))).measure();
    }, py::arg("depth"), py::arg("digits"));
    m.def("slice_set", [](unsigned depth, const tpm::Rational& t) { return parts_of(tpm::slice_set(depth, t)); },
          py::arg("depth"), py::arg("t"));
    m.def("cantor_measure_closed", &tpm::cantor_measure_closed, py::arg("t"));
    m.def("slice_measure_closed", &tpm::slice_measure_closed, py::arg("t"));
    m.def(
        "digit_swap_real",
        [](const tpm::Rational& x, unsigned precision) {
            const auto r = tpm::digit_swap_real(x, precision);
            return py::make_tuple(r.value, r.boundary_case, r.image_digits);
        },
        py::arg("x"), py::arg("precision") = 24, "(value, boundary_case, image_digits)");

    m.def("gasket_anchors", [](unsigned depth) { return tpm::gasket_anchors(tpm::GasketSpec(depth)); },
          py::arg("depth"));
    m.def("projection_measure", [](unsigned depth, double angle) {
        return tpm::projection_measure(tpm::GasketSpec(depth), angle);
    }, py::arg("depth"), py::arg("angle"));
    m.def(
        "project_slope",
        [](unsigned depth, const tpm::Rational& slope) {
            const auto p = tpm::project(tpm::GasketSpec(depth), tpm::Direction::from_slope(slope));
            py::dict d;
            d["measure"] = p.measure;
            d["scaled"] = parts_of(*p.scaled);
            d["scaled_measure"] = *p.scaled_measure;
            d["scale_factor"] = p.scale_factor;
            return d;
        },
        py::arg("depth"), py::arg("slope"), "Exact projection along the direction with tan(theta) = slope.");
    m.def(
        "favard",
        [](unsigned depth, unsigned points, unsigned workers) {
            py::gil_scoped_release release;
            return tpm::favard(tpm::GasketSpec(depth), points, workers);
        },
        py::arg("depth"), py::arg("points") = 1024, py::arg("workers") = 1);
    m.def(
        "lemma1_check",
        [](unsigned depth, const std::vector<tpm::Rational>& grid, double tolerance) {
            py::list rows;
            for (const auto& row : tpm::lemma1_check(depth, grid, tolerance)) {
                py::dict d;
                d["depth"] = row.depth;
                d["t"] = row.t;
                d["lhs"] = row.lhs;
                d["rhs"] = row.rhs;
                d["ratio"] = row.ratio;
                d["ok"] = row.ok;
                rows.append(d);
            }
            return rows;
        },
        py::arg("depth"), py::arg("t_grid"), py::arg("tolerance") = 1e-9);
    m.def(
        "lemma2_check",
        [](double p, const std::vector<double>& ns) {
            py::list rows;
            for (const auto& row : tpm::lemma2_check(p, ns)) {
                py::dict d;
                d["n"] = row.n;
                d["integral"] = row.integral;
                d["ratio"] = row.ratio;
                d["ok"] = row.ok;
                rows.append(d);
            }
            return rows;
        },
        py::arg("p"), py::arg("n_values"));
    m.def("exp_power_integral", &tpm::exp_power_integral, py::arg("n"), py::arg("p"));
    m.def(
        "decay_fit",
        [](const std::vector<std::pair<double, double>>& pairs) { return fit_object(tpm::decay_fit(pairs)); },
        py::arg("pairs"), "Least-squares fit value ~ C * m^-p; returns {'C', 'p', 'residual'}.");

    m.def("render_trapezoid_svg", [](const PermArg& perm, std::size_t n) {
        return tpm::render_trapezoid_svg(spec_of(perm, n));
    }, py::arg("perm"), py::arg("n") = 0);
    m.def("render_gasket_svg", [](unsigned depth) { return tpm::render_gasket_svg(tpm::GasketSpec(depth)); },
          py::arg("depth"));
}
