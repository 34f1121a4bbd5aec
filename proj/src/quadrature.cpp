#include "trapmeasure/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace trapmeasure {

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

void refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth, QuadratureResult& out) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol) out.converged = false;
        out.value += left + right + delta / 15.0;
        out.error_estimate += std::abs(delta) / 15.0;
        return;
    }
    refine(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, out);
    refine(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  int max_depth) {
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_simpson needs a positive tolerance");
    QuadratureResult out;
    if (a == b) return out;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    refine(f, {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tol, max_depth, out);
    return out;
}

}  // namespace trapmeasure
