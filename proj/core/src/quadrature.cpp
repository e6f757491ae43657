#include "gal3/quadrature.hpp"

#include <cmath>

#include "gal3/errors.hpp"

namespace gal3 {

namespace {

struct SimpsonPanel {
    double a, b, fa, fm, fb, estimate;
};

SimpsonPanel make_panel(const std::function<double(double)>& f, double a, double b,
                        double fa, double fb) {
    SimpsonPanel p;
    p.a = a;
    p.b = b;
    p.fa = fa;
    p.fb = fb;
    p.fm = f(0.5 * (a + b));
    p.estimate = (b - a) / 6.0 * (fa + 4.0 * p.fm + fb);
    return p;
}

double refine(const std::function<double(double)>& f, const SimpsonPanel& p, double tol,
              long& budget) {
    if (--budget < 0)
        throw QuadratureError("adaptive quadrature exceeded the subdivision cap before "
                              "reaching the requested tolerance");
    const double m = 0.5 * (p.a + p.b);
    const SimpsonPanel left = make_panel(f, p.a, m, p.fa, p.fm);
    const SimpsonPanel right = make_panel(f, m, p.b, p.fm, p.fb);
    const double halves = left.estimate + right.estimate;
    const double err = halves - p.estimate;
    if (std::abs(err) <= 15.0 * tol) return halves + err / 15.0;
    return refine(f, left, 0.5 * tol, budget) + refine(f, right, 0.5 * tol, budget);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol) {
    if (!(abs_tol > 0.0)) throw ValidationError("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    if (b < a) return -adaptive_simpson(f, b, a, abs_tol);
    long budget = kQuadratureMaxIntervals;
    const SimpsonPanel whole = make_panel(f, a, b, f(a), f(b));
    return refine(f, whole, abs_tol, budget);
}

} // namespace gal3
