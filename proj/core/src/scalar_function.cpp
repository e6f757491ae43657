#include "gal3/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace gal3 {

namespace {

// n choose k in double precision; exact for the small degrees used here.
double binom(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

} // namespace

ScalarFunction sf_constant(double c) {
    ScalarFunction f;
    if (c != 0.0) f.poly.push_back(c);
    return f;
}

ScalarFunction sf_poly(std::vector<double> ascending_coeffs) {
    ScalarFunction f;
    f.poly = std::move(ascending_coeffs);
    return sf_trimmed(f);
}

double sf_eval(const ScalarFunction& f, double x) {
    double p = 0.0;
    for (std::size_t i = f.poly.size(); i-- > 0;) p = p * x + f.poly[i];
    double t = 0.0;
    for (const auto& term : f.trig)
        t += term.cos_amp * std::cos(term.omega * x) + term.sin_amp * std::sin(term.omega * x);
    return p + t;
}

ScalarFunction sf_derivative(const ScalarFunction& f) {
    ScalarFunction d;
    if (f.poly.size() > 1) {
        d.poly.resize(f.poly.size() - 1);
        for (std::size_t i = 1; i < f.poly.size(); ++i) d.poly[i - 1] = f.poly[i] * double(i);
    }
    d.trig.reserve(f.trig.size());
    for (const auto& term : f.trig)
        d.trig.push_back({term.sin_amp * term.omega, -term.cos_amp * term.omega, term.omega});
    return sf_trimmed(d);
}

ScalarFunction sf_shifted(const ScalarFunction& f, double a) {
    ScalarFunction g;
    g.poly.assign(f.poly.size(), 0.0);
    for (std::size_t n = 0; n < f.poly.size(); ++n) {
        // (x - a)^n expanded into ascending powers of x.
        double pw = 1.0;
        for (std::size_t k = 0; k <= n; ++k) {
            g.poly[n - k] += f.poly[n] * binom(n, k) * pw;
            pw *= -a;
        }
    }
    g.trig.reserve(f.trig.size());
    for (const auto& term : f.trig) {
        const double c = std::cos(term.omega * a), s = std::sin(term.omega * a);
        g.trig.push_back({term.cos_amp * c - term.sin_amp * s,
                          term.cos_amp * s + term.sin_amp * c,
                          term.omega});
    }
    return sf_trimmed(g);
}

ScalarFunction sf_sum(const ScalarFunction& f, const ScalarFunction& g) {
    ScalarFunction h;
    h.poly.assign(std::max(f.poly.size(), g.poly.size()), 0.0);
    for (std::size_t i = 0; i < f.poly.size(); ++i) h.poly[i] += f.poly[i];
    for (std::size_t i = 0; i < g.poly.size(); ++i) h.poly[i] += g.poly[i];
    h.trig = f.trig;
    for (const auto& term : g.trig) {
        bool merged = false;
        for (auto& mine : h.trig) {
            if (mine.omega == term.omega) {
                mine.cos_amp += term.cos_amp;
                mine.sin_amp += term.sin_amp;
                merged = true;
                break;
            }
        }
        if (!merged) h.trig.push_back(term);
    }
    return sf_trimmed(h);
}

ScalarFunction sf_scaled(const ScalarFunction& f, double s) {
    ScalarFunction g = f;
    for (auto& c : g.poly) c *= s;
    for (auto& term : g.trig) {
        term.cos_amp *= s;
        term.sin_amp *= s;
    }
    return sf_trimmed(g);
}

ScalarFunction sf_trimmed(const ScalarFunction& f) {
    ScalarFunction g;
    g.poly = f.poly;
    while (!g.poly.empty() && g.poly.back() == 0.0) g.poly.pop_back();
    g.trig.reserve(f.trig.size());
    for (const auto& term : f.trig)
        if (term.cos_amp != 0.0 || term.sin_amp != 0.0) g.trig.push_back(term);
    return g;
}

bool sf_is_zero(const ScalarFunction& f) {
    for (double c : f.poly)
        if (c != 0.0) return false;
    for (const auto& term : f.trig)
        if (term.cos_amp != 0.0 || term.sin_amp != 0.0) return false;
    return true;
}

} // namespace gal3
