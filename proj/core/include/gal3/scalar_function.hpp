#pragma once

#include <vector>

namespace gal3 {

/// One oscillatory term: cos_amp*cos(omega*x) + sin_amp*sin(omega*x).
struct TrigTerm {
    double cos_amp{0.0};
    double sin_amp{0.0};
    double omega{1.0};
};

/// A scalar function of one variable closed under differentiation and
/// argument shifts: a polynomial (ascending coefficients) plus a finite
/// sum of sinusoids. Curve coordinates, attachment angles, and field
/// coefficients all use this representation so derivatives of every order
/// are exact coefficient manipulations, never finite differences.
struct ScalarFunction {
    std::vector<double> poly;
    std::vector<TrigTerm> trig;
};

ScalarFunction sf_constant(double c);
ScalarFunction sf_poly(std::vector<double> ascending_coeffs);

double sf_eval(const ScalarFunction& f, double x);

ScalarFunction sf_derivative(const ScalarFunction& f);

/// g with g(x) = f(x - a).
ScalarFunction sf_shifted(const ScalarFunction& f, double a);

ScalarFunction sf_sum(const ScalarFunction& f, const ScalarFunction& g);
ScalarFunction sf_scaled(const ScalarFunction& f, double s);

/// Drops zero high-order coefficients and dead trig terms so structural
/// queries see through padding like y = [0, 0, 0].
ScalarFunction sf_trimmed(const ScalarFunction& f);

/// True when every coefficient is exactly zero. Line and planar detection
/// work off the representation, not off sampling.
bool sf_is_zero(const ScalarFunction& f);

} // namespace gal3
