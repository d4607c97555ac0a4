#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

// Conformal parameters of the one-point-blow-up quasi-Einstein family.
struct LppParams {
    double b = 0.0;
    double c = 1.0;
    double d = 0.0;
    double m = 2.0;
};

// Constraint-system solution on the two-point blow-up.
struct Qe2Params {
    double a = 2.0;
    double b = 0.0;
    double c = 1.0;
    double d = 0.0;
    double mu = 0.0;
    double m = 2.0;
};

// Coefficient of the soliton vector field: the unique root c* of the
// strictly increasing h(c) = int_P (x1+x2) e^{c(x1+x2)} dx, returned with
// flipped sign.
double soliton_coefficient(const Polytope& p, int quad_order = 40);

// Kim-Kim constant consistent with (b, c, d): evaluated from the vertex
// condition at the t = -1 end of the trapezium.
double lpp_mu(double b, double c, double d);

// Solve for the trapezium conformal data at a = 1: c = sqrt(b^2+1),
// d = 1/(2(2b - c)), and b pinned by the first-integral constraint
// int_P (e^{-phi} - mu e^{(2/m-1)phi}) e^{4 sigma} dx = 0, which reduces to
// a 1-D integral over t in [-1, 1] with slice length (2 + t).
LppParams lpp_parameters(double m, int quad_order = 40);

// Residual of the LPP constraint integral at given parameters.
double lpp_constraint_residual(const LppParams& p, int quad_order = 40);

// Newton solve of the four-equation pentagon constraint system in
// (b, c, d, mu); the integral row uses the pentagon quadrature scheme.
Qe2Params qe2_parameters(double m, double a, int quad_order = 40);

// Residuals (e1, e2, e3, integral) of the system at given parameters.
std::array<double, 4> qe2_residuals(const Qe2Params& p, int quad_order = 40);

// Exact F''(t) of the Koiso-Cao soliton profile.
double kc_reference_fpp(double t);

// First k Taylor coefficients of F (F = k_1 t^2 + k_2 t^3 + ...), recovered
// from Richardson-extrapolated central differences of F'' at 0.
std::vector<double> kc_taylor(int k);

}  // namespace toric
