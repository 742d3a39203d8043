#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hakenlab/euler.hpp"

namespace hakenlab {

/// Double-precision 2x2 matrix for the two inexact probes.
struct Mat2d {
    std::array<double, 4> e{1, 0, 0, 1};  // row-major

    static Mat2d identity() { return Mat2d{}; }
    static Mat2d from_exact(const Mat2& m);
    static Mat2d rotation(double angle);  // [[cos, -sin], [sin, cos]]

    double a() const { return e[0]; }
    double b() const { return e[1]; }
    double c() const { return e[2]; }
    double d() const { return e[3]; }
    double trace() const { return e[0] + e[3]; }
    double det() const { return e[0] * e[3] - e[1] * e[2]; }

    Mat2d inverse() const;
    friend Mat2d operator*(const Mat2d& x, const Mat2d& y);
    friend Mat2d operator-(const Mat2d& x, const Mat2d& y);
    double max_abs() const;
};

/// exp(t A) for the sl_2 logarithm A of the hyperbolic s (tr s > 2).
Mat2d hyperbolic_power(const Mat2d& s, double t);

struct FlowReport {
    double relation_residual;  // || prod [x_i^t, y_i^t] -+ I ||_inf, best sign
    double trace_drift;        // | tr gamma^t - tr gamma |
    std::vector<double> generator_traces;
    std::vector<std::pair<Mat2d, Mat2d>> flowed;
};

/// Trace flow along the separating curve gamma = I_kappa: conjugates the
/// generators after index kappa by exp(-tA), A = log(+/- gamma).  The only
/// inexact path in the library; reports how well the relation survives.
FlowReport twist_flow_numeric(const SurfaceTuple& t, int kappa, double time);

struct QuasimorphismReport {
    std::vector<double> translation_numbers;  // one per input element, in turns
    double max_homogeneity_error;             // max |f(x^n) - n f(x)| / n, n = 32
    double max_defect;                        // max |f(xy) - f(x) - f(y)| over pairs
    int defect_pairs;
};

/// Estimates homogeneous translation numbers of lifts of the circle action
/// of PSL_2(R) elements (full turn = 1; a rotation about i by angle theta
/// scores theta / 2 pi, hyperbolics score 0).  Reports the homogeneity error
/// at n = 32 and the defect over sampled pairs.  Best-effort numerics: the
/// iteration length bounds the estimator error by ~1/N per evaluation.
QuasimorphismReport rotation_quasimorphism_probe(const std::vector<Mat2d>& elements,
                                                 int defect_samples, unsigned long seed);

/// Calibrated ceiling for the observed defect: the exact quasimorphism has
/// defect 1; three estimator evaluations at N = 8192 add < 1e-3.
inline double quasimorphism_defect_bound() { return 1.0 + 1e-3; }

}  // namespace hakenlab
