#include "hakenlab/numeric.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hakenlab {

Mat2d Mat2d::from_exact(const Mat2& m) {
    return Mat2d{{m.a().to_double(), m.b().to_double(), m.c().to_double(), m.d().to_double()}};
}

Mat2d Mat2d::rotation(double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return Mat2d{{c, -s, s, c}};
}

Mat2d Mat2d::inverse() const {
    double dt = det();
    return Mat2d{{e[3] / dt, -e[1] / dt, -e[2] / dt, e[0] / dt}};
}

Mat2d operator*(const Mat2d& x, const Mat2d& y) {
    return Mat2d{{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                  x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

Mat2d operator-(const Mat2d& x, const Mat2d& y) {
    return Mat2d{{x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]}};
}

double Mat2d::max_abs() const {
    double m = 0;
    for (double v : e) m = std::max(m, std::fabs(v));
    return m;
}

Mat2d hyperbolic_power(const Mat2d& s, double t) {
    double tr = s.trace();
    if (tr <= 2.0) throw NotHyperbolic("hyperbolic_power needs tr > 2");
    double root = std::sqrt(tr * tr - 4.0);
    double lp = (tr + root) / 2.0;  // lambda_+ > 1, lambda_- = 1/lambda_+
    double lm = (tr - root) / 2.0;
    // Spectral projectors: P+ = (s - lm I)/(lp - lm), P- = I - P+.
    double denom = lp - lm;
    Mat2d pp{{(s.e[0] - lm) / denom, s.e[1] / denom, s.e[2] / denom, (s.e[3] - lm) / denom}};
    double wp = std::pow(lp, t), wm = std::pow(lm, t);
    Mat2d out;
    for (int i = 0; i < 4; ++i) {
        double id = (i == 0 || i == 3) ? 1.0 : 0.0;
        out.e[size_t(i)] = wp * pp.e[size_t(i)] + wm * (id - pp.e[size_t(i)]);
    }
    return out;
}

FlowReport twist_flow_numeric(const SurfaceTuple& t, int kappa, double time) {
    if (kappa < 1 || kappa >= t.genus())
        throw std::invalid_argument("flow needs 1 <= kappa < genus");
    Mat2d gamma = Mat2d::from_exact(t.partial_product(kappa));
    double tr = gamma.trace();
    if (std::fabs(tr) <= 2.0)
        throw NotHyperbolic("separating curve is not hyperbolic numerically");
    if (tr < 0)
        for (auto& v : gamma.e) v = -v;  // same PSL class, positive trace branch

    Mat2d flow = hyperbolic_power(gamma, -time);
    Mat2d flow_inv = hyperbolic_power(gamma, time);

    FlowReport rep;
    rep.flowed.reserve(size_t(t.genus()));
    for (int i = 0; i < t.genus(); ++i) {
        Mat2d x = Mat2d::from_exact(t.pairs()[size_t(i)].first);
        Mat2d y = Mat2d::from_exact(t.pairs()[size_t(i)].second);
        if (i >= kappa) {
            x = flow * x * flow_inv;
            y = flow * y * flow_inv;
        }
        rep.flowed.emplace_back(x, y);
        rep.generator_traces.push_back(x.trace());
        rep.generator_traces.push_back(y.trace());
    }

    Mat2d prod = Mat2d::identity();
    for (auto& [x, y] : rep.flowed) prod = prod * x * y * x.inverse() * y.inverse();
    Mat2d id = Mat2d::identity();
    Mat2d minus_id{{-1, 0, 0, -1}};
    rep.relation_residual = std::min((prod - id).max_abs(), (prod - minus_id).max_abs());

    Mat2d gamma_t = Mat2d::identity();
    for (int i = 0; i < kappa; ++i) {
        auto& [x, y] = rep.flowed[size_t(i)];
        gamma_t = gamma_t * x * y * x.inverse() * y.inverse();
    }
    rep.trace_drift = std::fabs(gamma_t.trace() - Mat2d::from_exact(t.partial_product(kappa)).trace());
    return rep;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr double kPi = 3.1415926535897932384626433832795;

/// Lift of the circle action of g on P^1(R) in the double-angle coordinate
/// u (full turn = 2 pi).  The section pins lift(0) into (-pi, pi]; values
/// elsewhere follow from monotonicity: for s in [0, 2 pi),
/// lift(s) - lift(0) lies in [0, 2 pi), which determines the representative
/// uniquely.
class CircleLift {
public:
    explicit CircleLift(const Mat2d& g) : g_(g) {
        double r0 = raw(0.0);
        base_ = r0 - kTwoPi * std::ceil((r0 - kPi) / kTwoPi);
    }

    double operator()(double u) const {
        double m = std::floor(u / kTwoPi);
        double s = u - kTwoPi * m;
        double rs = raw(s) - base_;
        rs -= kTwoPi * std::floor(rs / kTwoPi);  // into [0, 2 pi)
        return kTwoPi * m + base_ + rs;
    }

private:
    double raw(double u) const {
        double phi = u / 2.0;
        double vx = std::cos(phi), vy = std::sin(phi);
        double wx = g_.e[0] * vx + g_.e[1] * vy;
        double wy = g_.e[2] * vx + g_.e[3] * vy;
        return 2.0 * std::atan2(wy, wx);
    }

    Mat2d g_;
    double base_ = 0.0;
};

double translation_estimate(const std::vector<Mat2d>& word, int iterations) {
    std::vector<CircleLift> lifts;
    lifts.reserve(word.size());
    for (const auto& g : word) lifts.emplace_back(g);
    double u = 0.0;
    for (int k = 0; k < iterations; ++k)
        for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) u = (*it)(u);
    return u / (kTwoPi * iterations);
}

}  // namespace

QuasimorphismReport rotation_quasimorphism_probe(const std::vector<Mat2d>& elements,
                                                 int defect_samples, unsigned long seed) {
    QuasimorphismReport rep{};
    const int n_hom = 32;
    const int iter_single = 1 << 15;

    rep.max_homogeneity_error = 0.0;
    for (const auto& g : elements) {
        double f = translation_estimate({g}, iter_single);
        rep.translation_numbers.push_back(f);
        std::vector<Mat2d> power(size_t(n_hom), g);
        double fn = translation_estimate(power, iter_single / n_hom);
        rep.max_homogeneity_error =
            std::max(rep.max_homogeneity_error, std::fabs(fn - n_hom * f) / n_hom);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, elements.empty() ? 0 : elements.size() - 1);
    const int iter_defect = 1 << 13;
    rep.max_defect = 0.0;
    rep.defect_pairs = elements.size() < 2 ? 0 : defect_samples;
    for (int s = 0; s < rep.defect_pairs; ++s) {
        const Mat2d& x = elements[pick(rng)];
        const Mat2d& y = elements[pick(rng)];
        double fx = translation_estimate({x}, iter_defect);
        double fy = translation_estimate({y}, iter_defect);
        double fxy = translation_estimate({x, y}, iter_defect);
        rep.max_defect = std::max(rep.max_defect, std::fabs(fxy - fx - fy));
    }
    return rep;
}

}  // namespace hakenlab
