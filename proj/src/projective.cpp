#include "hakenlab/projective.hpp"

#include <sstream>

namespace hakenlab {

ProjPoint ProjPoint::from_homogeneous(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) {
        if (a.is_zero()) throw std::invalid_argument("homogeneous pair (0,0)");
        return infinity();
    }
    return ProjPoint(a / b);
}

ProjPoint ProjPoint::parse(const std::string& text) {
    std::string t = text;
    size_t first = t.find_first_not_of(' ');
    size_t last = t.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty projective point");
    t = t.substr(first, last - first + 1);
    if (t == "inf") return infinity();
    return ProjPoint(Scalar::parse(t));
}

Scalar det_pair(const ProjPoint& p, const ProjPoint& q) {
    // [[a_p, a_q], [b_p, b_q]] with canonical representatives.
    if (p.is_infinity() && q.is_infinity()) return Scalar(0);
    if (p.is_infinity()) return Scalar(1);
    if (q.is_infinity()) return Scalar(-1);
    return p.value() - q.value();
}

int psi(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) {
    Scalar dxy = det_pair(x, y);
    if (dxy.is_zero()) return 0;
    Scalar dyz = det_pair(y, z);
    if (dyz.is_zero()) return 0;
    Scalar dzx = det_pair(z, x);
    if (dzx.is_zero()) return 0;
    return dxy.sign() * dyz.sign() * dzx.sign();
}

Mat2::Mat2(Scalar a, Scalar b, Scalar c, Scalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    det_ = e_[0] * e_[3] - e_[1] * e_[2];
    if (det_.is_zero()) throw std::invalid_argument("singular 2x2 matrix");
}

bool Mat2::is_identity() const {
    return e_[0].is_one() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_one();
}

bool Mat2::is_scalar() const {
    return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3];
}

Mat2 Mat2::inverse() const {
    Scalar inv_det = det_.inverse();
    return Mat2(e_[3] * inv_det, -e_[1] * inv_det, -e_[2] * inv_det, e_[0] * inv_det);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
}

bool Mat2::projectively_equal(const Mat2& other) const {
    const Scalar* lambda = nullptr;
    Scalar ratio;
    for (int i = 0; i < 4; ++i) {
        if (!other.e_[i].is_zero()) {
            ratio = e_[i] / other.e_[i];
            lambda = &ratio;
            break;
        }
    }
    if (lambda == nullptr || lambda->is_zero()) return false;
    for (int i = 0; i < 4; ++i)
        if (e_[i] != other.e_[i] * *lambda) return false;
    return true;
}

mpz_class Mat2::radicand() const {
    for (const auto& s : e_)
        if (s.radicand() != 0) return s.radicand();
    return 0;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << e_[0] << ", " << e_[1] << "], [" << e_[2] << ", " << e_[3] << "]]";
    return os.str();
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y * x.inverse() * y.inverse(); }

ProjPoint moebius_apply(const Mat2& g, const ProjPoint& x) {
    if (x.is_infinity()) return ProjPoint::from_homogeneous(g.a(), g.c());
    return ProjPoint::from_homogeneous(g.a() * x.value() + g.b(), g.c() * x.value() + g.d());
}

FixedPoints fixed_points(const Mat2& g, bool extend) {
    if (g.is_scalar()) throw std::invalid_argument("fixed points of a scalar matrix");
    // Finite fixed points solve c x^2 + (d - a) x - b = 0.
    const Scalar& a = g.a();
    const Scalar& b = g.b();
    const Scalar& c = g.c();
    const Scalar& d = g.d();

    Scalar disc = g.trace() * g.trace() - Scalar(4) * g.det();
    int dsign = disc.sign();
    IsomClass cls = dsign > 0   ? IsomClass::Hyperbolic
                    : dsign == 0 ? IsomClass::Parabolic
                                 : IsomClass::Elliptic;

    FixedPoints out{cls, {}};
    if (dsign < 0) return out;

    if (c.is_zero()) {
        // Upper triangular: infinity is fixed.
        out.points.push_back(ProjPoint::infinity());
        if (a != d) out.points.push_back(ProjPoint(b / (d - a)));
        return out;
    }
    if (dsign == 0) {
        out.points.push_back(ProjPoint((a - d) / (Scalar(2) * c)));
        return out;
    }
    mpz_class ambient = g.radicand();
    auto root = sqrt_in_extension(disc, ambient);
    if (!root) {
        if (!disc.is_rational())
            throw IrrationalSpectrum(
                "fixed points need a radical outside the active extension");
        auto [coeff, kernel] = squarefree_decompose(disc.rational_part());
        if (ambient != 0)
            throw IrrationalSpectrum("fixed points need sqrt(" + kernel.get_str() +
                                         ") but sqrt(" + ambient.get_str() + ") is active",
                                     kernel.get_str());
        if (!extend)
            throw IrrationalSpectrum(
                "fixed points need the extension Q(sqrt(" + kernel.get_str() + "))",
                kernel.get_str());
        root = Scalar(mpq_class(0), coeff, kernel);
    }
    Scalar two_c = Scalar(2) * c;
    out.points.push_back(ProjPoint((a - d + *root) / two_c));
    out.points.push_back(ProjPoint((a - d - *root) / two_c));
    return out;
}

Mat2 reflection_in_eigenbasis(const Mat2& h, bool extend) {
    FixedPoints fp = fixed_points(h, extend);
    if (fp.cls != IsomClass::Hyperbolic)
        throw NotHyperbolic("matrix is not hyperbolic: " + h.str());
    // Eigenvector columns from the fixed points; E diag(1,-1) E^{-1}.
    const ProjPoint& p1 = fp.points[0];
    const ProjPoint& p2 = fp.points[1];
    Mat2 basis(p1.coord_a(), p2.coord_a(), p1.coord_b(), p2.coord_b());
    Mat2 flip(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
    return basis * flip * basis.inverse();
}

}  // namespace hakenlab
