#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hakenlab/scalar.hpp"

namespace hakenlab {

/// Point of P^1(K) in canonical chart form: a finite value [x : 1] or the
/// single point at infinity [1 : 0].
class ProjPoint {
public:
    ProjPoint() : value_(0), infinite_(false) {}
    explicit ProjPoint(Scalar v) : value_(std::move(v)), infinite_(false) {}
    static ProjPoint infinity() {
        ProjPoint p;
        p.infinite_ = true;
        p.value_ = Scalar(1);
        return p;
    }
    /// Canonicalizes homogeneous coordinates [a : b]; (0,0) is rejected.
    static ProjPoint from_homogeneous(const Scalar& a, const Scalar& b);

    bool is_infinity() const { return infinite_; }
    const Scalar& value() const { return value_; }  // pre: finite
    Scalar coord_a() const { return infinite_ ? Scalar(1) : value_; }
    Scalar coord_b() const { return infinite_ ? Scalar(0) : Scalar(1); }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        if (p.infinite_ != q.infinite_) return false;
        return p.infinite_ || p.value_ == q.value_;
    }
    friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }
    static ProjPoint parse(const std::string& text);

private:
    Scalar value_;
    bool infinite_;
};

/// det of the 2x2 matrix with columns the canonical representatives of p, q.
/// Antisymmetric; zero exactly when p == q.
Scalar det_pair(const ProjPoint& p, const ProjPoint& q);

/// Cyclic-order function on P^1(K): sign of det(x,y) det(y,z) det(z,x).
/// psi(0, 1, inf) = +1 fixes the orientation so the induced order on K is
/// the standard one.  Zero iff two arguments coincide; odd under
/// transpositions; cyclically invariant.
int psi(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z);

enum class IsomClass { Hyperbolic, Parabolic, Elliptic };

/// 2x2 invertible matrix over the scalar field, acting on P^1(K) by Moebius
/// transformations.  Determinant is cached at construction.
class Mat2 {
public:
    Mat2() : e_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, det_(1) {}
    Mat2(Scalar a, Scalar b, Scalar c, Scalar d);

    static Mat2 identity() { return Mat2(); }

    const Scalar& a() const { return e_[0]; }
    const Scalar& b() const { return e_[1]; }
    const Scalar& c() const { return e_[2]; }
    const Scalar& d() const { return e_[3]; }
    const Scalar& det() const { return det_; }
    Scalar trace() const { return e_[0] + e_[3]; }
    bool is_sl() const { return det_.is_one(); }
    bool is_identity() const;
    /// Scalar multiple of the identity (projectively trivial).
    bool is_scalar() const;

    Mat2 inverse() const;
    Mat2 transpose() const { return Mat2(e_[0], e_[2], e_[1], e_[3]); }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend Mat2 operator-(const Mat2& x) { return Mat2(-x.e_[0], -x.e_[1], -x.e_[2], -x.e_[3]); }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.e_[0] == y.e_[0] && x.e_[1] == y.e_[1] && x.e_[2] == y.e_[2] &&
               x.e_[3] == y.e_[3];
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    /// Equality in PGL_2: x = lambda y for some lambda != 0.
    bool projectively_equal(const Mat2& other) const;

    /// Radicand appearing in the entries (0 when all rational).
    mpz_class radicand() const;

    std::string str() const;

private:
    std::array<Scalar, 4> e_;  // row-major [[a, b], [c, d]]
    Scalar det_;
};

Mat2 commutator(const Mat2& x, const Mat2& y);

/// Moebius action g.[x : y].  Preserves psi when det g > 0, flips it when
/// det g < 0.
ProjPoint moebius_apply(const Mat2& g, const ProjPoint& x);

struct FixedPoints {
    IsomClass cls;
    std::vector<ProjPoint> points;  // 2 / 1 / 0 entries
};

/// Exact fixed points of g on P^1.  Classification matches |tr| vs 2 for
/// SL-flagged matrices.  When the points live in an inactive quadratic
/// extension, throws IrrationalSpectrum carrying the square-free radicand
/// the caller must adjoin; pass extend = true to adjoin it automatically
/// (only possible when the entries are rational).
FixedPoints fixed_points(const Mat2& g, bool extend = false);

/// Matrix with eigenvalues +1, -1 in the eigenbasis of the hyperbolic h;
/// commutes with h, squares to the identity, det = -1.
Mat2 reflection_in_eigenbasis(const Mat2& h, bool extend = true);

}  // namespace hakenlab
