#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hakenlab/errors.hpp"
#include "hakenlab/intlinalg.hpp"

namespace hakenlab {

/// Integer polynomial, coefficients by ascending degree, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(long v) { return IntPoly({mpz_class(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class operator()(const mpz_class& t) const;

    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.c_ == g.c_; }

    bool is_palindromic_up_to_sign() const;
    std::string str() const;  // "t^2 - t + 1"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// Resultant of two integer polynomials (Sylvester determinant).
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// Seifert matrix of a knot: square 2g x 2g with det(V - V^T) = 1, checked.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMat v);
    const IntMat& matrix() const { return v_; }
    int genus() const { return v_.rows() / 2; }

private:
    IntMat v_;
};

/// Alexander polynomial det(V - t V^T), normalized to positive leading
/// coefficient (constant 1 for the empty matrix).  Palindromic up to units,
/// |Delta(1)| = 1.
IntPoly alexander_poly(const SeifertMatrix& v);

/// Order of H_1 of the p-fold cyclic branched cover by Fox's formula:
/// |prod_{k=1}^{p-1} Delta(zeta_p^k)| as an exact resultant.  0 encodes
/// infinite homology.
mpz_class fox_order(const SeifertMatrix& v, int p);

}  // namespace hakenlab
