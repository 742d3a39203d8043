#include "hakenlab/alexander.hpp"

#include <sstream>

namespace hakenlab {

const mpz_class& IntPoly::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[size_t(k)];
}

mpz_class IntPoly::operator()(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<mpz_class> c(size_t(f.degree() + g.degree() + 1), 0);
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) c[size_t(i + j)] += f.coeff(i) * g.coeff(j);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<mpz_class> c(size_t(std::max(f.degree(), g.degree()) + 1), 0);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) c[size_t(i)] = f.coeff(i) - g.coeff(i);
    return IntPoly(std::move(c));
}

bool IntPoly::is_palindromic_up_to_sign() const {
    if (c_.empty()) return true;
    int n = degree();
    bool plus = true, minus = true;
    for (int i = 0; i <= n; ++i) {
        if (coeff(i) != coeff(n - i)) plus = false;
        if (coeff(i) != -coeff(n - i)) minus = false;
    }
    return plus || minus;
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = coeff(i);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return os.str();
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    IntMat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s.at(i, i + k) = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s.at(n + i, i + k) = g.coeff(n - k);
    return det(s);
}

SeifertMatrix::SeifertMatrix(IntMat v) : v_(std::move(v)) {
    if (v_.rows() != v_.cols()) throw NotAKnot("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw NotAKnot("Seifert matrix must have even size");
    mpz_class dv = det(v_ - v_.transpose());
    if (dv != 1)
        throw NotAKnot("det(V - V^T) = " + dv.get_str() + ", expected 1 for a knot");
}

IntPoly alexander_poly(const SeifertMatrix& v) {
    const IntMat& m = v.matrix();
    int n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    // Interpolate det(V - t V^T): degree <= n, so n + 1 sample points.
    IntMat vt = m.transpose();
    std::vector<mpz_class> xs, ys;
    for (int k = 0; k <= n; ++k) {
        mpz_class t = k;
        IntMat sample(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sample.at(i, j) = m.at(i, j) - t * vt.at(i, j);
        xs.emplace_back(t);
        ys.push_back(det(sample));
    }
    // Lagrange interpolation over the rationals.
    std::vector<mpq_class> coeffs(size_t(n + 1), 0);
    for (int k = 0; k <= n; ++k) {
        // Basis polynomial prod_{j != k} (t - x_j) / (x_k - x_j).
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * xs[size_t(j)];
            }
            basis = std::move(next);
            denom *= mpq_class(xs[size_t(k)] - xs[size_t(j)]);
        }
        mpq_class scale = mpq_class(ys[size_t(k)]) / denom;
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += basis[i] * scale;
    }
    std::vector<mpz_class> out(size_t(n + 1));
    for (int i = 0; i <= n; ++i) {
        coeffs[size_t(i)].canonicalize();
        if (coeffs[size_t(i)].get_den() != 1)
            throw std::logic_error("Alexander interpolation produced a non-integer");
        out[size_t(i)] = coeffs[size_t(i)].get_num();
    }
    IntPoly poly(std::move(out));
    if (!poly.is_zero() && poly.coeff(poly.degree()) < 0) {
        std::vector<mpz_class> neg;
        for (const auto& c : poly.coeffs()) neg.push_back(-c);
        poly = IntPoly(std::move(neg));
    }
    return poly;
}

mpz_class fox_order(const SeifertMatrix& v, int p) {
    if (p < 2) throw std::invalid_argument("fox_order needs p >= 2");
    IntPoly delta = alexander_poly(v);
    // nu_p = 1 + t + ... + t^{p-1}, monic: Res(nu_p, Delta) = prod Delta(zeta).
    std::vector<mpz_class> nu(size_t(p), 1);
    mpz_class r = resultant(IntPoly(std::move(nu)), delta);
    return abs(r);
}

}  // namespace hakenlab
