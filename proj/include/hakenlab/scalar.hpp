#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "hakenlab/errors.hpp"

namespace hakenlab {

/// Exact element of an ordered field: either a rational, or a + b*sqrt(d)
/// in a real quadratic extension.  The radicand travels with the value;
/// operands with distinct nonzero radicands are rejected, so every
/// computation stays inside one extension of the rationals.
///
/// All values are immutable in spirit: operations return fresh scalars and
/// keep the canonical form (reduced fractions, positive denominators,
/// b == 0 iff d == 0, d never a perfect square).
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}  // NOLINT: implicit by design
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : a_(q), b_(0), d_(0) { a_.canonicalize(); }
    Scalar(const mpq_class& a, const mpq_class& b, const mpz_class& d);

    static Scalar sqrt_of(const mpz_class& d) { return Scalar(mpq_class(0), mpq_class(1), d); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    const mpz_class& radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    /// Exact sign in the real embedding with sqrt(d) > 0.
    int sign() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_, unchecked_tag{}); }
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;

    /// Exact square root within this value's own field, if one exists.
    std::optional<Scalar> sqrt_in_field() const;

    /// Text format: "p", "p/q", or "p/q+r/s*sqrt(d)" (also "...-r/s*sqrt(d)").
    std::string str() const;
    static Scalar parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    struct unchecked_tag {};
    Scalar(mpq_class a, mpq_class b, mpz_class d, unchecked_tag)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_ == 0) d_ = 0;
    }

    static const mpz_class& merge_radicand(const Scalar& x, const Scalar& y);

    mpq_class a_;   // rational part
    mpq_class b_;   // coefficient of sqrt(d); zero for plain rationals
    mpz_class d_;   // radicand, 0 when rational
};

/// Strips square factors: returns (f, k) with n = f^2 * k, k square-free.
/// Trial division up to 10^5 plus a perfect-square test on the remainder,
/// which is complete for |n| < 10^15 at desk scale.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n);

/// Writes a nonnegative rational as (f, k) with q = f^2 * k, k a square-free
/// integer divided by nothing: sqrt(q) = f * sqrt(k).
std::pair<mpq_class, mpz_class> squarefree_decompose(const mpq_class& q);

bool is_rational_square(const mpq_class& q);
mpq_class rational_sqrt(const mpq_class& q);  // pre: is_rational_square(q)

/// Exact square root of s inside Q(sqrt(ambient_d)) (ambient_d == 0 means Q).
/// A rational s does not remember the ambient field, so the caller supplies it.
std::optional<Scalar> sqrt_in_extension(const Scalar& s, const mpz_class& ambient_d);

}  // namespace hakenlab
