#include "hakenlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace hakenlab {

namespace {

bool is_perfect_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
    if (n == 0) return {0, 0};
    mpz_class f = 1;
    mpz_class k = ::abs(n);
    for (long p = 2; p <= 100000 && mpz_class(p) * p <= k; p = (p == 2 ? 3 : p + 2)) {
        mpz_class p2 = mpz_class(p) * p;
        while (k % p2 == 0) {
            k /= p2;
            f *= p;
        }
    }
    if (is_perfect_square(k)) {
        f *= isqrt(k);
        k = 1;
    }
    if (n < 0) k = -k;
    return {f, k};
}

std::pair<mpq_class, mpz_class> squarefree_decompose(const mpq_class& q) {
    // q = p/r (canonical) -> sqrt(q) = sqrt(p*r)/r
    mpz_class pr = q.get_num() * q.get_den();
    auto [f, k] = squarefree_decompose(pr);
    mpq_class coeff(f, q.get_den());
    coeff.canonicalize();
    return {coeff, k};
}

bool is_rational_square(const mpq_class& q) {
    return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

mpq_class rational_sqrt(const mpq_class& q) {
    mpq_class r(isqrt(q.get_num()), isqrt(q.get_den()));
    r.canonicalize();
    return r;
}

Scalar::Scalar(long num, long den) : a_(num, den), b_(0), d_(0) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    a_.canonicalize();
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, const mpz_class& d) : a_(a), b_(b), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ <= 0)
        throw MixedRadicals("surd coefficient needs a positive radicand, got " +
                            d_.get_str());
    // Normalize the square part of the radicand so equal fields compare equal.
    auto [f, k] = squarefree_decompose(d_);
    if (k != d_) {
        b_ *= mpq_class(f);
        b_.canonicalize();
        d_ = k;
    }
    if (d_ == 1) {  // sqrt collapsed to a rational
        a_ += b_;
        b_ = 0;
        d_ = 0;
        a_.canonicalize();
    }
}

const mpz_class& Scalar::merge_radicand(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicals("cannot mix sqrt(" + x.d_.get_str() + ") with sqrt(" +
                        y.d_.get_str() + ")");
}

int Scalar::sign() const {
    int sa = sgn(a_);
    if (b_ == 0) return sa;
    int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d exactly.
    mpq_class lhs = a_ * a_;
    mpq_class rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for square-free d, kept for safety
    return c > 0 ? sa : sb;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (b_ == 0) {
        mpq_class inv = 1 / a_;
        return Scalar(std::move(inv), mpq_class(0), 0, unchecked_tag{});
    }
    // 1/(a + b s) = (a - b s) / (a^2 - b^2 d)
    mpq_class norm = a_ * a_ - b_ * b_ * d_;
    mpq_class na = a_ / norm;
    mpq_class nb = -b_ / norm;
    na.canonicalize();
    nb.canonicalize();
    return Scalar(std::move(na), std::move(nb), d_, unchecked_tag{});
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    const mpz_class& d = Scalar::merge_radicand(x, y);
    mpq_class a = x.a_ + y.a_;
    mpq_class b = x.b_ + y.b_;
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d, Scalar::unchecked_tag{});
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    const mpz_class& d = Scalar::merge_radicand(x, y);
    mpq_class a = x.a_ - y.a_;
    mpq_class b = x.b_ - y.b_;
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d, Scalar::unchecked_tag{});
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    const mpz_class& d = Scalar::merge_radicand(x, y);
    mpq_class a = x.a_ * y.a_ + x.b_ * y.b_ * d;
    mpq_class b = x.a_ * y.b_ + x.b_ * y.a_;
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d, Scalar::unchecked_tag{});
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

double Scalar::to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::optional<Scalar> Scalar::sqrt_in_field() const { return sqrt_in_extension(*this, d_); }

std::optional<Scalar> sqrt_in_extension(const Scalar& s, const mpz_class& ambient_d) {
    if (s.sign() < 0) return std::nullopt;
    if (s.radicand() != 0 && ambient_d != 0 && s.radicand() != ambient_d) return std::nullopt;
    if (s.is_rational()) {
        const mpq_class& a = s.rational_part();
        if (is_rational_square(a)) return Scalar(rational_sqrt(a));
        if (ambient_d > 0) {
            mpq_class scaled = a / ambient_d;
            scaled.canonicalize();
            if (is_rational_square(scaled))
                return Scalar(mpq_class(0), rational_sqrt(scaled), ambient_d);
        }
        return std::nullopt;
    }
    // Candidate root p + q*sqrt(d): p^2 + q^2 d = a, 2pq = b.
    // p^2 solves x^2 - a x + b^2 d / 4 = 0, so p^2 = (a +/- sqrt(a^2 - b^2 d)) / 2.
    const mpq_class& a = s.rational_part();
    const mpq_class& b = s.surd_part();
    const mpz_class& d = s.radicand();
    mpq_class disc = a * a - b * b * d;
    if (sgn(disc) < 0 || !is_rational_square(disc)) return std::nullopt;
    mpq_class root = rational_sqrt(disc);
    for (int pick = 0; pick < 2; ++pick) {
        mpq_class p2 = pick == 0 ? mpq_class(a + root) : mpq_class(a - root);
        p2 /= 2;
        p2.canonicalize();
        if (sgn(p2) < 0 || !is_rational_square(p2)) continue;
        mpq_class p = rational_sqrt(p2);
        for (int sgn_pick = 0; sgn_pick < 2; ++sgn_pick) {
            mpq_class ps = (sgn_pick == 0 ? p : mpq_class(-p));
            if (ps == 0) continue;
            mpq_class q = b / (2 * ps);
            q.canonicalize();
            Scalar cand(ps, q, d);
            if (cand * cand == s && cand.sign() >= 0) return cand;
        }
    }
    return std::nullopt;
}

namespace {

// Parsing of the scalar text format.  Grammar:
//   scalar := rational | rational sign rational '*sqrt(' int ')'
//             | sign? rational '*sqrt(' int ')'
//   rational := sign? digits ('/' digits)?
struct Cursor {
    const std::string& s;
    size_t i = 0;
    explicit Cursor(const std::string& str) : s(str) {}
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' in scalar text", 0,
                             static_cast<int>(i) + 1);
        ++i;
    }
    bool consume(const std::string& lit) {
        if (s.compare(i, lit.size(), lit) == 0) {
            i += lit.size();
            return true;
        }
        return false;
    }
};

mpq_class parse_rational(Cursor& c) {
    size_t start = c.i;
    if (c.peek() == '+' || c.peek() == '-') ++c.i;
    size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        ++c.i;
        ++digits;
    }
    if (digits == 0)
        throw ParseError("expected digits in scalar text", 0, static_cast<int>(c.i) + 1);
    std::string num = c.s.substr(start, c.i - start);
    if (num[0] == '+') num.erase(0, 1);  // mpq_set_str rejects a leading '+'
    std::string den = "1";
    if (c.peek() == '/') {
        ++c.i;
        size_t dstart = c.i;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
        if (c.i == dstart)
            throw ParseError("expected denominator digits", 0, static_cast<int>(c.i) + 1);
        den = c.s.substr(dstart, c.i - dstart);
    }
    mpq_class q(num + "/" + den);
    if (q.get_den() == 0) throw ParseError("zero denominator in scalar text");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c(text);
    while (c.peek() == ' ') ++c.i;
    mpq_class first = parse_rational(c);
    while (c.peek() == ' ') ++c.i;
    if (c.done()) return Scalar(first);
    if (c.consume("*sqrt(")) {
        mpq_class rad = parse_rational(c);
        c.expect(')');
        while (c.peek() == ' ') ++c.i;
        if (!c.done()) throw ParseError("trailing characters after sqrt term");
        if (rad.get_den() != 1 || rad <= 0)
            throw ParseError("radicand must be a positive integer");
        return Scalar(mpq_class(0), first, rad.get_num());
    }
    char op = c.peek();
    if (op != '+' && op != '-')
        throw ParseError("expected '+', '-' or '*sqrt(' in scalar text", 0,
                         static_cast<int>(c.i) + 1);
    mpq_class second = parse_rational(c);  // sign consumed as part of the rational
    if (!c.consume("*sqrt("))
        throw ParseError("expected '*sqrt(' after surd coefficient", 0,
                         static_cast<int>(c.i) + 1);
    mpq_class rad = parse_rational(c);
    c.expect(')');
    while (c.peek() == ' ') ++c.i;
    if (!c.done()) throw ParseError("trailing characters after sqrt term");
    if (rad.get_den() != 1 || rad <= 0) throw ParseError("radicand must be a positive integer");
    return Scalar(first, second, rad.get_num());
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << a_;
    if (b_ != 0) {
        if (sgn(b_) >= 0) os << "+";
        os << b_ << "*sqrt(" << d_ << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hakenlab
