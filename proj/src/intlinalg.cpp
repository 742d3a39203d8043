#include "hakenlab/intlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hakenlab {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[size_t(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[size_t(i)][size_t(j)];
    }
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols_; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMat z(x.rows_, x.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int j = 0; j < x.cols_; ++j) z.at(i, j) = x.at(i, j) + y.at(i, j);
    return z;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMat z(x.rows_, x.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int j = 0; j < x.cols_; ++j) z.at(i, j) = x.at(i, j) - y.at(i, j);
    return z;
}

bool IntMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

IntMat IntMat::pow(int e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    IntMat acc = identity(rows_);
    IntMat base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntMat IntMat::hcat(const IntMat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hcat shape mismatch");
    IntMat z(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) z.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols_; ++j) z.at(i, cols_ + j) = other.at(i, j);
    }
    return z;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

mpz_class AbelianGroupInv::order() const {
    if (free_rank > 0) return 0;
    mpz_class o = 1;
    for (const auto& d : factors) o *= d;
    return o;
}

int AbelianGroupInv::dim_mod(const mpz_class& q) const {
    int dim = free_rank;
    for (const auto& d : factors)
        if (d % q == 0) ++dim;
    return dim;
}

std::vector<mpz_class> AbelianGroupInv::primary_part(const mpz_class& p) const {
    std::vector<mpz_class> out;
    for (const auto& d : factors) {
        mpz_class q = 1, rest = d;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        if (q > 1) out.push_back(q);
    }
    return out;
}

std::string AbelianGroupInv::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

struct PivotLoc {
    int i = -1, j = -1;
};

PivotLoc smallest_nonzero(const IntMat& m, int from) {
    PivotLoc best;
    mpz_class best_abs;
    for (int i = from; i < m.rows(); ++i)
        for (int j = from; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            mpz_class a = abs(m.at(i, j));
            if (best.i < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

void swap_rows(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m.cols(); ++k) swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m.rows(); ++k) swap(m.at(k, i), m.at(k, j));
}

void add_row(IntMat& m, int dst, int src, const mpz_class& f) {
    for (int k = 0; k < m.cols(); ++k) m.at(dst, k) += f * m.at(src, k);
}

void add_col(IntMat& m, int dst, int src, const mpz_class& f) {
    for (int k = 0; k < m.rows(); ++k) m.at(k, dst) += f * m.at(k, src);
}

void negate_row(IntMat& m, int i) {
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

}  // namespace

SmithForm smith_form(const IntMat& a) {
    SmithForm s{a, IntMat::identity(a.rows()), IntMat::identity(a.cols()), 0};
    IntMat& d = s.d;
    int n = std::min(a.rows(), a.cols());

    for (int t = 0; t < n; ++t) {
        for (;;) {
            PivotLoc p = smallest_nonzero(d, t);
            if (p.i < 0) break;  // lower-right block is zero
            swap_rows(d, t, p.i);
            swap_rows(s.u, t, p.i);
            swap_cols(d, t, p.j);
            swap_cols(s.v, t, p.j);

            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t);  // truncated division
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(s.u, i, t, -q);
                }
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(s.v, j, t, -q);
                }
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders left, re-pick the pivot

            // Pivot divides the rest of its row/column; enforce divisibility
            // into the remaining block.
            bool divides_all = true;
            for (int i = t + 1; i < d.rows() && divides_all; ++i)
                for (int j = t + 1; j < d.cols() && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(s.u, t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d.at(t, t) == 0) break;
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(s.u, t);
        }
        ++s.rank;
    }
    return s;
}

AbelianGroupInv smith(const IntMat& a) {
    if (a.rows() == 0) return AbelianGroupInv{};
    if (a.cols() == 0) return AbelianGroupInv{a.rows(), {}};
    SmithForm s = smith_form(a);
    AbelianGroupInv inv;
    inv.free_rank = a.rows() - s.rank;
    for (int t = 0; t < s.rank; ++t)
        if (s.d.at(t, t) > 1) inv.factors.push_back(s.d.at(t, t));
    return inv;
}

mpz_class det(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_i = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_i = i;
                    break;
                }
            if (swap_i < 0) return 0;
            swap_rows(m, k, swap_i);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMat kernel_basis(const IntMat& a) {
    SmithForm s = smith_form(a);
    // a v = u^{-1} d; kernel is spanned by the columns of v past the rank.
    int free_cols = a.cols() - s.rank;
    IntMat k(a.cols(), free_cols);
    for (int j = 0; j < free_cols; ++j)
        for (int i = 0; i < a.cols(); ++i) k.at(i, j) = s.v.at(i, s.rank + j);
    return k;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMat& a,
                                                    const std::vector<mpz_class>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_integer shape mismatch");
    SmithForm s = smith_form(a);
    std::vector<mpz_class> ub(static_cast<size_t>(a.rows()), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) ub[size_t(i)] += s.u.at(i, j) * b[size_t(j)];
    std::vector<mpz_class> y(static_cast<size_t>(a.cols()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[size_t(i)] % s.d.at(i, i) != 0) return std::nullopt;
            y[size_t(i)] = ub[size_t(i)] / s.d.at(i, i);
        } else if (ub[size_t(i)] != 0) {
            return std::nullopt;
        }
    }
    std::vector<mpz_class> x(static_cast<size_t>(a.cols()), 0);
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j) x[size_t(i)] += s.v.at(i, j) * y[size_t(j)];
    return x;
}

bool columns_in_lattice(const IntMat& a, const IntMat& x) {
    if (a.rows() != x.rows()) throw std::invalid_argument("lattice membership shape mismatch");
    for (int j = 0; j < x.cols(); ++j) {
        std::vector<mpz_class> col(static_cast<size_t>(x.rows()));
        for (int i = 0; i < x.rows(); ++i) col[size_t(i)] = x.at(i, j);
        if (!solve_integer(a, col)) return false;
    }
    return true;
}

IntMat column_lattice_basis(const IntMat& a) {
    // Column-style Hermite reduction; returns the nonzero columns.
    IntMat m = a;
    int rows = m.rows(), cols = m.cols();
    int pivot_col = 0;
    for (int row = 0; row < rows && pivot_col < cols; ++row) {
        // Reduce row entries across columns >= pivot_col by gcd steps.
        for (;;) {
            int jmin = -1;
            mpz_class best;
            for (int j = pivot_col; j < cols; ++j) {
                if (m.at(row, j) == 0) continue;
                mpz_class v = abs(m.at(row, j));
                if (jmin < 0 || v < best) {
                    jmin = j;
                    best = v;
                }
            }
            if (jmin < 0) break;  // row all zero from pivot_col on
            swap_cols(m, pivot_col, jmin);
            bool done = true;
            for (int j = pivot_col + 1; j < cols; ++j) {
                if (m.at(row, j) == 0) continue;
                mpz_class q = m.at(row, j) / m.at(row, pivot_col);
                if (q != 0) add_col(m, j, pivot_col, -q);
                if (m.at(row, j) != 0) done = false;
            }
            if (done) {
                if (m.at(row, pivot_col) < 0)
                    for (int i = 0; i < rows; ++i) m.at(i, pivot_col) = -m.at(i, pivot_col);
                ++pivot_col;
                break;
            }
        }
    }
    IntMat out(rows, pivot_col);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < pivot_col; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IntMat preimage_lattice(const IntMat& a, const IntMat& m) {
    if (a.rows() != m.rows() || a.rows() != a.cols())
        throw std::invalid_argument("preimage_lattice expects square a matching m");
    // {y : a y = m x for some x}: kernel of [a | -m], projected to y.
    IntMat aug = a.hcat(m);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) aug.at(i, a.cols() + j) = -aug.at(i, a.cols() + j);
    IntMat ker = kernel_basis(aug);
    IntMat proj(a.cols(), ker.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) proj.at(i, j) = ker.at(i, j);
    IntMat basis = column_lattice_basis(proj);
    if (basis.cols() != a.cols())
        throw std::logic_error("preimage lattice is not full rank; cokernel not finite?");
    return basis;
}

IntMat in_basis(const IntMat& b, const IntMat& x) {
    IntMat out(b.cols(), x.cols());
    for (int j = 0; j < x.cols(); ++j) {
        std::vector<mpz_class> col(static_cast<size_t>(x.rows()));
        for (int i = 0; i < x.rows(); ++i) col[size_t(i)] = x.at(i, j);
        auto sol = solve_integer(b, col);
        if (!sol) throw std::logic_error("column not inside the given lattice basis");
        for (int i = 0; i < b.cols(); ++i) out.at(i, j) = (*sol)[size_t(i)];
    }
    return out;
}

}  // namespace hakenlab
