#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hakenlab {

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMat transpose() const;
    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend IntMat operator+(const IntMat& x, const IntMat& y);
    friend IntMat operator-(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    bool is_zero() const;
    IntMat pow(int e) const;  // pre: square

    /// Horizontal concatenation [this | other].
    IntMat hcat(const IntMat& other) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

/// Invariant-factor normal form of a finitely generated abelian group:
/// free rank plus the divisibility chain d_1 | d_2 | ... (each >= 2).
struct AbelianGroupInv {
    int free_rank = 0;
    std::vector<mpz_class> factors;

    bool is_trivial() const { return free_rank == 0 && factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order when finite; 0 encodes infinite.
    mpz_class order() const;
    /// dim over F_q: free rank plus the number of factors divisible by q.
    int dim_mod(const mpz_class& q) const;
    /// Invariant factors of the p-primary part (p-power parts of each factor).
    std::vector<mpz_class> primary_part(const mpz_class& p) const;
    std::string str() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
    bool operator==(const AbelianGroupInv& o) const {
        return free_rank == o.free_rank && factors == o.factors;
    }
};

struct SmithForm {
    IntMat d;  // diagonal, divisibility chain along the diagonal
    IntMat u;  // unimodular, u * a * v = d
    IntMat v;
    int rank = 0;
};

SmithForm smith_form(const IntMat& a);

/// Invariant factors of coker(a) acting on Z^rows: drops unit factors,
/// free rank = rows - rank.
AbelianGroupInv smith(const IntMat& a);

/// Exact determinant (pre: square) via fraction-free elimination.
mpz_class det(const IntMat& a);

/// Basis of the integer kernel lattice {x : a x = 0}, as matrix columns.
IntMat kernel_basis(const IntMat& a);

/// Solves a x = b over the integers; nullopt when no integral solution.
std::optional<std::vector<mpz_class>> solve_integer(const IntMat& a,
                                                    const std::vector<mpz_class>& b);

/// True when every column of x lies in the column lattice of a.
bool columns_in_lattice(const IntMat& a, const IntMat& x);

/// Column-style Hermite basis of the lattice spanned by the columns of a
/// (full-column-rank output, zero columns dropped).
IntMat column_lattice_basis(const IntMat& a);

/// Basis of the preimage lattice {y : a y in column-lattice(m)}.
/// Pre: coker(m) finite over Z^rows (m has full row rank as a lattice).
IntMat preimage_lattice(const IntMat& a, const IntMat& m);

/// Expresses each column of x in the basis b (columns): returns c with
/// b c = x; throws if x is not in the lattice of b.
IntMat in_basis(const IntMat& b, const IntMat& x);

}  // namespace hakenlab
