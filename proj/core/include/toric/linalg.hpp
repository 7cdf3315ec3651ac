#pragma once

#include <cstddef>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// Dense row-major matrix over Z. Rows are the primary unit: HNF and kernel
// computations treat rows as vectors.
class IMat {
public:
    IMat() : rows_(0), cols_(0) {}
    IMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    explicit IMat(const std::vector<IVec>& rows);

    static IMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Int& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    IVec row(size_t r) const;
    IVec col(size_t c) const;
    std::vector<IVec> row_vectors() const;

    bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    explicit QMat(const std::vector<QVec>& rows);
    explicit QMat(const IMat& m);

    static QMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rat& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    QVec row(size_t r) const;

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

IMat transpose(const IMat& m);
QMat transpose(const QMat& m);
IMat mat_mul(const IMat& a, const IMat& b);
QMat mat_mul(const QMat& a, const QMat& b);
IVec mat_vec(const IMat& m, const IVec& v);
QVec mat_vec(const QMat& m, const QVec& v);
IVec vec_mat(const IVec& v, const IMat& m);
QVec vec_mat(const QVec& v, const QMat& m);

// Row-style Hermite normal form: u * m = h with u unimodular, pivot entries
// positive, entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteResult {
    IMat h;
    IMat u;
    size_t rank;
};
HermiteResult hermite_normal_form(const IMat& m);

// Smith normal form: u * m * v = d with u, v unimodular and the diagonal of d
// nonnegative with d[i] | d[i+1].
struct SmithResult {
    IMat d;
    IMat u;
    IMat v;
    size_t rank;
};
SmithResult smith_normal_form(const IMat& m);

// Canonical basis of the saturated left kernel {a : a * m = 0}: rows form a
// basis of the kernel lattice, sorted lexicographically.
IMat integer_kernel(const IMat& m);

// Invariant factors of Z^rows / (column span of m).
struct AbelianInvariants {
    size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};
AbelianInvariants cokernel_invariants(const IMat& m);

size_t rank(const IMat& m);
size_t rank(const QMat& m);

Int determinant(const IMat& m);

// Exact inverse; throws SingularMatrix.
QMat rational_inverse(const QMat& m);

// Solves x * a = b for a row vector x when a is square; throws SingularMatrix.
QVec solve_left(const QMat& a, const QVec& b);

// Solves a * x = b; returns false when inconsistent. When the solution is not
// unique an arbitrary solution is produced.
bool solve_linear(const QMat& a, const QVec& b, QVec& x);

// Basis (as rows) of the rational right kernel {x : m * x = 0}, cleared to
// primitive integer vectors when m is integral.
std::vector<QVec> rational_right_kernel(const QMat& m);

bool lex_less(const IVec& a, const IVec& b);
bool lex_less(const QVec& a, const QVec& b);

}  // namespace toric
