#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

namespace {

// Floor division for b > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

void add_row_multiple(IMat& m, size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void swap_rows(IMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void negate_row(IMat& m, size_t r) {
    for (size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void add_col_multiple(IMat& m, size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

IMat::IMat(const std::vector<IVec>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(rows_ * cols_);
    for (const IVec& r : rows) {
        if (r.size() != cols_) fail("DimensionMismatch", "ragged matrix rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IMat IMat::identity(size_t n) {
    IMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IVec IMat::row(size_t r) const {
    return IVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

IVec IMat::col(size_t c) const {
    IVec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<IVec> IMat::row_vectors() const {
    std::vector<IVec> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

QMat::QMat(const std::vector<QVec>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(rows_ * cols_);
    for (const QVec& r : rows) {
        if (r.size() != cols_) fail("DimensionMismatch", "ragged matrix rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

QMat::QMat(const IMat& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rat(m(r, c));
}

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVec QMat::row(size_t r) const {
    return QVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

IMat transpose(const IMat& m) {
    IMat t(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

QMat transpose(const QMat& m) {
    QMat t(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    if (a.cols() != b.rows()) fail("DimensionMismatch", "matrix product shape");
    IMat out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    if (a.cols() != b.rows()) fail("DimensionMismatch", "matrix product shape");
    QMat out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IVec mat_vec(const IMat& m, const IVec& v) {
    if (m.cols() != v.size()) fail("DimensionMismatch", "matrix-vector shape");
    IVec out(m.rows(), Int(0));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    if (m.cols() != v.size()) fail("DimensionMismatch", "matrix-vector shape");
    QVec out(m.rows(), Rat(0));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

IVec vec_mat(const IVec& v, const IMat& m) {
    if (m.rows() != v.size()) fail("DimensionMismatch", "vector-matrix shape");
    IVec out(m.cols(), Int(0));
    for (size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
    }
    return out;
}

QVec vec_mat(const QVec& v, const QMat& m) {
    if (m.rows() != v.size()) fail("DimensionMismatch", "vector-matrix shape");
    QVec out(m.cols(), Rat(0));
    for (size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
    }
    return out;
}

HermiteResult hermite_normal_form(const IMat& m) {
    HermiteResult res{m, IMat::identity(m.rows()), 0};
    IMat& h = res.h;
    IMat& u = res.u;
    size_t pivot = 0;
    for (size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
        // Euclidean reduction of the column below the pivot row.
        while (true) {
            size_t best = h.rows();
            for (size_t r = pivot; r < h.rows(); ++r) {
                if (h(r, col) == 0) continue;
                if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
            }
            if (best == h.rows()) break;
            swap_rows(h, pivot, best);
            swap_rows(u, pivot, best);
            bool clean = true;
            for (size_t r = pivot + 1; r < h.rows(); ++r) {
                if (h(r, col) == 0) continue;
                Int q = h(r, col) / h(pivot, col);
                add_row_multiple(h, r, pivot, q);
                add_row_multiple(u, r, pivot, q);
                if (h(r, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(pivot, col) == 0) continue;
        if (h(pivot, col) < 0) {
            negate_row(h, pivot);
            negate_row(u, pivot);
        }
        for (size_t r = 0; r < pivot; ++r) {
            Int q = floor_div(h(r, col), h(pivot, col));
            add_row_multiple(h, r, pivot, q);
            add_row_multiple(u, r, pivot, q);
        }
        ++pivot;
    }
    res.rank = pivot;
    return res;
}

SmithResult smith_normal_form(const IMat& m) {
    SmithResult res{m, IMat::identity(m.rows()), IMat::identity(m.cols()), 0};
    IMat& d = res.d;
    IMat& u = res.u;
    IMat& v = res.v;
    const size_t n = std::min(d.rows(), d.cols());

    auto diagonalize = [&]() {
        for (size_t t = 0; t < n; ++t) {
            // Move a smallest-magnitude nonzero entry of the trailing block to (t, t).
            size_t pr = d.rows(), pc = d.cols();
            for (size_t r = t; r < d.rows(); ++r)
                for (size_t c = t; c < d.cols(); ++c) {
                    if (d(r, c) == 0) continue;
                    if (pr == d.rows() || abs(d(r, c)) < abs(d(pr, pc))) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr == d.rows()) break;
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);
            while (true) {
                bool col_dirty = false;
                for (size_t r = t + 1; r < d.rows(); ++r) {
                    while (d(r, t) != 0) {
                        Int q = d(r, t) / d(t, t);
                        add_row_multiple(d, r, t, q);
                        add_row_multiple(u, r, t, q);
                        if (d(r, t) != 0) {
                            swap_rows(d, t, r);
                            swap_rows(u, t, r);
                        }
                    }
                }
                bool row_dirty = false;
                for (size_t c = t + 1; c < d.cols(); ++c) {
                    while (d(t, c) != 0) {
                        Int q = d(t, c) / d(t, t);
                        add_col_multiple(d, c, t, q);
                        add_col_multiple(v, c, t, q);
                        if (d(t, c) != 0) {
                            swap_cols(d, t, c);
                            swap_cols(v, t, c);
                            row_dirty = true;
                        }
                    }
                }
                // Column operations can reintroduce entries below the pivot.
                for (size_t r = t + 1; r < d.rows(); ++r)
                    if (d(r, t) != 0) col_dirty = true;
                if (!col_dirty && !row_dirty) break;
            }
            if (d(t, t) < 0) {
                negate_row(d, t);
                negate_row(u, t);
            }
        }
    };

    diagonalize();
    // Enforce the divisibility chain d[i] | d[i+1].
    while (true) {
        bool stable = true;
        for (size_t i = 0; i + 1 < n; ++i) {
            if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) {
                add_col_multiple(d, i, i + 1, Int(-1));
                add_col_multiple(v, i, i + 1, Int(-1));
                diagonalize();
                stable = false;
                break;
            }
        }
        if (stable) break;
    }
    size_t r = 0;
    for (size_t i = 0; i < n; ++i)
        if (d(i, i) != 0) ++r;
    res.rank = r;
    return res;
}

IMat integer_kernel(const IMat& m) {
    HermiteResult hr = hermite_normal_form(m);
    std::vector<IVec> basis;
    for (size_t r = hr.rank; r < m.rows(); ++r) basis.push_back(hr.u.row(r));
    if (basis.empty()) return IMat(0, m.rows());
    HermiteResult canon = hermite_normal_form(IMat(basis));
    std::vector<IVec> rows;
    for (size_t r = 0; r < canon.rank; ++r) rows.push_back(canon.h.row(r));
    std::sort(rows.begin(), rows.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return IMat(rows);
}

AbelianInvariants cokernel_invariants(const IMat& m) {
    SmithResult sr = smith_normal_form(m);
    AbelianInvariants inv;
    inv.free_rank = m.rows() - sr.rank;
    for (size_t i = 0; i < sr.rank; ++i) {
        if (sr.d(i, i) >= 2) inv.torsion.push_back(sr.d(i, i));
    }
    return inv;
}

size_t rank(const IMat& m) { return hermite_normal_form(m).rank; }

size_t rank(const QMat& m) {
    QMat a = m;
    size_t pivot = 0;
    for (size_t col = 0; col < a.cols() && pivot < a.rows(); ++col) {
        size_t sel = a.rows();
        for (size_t r = pivot; r < a.rows(); ++r)
            if (a(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == a.rows()) continue;
        for (size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(sel, c));
        for (size_t r = pivot + 1; r < a.rows(); ++r) {
            if (a(r, col) == 0) continue;
            Rat f = a(r, col) / a(pivot, col);
            for (size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(pivot, c);
        }
        ++pivot;
    }
    return pivot;
}

Int determinant(const IMat& m) {
    if (m.rows() != m.cols()) fail("DimensionMismatch", "determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t sel = n;
            for (size_t r = k + 1; r < n; ++r)
                if (a(r, k) != 0) {
                    sel = r;
                    break;
                }
            if (sel == n) return 0;
            swap_rows(a, k, sel);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

QMat rational_inverse(const QMat& m) {
    if (m.rows() != m.cols()) fail("DimensionMismatch", "inverse of non-square matrix");
    const size_t n = m.rows();
    QMat a = m;
    QMat inv = QMat::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = n;
        for (size_t r = col; r < n; ++r)
            if (a(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == n) fail("SingularMatrix", "matrix is not invertible");
        for (size_t c = 0; c < n; ++c) {
            std::swap(a(col, c), a(sel, c));
            std::swap(inv(col, c), inv(sel, c));
        }
        Rat p = a(col, col);
        for (size_t c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

QVec solve_left(const QMat& a, const QVec& b) {
    return vec_mat(b, rational_inverse(a));
}

bool solve_linear(const QMat& a, const QVec& b, QVec& x) {
    if (a.rows() != b.size()) fail("DimensionMismatch", "solve shape");
    QMat aug(a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    std::vector<size_t> pivot_col;
    size_t pivot = 0;
    for (size_t col = 0; col < a.cols() && pivot < aug.rows(); ++col) {
        size_t sel = aug.rows();
        for (size_t r = pivot; r < aug.rows(); ++r)
            if (aug(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == aug.rows()) continue;
        for (size_t c = 0; c <= a.cols(); ++c) std::swap(aug(pivot, c), aug(sel, c));
        Rat p = aug(pivot, col);
        for (size_t c = col; c <= a.cols(); ++c) aug(pivot, c) /= p;
        for (size_t r = 0; r < aug.rows(); ++r) {
            if (r == pivot || aug(r, col) == 0) continue;
            Rat f = aug(r, col);
            for (size_t c = col; c <= a.cols(); ++c) aug(r, c) -= f * aug(pivot, c);
        }
        pivot_col.push_back(col);
        ++pivot;
    }
    for (size_t r = pivot; r < aug.rows(); ++r)
        if (aug(r, a.cols()) != 0) return false;
    x.assign(a.cols(), Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug(i, a.cols());
    return true;
}

std::vector<QVec> rational_right_kernel(const QMat& m) {
    QMat a = m;
    std::vector<size_t> pivot_col;
    size_t pivot = 0;
    for (size_t col = 0; col < a.cols() && pivot < a.rows(); ++col) {
        size_t sel = a.rows();
        for (size_t r = pivot; r < a.rows(); ++r)
            if (a(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == a.rows()) continue;
        for (size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(sel, c));
        Rat p = a(pivot, col);
        for (size_t c = col; c < a.cols(); ++c) a(pivot, c) /= p;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(pivot, c);
        }
        pivot_col.push_back(col);
        ++pivot;
    }
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(a.cols(), Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(i, free);
        IVec scaled = primitive(v);
        basis.push_back(to_rational(scaled));
    }
    return basis;
}

bool lex_less(const IVec& a, const IVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const QVec& a, const QVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace toric
