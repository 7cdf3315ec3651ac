#include "doctest.h"

#include <random>

#include "toric/linalg.hpp"

using namespace toric;

namespace {

IMat random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IMat m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

bool is_hnf_shape(const IMat& h, size_t rank) {
    long prev_col = -1;
    for (size_t r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) return false;
        if (static_cast<long>(c) <= prev_col) return false;
        prev_col = static_cast<long>(c);
        if (h(r, c) <= 0) return false;
        for (size_t rr = 0; rr < r; ++rr) {
            if (h(rr, c) < 0 || h(rr, c) >= h(r, c)) return false;
        }
        for (size_t rr = r + 1; rr < h.rows(); ++rr) {
            if (h(rr, c) != 0) return false;
        }
    }
    for (size_t r = rank; r < h.rows(); ++r) {
        for (size_t c = 0; c < h.cols(); ++c)
            if (h(r, c) != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hermite normal form: known values") {
    IMat m({{Int(2), Int(4)}, {Int(1), Int(1)}});
    auto hr = hermite_normal_form(m);
    CHECK(hr.rank == 2);
    CHECK(hr.h == IMat({{Int(1), Int(1)}, {Int(0), Int(2)}}));
    CHECK(mat_mul(hr.u, m) == hr.h);
}

TEST_CASE("hermite normal form: properties on random matrices") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 120; ++iter) {
        size_t rows = 1 + static_cast<size_t>(rng() % 5);
        size_t cols = 1 + static_cast<size_t>(rng() % 5);
        IMat m = random_matrix(rng, rows, cols);
        auto hr = hermite_normal_form(m);
        CHECK(mat_mul(hr.u, m) == hr.h);
        CHECK(abs(determinant(hr.u)) == 1);
        CHECK(is_hnf_shape(hr.h, hr.rank));
        // Canonical: re-running on h is a fixed point.
        auto again = hermite_normal_form(hr.h);
        CHECK(again.h == hr.h);
    }
}

TEST_CASE("smith normal form: known values") {
    {
        IMat m({{Int(2), Int(0)}, {Int(0), Int(3)}});
        auto sr = smith_normal_form(m);
        CHECK(sr.d(0, 0) == 1);
        CHECK(sr.d(1, 1) == 6);
    }
    {
        IMat m({{Int(1), Int(0)}, {Int(0), Int(2)}});
        auto sr = smith_normal_form(m);
        CHECK(sr.d(0, 0) == 1);
        CHECK(sr.d(1, 1) == 2);
    }
}

TEST_CASE("smith normal form: properties on random matrices") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 120; ++iter) {
        size_t rows = 1 + static_cast<size_t>(rng() % 5);
        size_t cols = 1 + static_cast<size_t>(rng() % 5);
        IMat m = random_matrix(rng, rows, cols);
        auto sr = smith_normal_form(m);
        CHECK(mat_mul(mat_mul(sr.u, m), sr.v) == sr.d);
        CHECK(abs(determinant(sr.u)) == 1);
        CHECK(abs(determinant(sr.v)) == 1);
        for (size_t r = 0; r < sr.d.rows(); ++r)
            for (size_t c = 0; c < sr.d.cols(); ++c)
                if (r != c) CHECK(sr.d(r, c) == 0);
        size_t n = std::min(sr.d.rows(), sr.d.cols());
        for (size_t i = 0; i + 1 < n; ++i) {
            CHECK(sr.d(i, i) >= 0);
            if (sr.d(i, i) != 0) CHECK(sr.d(i + 1, i + 1) % sr.d(i, i) == 0);
            if (sr.d(i, i) == 0) CHECK(sr.d(i + 1, i + 1) == 0);
        }
        CHECK(sr.rank == rank(m));
    }
}

TEST_CASE("integer kernel: relations of projective plane rays") {
    IMat rays({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}});
    IMat k = integer_kernel(rays);
    CHECK(k == IMat({{Int(1), Int(1), Int(1)}}));
}

TEST_CASE("integer kernel: saturation") {
    IMat m({{Int(2)}, {Int(2)}});
    IMat k = integer_kernel(m);
    CHECK(k == IMat({{Int(1), Int(-1)}}));
}

TEST_CASE("integer kernel: random properties") {
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 120; ++iter) {
        size_t rows = 1 + static_cast<size_t>(rng() % 5);
        size_t cols = 1 + static_cast<size_t>(rng() % 4);
        IMat m = random_matrix(rng, rows, cols);
        IMat k = integer_kernel(m);
        CHECK(k.rows() + rank(m) == rows);
        if (k.rows() > 0) {
            IMat prod = mat_mul(k, m);
            for (size_t r = 0; r < prod.rows(); ++r)
                for (size_t c = 0; c < prod.cols(); ++c) CHECK(prod(r, c) == 0);
            CHECK(rank(k) == k.rows());
            // Saturation: the kernel lattice is primitive, so its Smith form is all ones.
            auto sr = smith_normal_form(k);
            for (size_t i = 0; i < sr.rank; ++i) CHECK(sr.d(i, i) == 1);
            // Canonical order.
            for (size_t r = 0; r + 1 < k.rows(); ++r) CHECK(lex_less(k.row(r), k.row(r + 1)));
        }
    }
}

TEST_CASE("cokernel invariants") {
    {
        // Z^2 / span{(1,0),(0,2)} = Z/2
        IMat m({{Int(1), Int(0)}, {Int(0), Int(2)}});
        auto inv = cokernel_invariants(m);
        CHECK(inv.free_rank == 0);
        CHECK(inv.torsion == std::vector<Int>{Int(2)});
    }
    {
        IMat m({{Int(3)}});
        auto inv = cokernel_invariants(m);
        CHECK(inv.free_rank == 0);
        CHECK(inv.torsion == std::vector<Int>{Int(3)});
    }
    {
        // Z^3 / colspan of the projective plane ray matrix = Z
        IMat rays({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}});
        auto inv = cokernel_invariants(rays);
        CHECK(inv.free_rank == 1);
        CHECK(inv.torsion.empty());
    }
    {
        IMat m({{Int(2), Int(0)}, {Int(0), Int(3)}});
        auto inv = cokernel_invariants(m);
        CHECK(inv.free_rank == 0);
        CHECK(inv.torsion == std::vector<Int>{Int(6)});
    }
}

TEST_CASE("determinant matches smith normal form") {
    std::mt19937_64 rng(45);
    for (int iter = 0; iter < 60; ++iter) {
        size_t n = 1 + static_cast<size_t>(rng() % 4);
        IMat m = random_matrix(rng, n, n);
        Int d = determinant(m);
        auto sr = smith_normal_form(m);
        Int p = 1;
        for (size_t i = 0; i < n; ++i) p *= sr.d(i, i);
        CHECK(abs(d) == p);
    }
}

TEST_CASE("rational inverse") {
    QMat m({{Rat(3), Rat(1)}, {Rat(1), Rat(5)}});
    QMat inv = rational_inverse(m);
    CHECK(mat_mul(m, inv) == QMat::identity(2));
    CHECK(inv(0, 0) == Rat(5, 14));
    CHECK(inv(0, 1) == Rat(-1, 14));

    QMat sing({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
    CHECK_THROWS_WITH_AS(rational_inverse(sing), doctest::Contains("SingularMatrix"), Error);
}

TEST_CASE("solve and kernels") {
    std::mt19937_64 rng(46);
    for (int iter = 0; iter < 60; ++iter) {
        size_t rows = 1 + static_cast<size_t>(rng() % 4);
        size_t cols = 1 + static_cast<size_t>(rng() % 4);
        IMat mi = random_matrix(rng, rows, cols);
        QMat m(mi);
        auto kern = rational_right_kernel(m);
        CHECK(kern.size() == cols - rank(m));
        for (const auto& v : kern) {
            QVec out = mat_vec(m, v);
            for (const auto& e : out) CHECK(e == 0);
        }
        // A consistent system solves.
        QVec xtrue(cols);
        for (size_t c = 0; c < cols; ++c) xtrue[c] = Rat(static_cast<int>(rng() % 7) - 3);
        QVec b = mat_vec(m, xtrue);
        QVec x;
        REQUIRE(solve_linear(m, b, x));
        QVec bx = mat_vec(m, x);
        CHECK(bx == b);
    }
}
