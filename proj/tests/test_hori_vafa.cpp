#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "toric/error.hpp"
#include "toric/hori_vafa.hpp"
#include "toric/lg.hpp"
#include "toric/state_space.hpp"

using namespace toric;

namespace {

IVec iv(std::vector<long> v) {
    IVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

IMat column(std::vector<long> v) {
    IMat q(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) q(i, 0) = Int(v[i]);
    return q;
}

IMat rows(std::vector<std::vector<long>> r) {
    IMat q(r.size(), r.empty() ? 0 : r[0].size());
    for (size_t i = 0; i < r.size(); ++i) {
        for (size_t j = 0; j < r[i].size(); ++j) q(i, j) = Int(r[i][j]);
    }
    return q;
}

LaurentTerm term(std::vector<long> exps, std::map<std::string, Rat> params = {}, Rat coeff = 1) {
    LaurentTerm t;
    t.coeff = coeff;
    t.params = std::move(params);
    t.exponents = iv(std::move(exps));
    return t;
}

bool has_term(const LaurentSuperpotential& w, const LaurentTerm& t) {
    return std::find(w.terms.begin(), w.terms.end(), t) != w.terms.end();
}

// With W = x_1 + ... + x_N as input, the solved terms are the images of the
// coordinates in order; each constraint must collapse to param^1.
void check_closure(const IMat& q, const std::vector<std::string>& params,
                   const LaurentSuperpotential& solved) {
    REQUIRE(solved.terms.size() == q.rows());
    for (size_t j = 0; j < q.cols(); ++j) {
        IVec exp_sum(solved.vars.size(), Int(0));
        std::map<std::string, Rat> par_sum;
        for (size_t i = 0; i < q.rows(); ++i) {
            for (size_t m = 0; m < solved.vars.size(); ++m) {
                exp_sum[m] += q(i, j) * solved.terms[i].exponents[m];
            }
            for (const auto& [name, e] : solved.terms[i].params) {
                par_sum[name] += Rat(q(i, j)) * e;
            }
        }
        for (const Int& x : exp_sum) CHECK(x == 0);
        for (const auto& [name, e] : par_sum) {
            CHECK(e == (name == params[j] ? Rat(1) : Rat(0)));
        }
        CHECK(par_sum[params[j]] == 1);
    }
}

std::vector<IVec> sorted_exponents(const LaurentSuperpotential& w) {
    std::vector<IVec> out;
    for (const LaurentTerm& t : w.terms) out.push_back(t.exponents);
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return out;
}

}  // namespace

TEST_CASE("superpotential construction and printing") {
    auto w = make_superpotential({"x", "y"},
                                 {term({1, 0}), term({-1, 1}, {{"q", Rat(1)}})});
    CHECK(w.vars.size() == 2);
    CHECK(superpotential_to_string(w) == "x + q*y/x");

    auto lg = make_superpotential({"x"}, {term({1})}, {{0, {{"lambda", Rat(1)}}}});
    CHECK(superpotential_to_string(lg) == "x - (lambda)*log(x)");

    CHECK_THROWS_WITH_AS(make_superpotential({"x"}, {term({1, 2})}),
                         doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(make_superpotential({"x"}, {term({1}), term({1})}),
                         doctest::Contains("RepeatedMonomial"), Error);
    CHECK_THROWS_WITH_AS(make_superpotential({"x"}, {term({1}, {}, Rat(0))}),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(make_superpotential({"x"}, {term({1})}, {{1, {{"l", Rat(1)}}}}),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("rank-one glsm phases") {
    auto quintic = glsm_rank1_phases(iv({1, 1, 1, 1, 1, -5}));
    CHECK(quintic.weights == iv({1, 1, 1, 1, 1}));
    CHECK(quintic.degree == 5);
    CHECK(quintic.positive_phase == "O_{P(1,1,1,1,1)}(-5)");
    CHECK(quintic.negative_phase == "[C^5/Z_5]");
    CHECK(quintic.negative_j_phases == QVec(5, Rat(1, 5)));

    auto half = glsm_rank1_phases(iv({1, 1, -2}));
    CHECK(half.negative_phase == "[C^2/Z_2]");
    CHECK(half.negative_j_phases == QVec(2, Rat(1, 2)));

    auto line = glsm_rank1_phases(iv({1, -1}));
    CHECK(line.degree == 1);
    CHECK(line.negative_phase == "C^1");
    CHECK(line.negative_j_phases == QVec{Rat(0)});

    CHECK_THROWS_WITH_AS(glsm_rank1_phases(iv({3})), doctest::Contains("InvalidCharges"), Error);
    CHECK_THROWS_WITH_AS(glsm_rank1_phases(iv({1, 1, 2})),
                         doctest::Contains("InvalidCharges"), Error);
    CHECK_THROWS_WITH_AS(glsm_rank1_phases(iv({1, -1, -2})),
                         doctest::Contains("InvalidCharges"), Error);
}

TEST_CASE("toric mirror of projective space solves to the standard form") {
    auto mirror = hv_mirror_toric(column({1, 1, 1}), {"t"});
    CHECK(mirror.system.nvars == 3);
    REQUIRE(mirror.system.constraints.size() == 1);
    CHECK(mirror.system.constraints[0].exponents == iv({1, 1, 1}));
    CHECK(mirror.system.constraints[0].param == "t");
    CHECK(superpotential_to_string(mirror.w) == "x1 + x2 + x3");

    auto solved = solve_constraints(mirror.system, mirror.w);
    CHECK(solved.vars == std::vector<std::string>{"x2", "x3"});
    REQUIRE(solved.terms.size() == 3);
    CHECK(has_term(solved, term({-1, -1}, {{"t", Rat(1)}})));
    CHECK(has_term(solved, term({1, 0})));
    CHECK(has_term(solved, term({0, 1})));
    check_closure(column({1, 1, 1}), {"t"}, solved);
}

TEST_CASE("weighted projective mirror keeps the free variables by name") {
    auto mirror = hv_mirror_toric(column({1, 2, 3}), {"q"});
    auto solved = solve_constraints(mirror.system, mirror.w);
    CHECK(solved.vars == std::vector<std::string>{"x2", "x3"});
    CHECK(has_term(solved, term({-2, -3}, {{"q", Rat(1)}})));
    check_closure(column({1, 2, 3}), {"q"}, solved);
}

TEST_CASE("hirzebruch mirror mixes the parameters through elimination") {
    for (long n : {1L, 2L, 3L}) {
        IMat q = rows({{1, 0}, {-n, 1}, {1, 0}, {0, 1}});
        auto mirror = hv_mirror_toric(q, {"q1", "q2"});
        auto solved = solve_constraints(mirror.system, mirror.w);
        CHECK(solved.vars == std::vector<std::string>{"x3", "x4"});
        CHECK(has_term(solved, term({-1, -n}, {{"q1", Rat(1)}, {"q2", Rat(n)}})));
        CHECK(has_term(solved, term({0, -1}, {{"q2", Rat(1)}})));
        CHECK(has_term(solved, term({1, 0})));
        CHECK(has_term(solved, term({0, 1})));
        check_closure(q, {"q1", "q2"}, solved);
    }
}

TEST_CASE("local mirror of the resolved conifold matches the displayed form") {
    auto mirror = hv_mirror_toric(column({1, 1, -1, -1}), {"q"});
    auto solved = solve_constraints(mirror.system, mirror.w);
    CHECK(solved.vars == std::vector<std::string>{"x2", "x3", "x4"});
    CHECK(has_term(solved, term({-1, 1, 1}, {{"q", Rat(1)}})));
    CHECK(superpotential_to_string(solved) == "q*x3*x4/x2 + x2 + x3 + x4");
}

TEST_CASE("constraint solving falls back to a torus reparametrization") {
    auto mirror = hv_mirror_toric(column({2, 3}), {"t"});
    auto solved = solve_constraints(mirror.system, mirror.w);
    REQUIRE(solved.vars.size() == 1);
    CHECK(solved.vars[0] == "u1");
    REQUIRE(solved.terms.size() == 2);
    const Int e1 = solved.terms[0].exponents[0];
    const Int e2 = solved.terms[1].exponents[0];
    const bool orientation = (e1 == -3 && e2 == 2) || (e1 == 3 && e2 == -2);
    CHECK(orientation);
    check_closure(column({2, 3}), {"t"}, solved);
}

TEST_CASE("empty and inconsistent constraint systems") {
    auto w = make_superpotential({"x"}, {term({1})});
    auto same = solve_constraints({1, {}}, w);
    CHECK(same == w);

    MirrorConstraintSystem dependent;
    dependent.nvars = 2;
    dependent.constraints.push_back({iv({1, 1}), "a"});
    dependent.constraints.push_back({iv({2, 2}), "b"});
    auto sum = make_superpotential({"x1", "x2"}, {term({1, 0}), term({0, 1})});
    CHECK_THROWS_WITH_AS(solve_constraints(dependent, sum),
                         doctest::Contains("InconsistentConstraints"), Error);

    MirrorConstraintSystem bad;
    bad.nvars = 2;
    bad.constraints.push_back({iv({1}), "a"});
    CHECK_THROWS_WITH_AS(solve_constraints(bad, sum), doctest::Contains("DimensionMismatch"),
                         Error);
}

TEST_CASE("equivariant mirror of the affine line") {
    auto w = equivariant_hv_mirror(IMat(1, 0), {}, {"lambda"}, {0});
    CHECK(superpotential_to_string(w) == "x1 - (lambda)*log(x1)");
    CHECK(critical_count(w).count == 1);
}

TEST_CASE("equivariant mirror expands eliminated logs through the substitution") {
    // Total space of O(-d) over projective space, with every coordinate
    // weighted; the eliminated coordinate's log spreads over the kept ones.
    for (auto [n, d] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}}) {
        std::vector<long> charges(n + 1, 1);
        charges.push_back(-d);
        std::vector<std::string> lambdas;
        std::vector<size_t> all;
        for (long i = 0; i <= n + 1; ++i) {
            lambdas.push_back("l" + std::to_string(i));
            all.push_back(i);
        }
        auto w = equivariant_hv_mirror(column(charges), {"q"}, lambdas, all);
        REQUIRE(w.vars.size() == n + 1);
        REQUIRE(w.log_terms.size() == n + 1);
        for (long k = 0; k < n; ++k) {
            std::map<std::string, Rat> expected{{"l0", Rat(-1)},
                                                {"l" + std::to_string(k + 1), Rat(1)}};
            CHECK(w.log_terms[k].coeffs == expected);
        }
        std::map<std::string, Rat> last{{"l0", Rat(d)},
                                        {"l" + std::to_string(n + 1), Rat(1)}};
        CHECK(w.log_terms[n].coeffs == last);
        CHECK(critical_count(w).count == n + 1);
    }
}

TEST_CASE("partially equivariant local mirror keeps only the chosen logs") {
    auto w = equivariant_hv_mirror(column({1, 1, -1, -1}), {"q"}, {"l1", "l2", "l3", "l4"},
                                   {2, 3});
    CHECK(superpotential_to_string(w) ==
          "q*x3*x4/x2 + x2 + x3 + x4 - (l3)*log(x3) - (l4)*log(x4)");
    REQUIRE(w.log_terms.size() == 2);
    CHECK(w.log_terms[0].var == 1);
    CHECK(w.log_terms[1].var == 2);

    CHECK_THROWS_WITH_AS(equivariant_hv_mirror(column({1, 1}), {"q"}, {"l1"}, {0}),
                         doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(equivariant_hv_mirror(column({1, 1}), {"q"}, {"l1", "l2"}, {5}),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("critical counts of projective mirrors") {
    for (long n : {2L, 3L, 4L}) {
        auto mirror = hv_mirror_toric(column(std::vector<long>(n + 1, 1)), {"t"});
        auto solved = solve_constraints(mirror.system, mirror.w);
        CHECK(critical_count(solved).count == n + 1);
    }
}

TEST_CASE("critical counts of weighted projective mirrors equal the weight sum") {
    std::vector<std::vector<long>> weight_lists{{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3},
                                                {1, 1, 1, 1}, {1, 2, 2, 3}};
    for (const auto& c : weight_lists) {
        auto mirror = hv_mirror_toric(column(c), {"q"});
        auto solved = solve_constraints(mirror.system, mirror.w);
        Int total = 0;
        for (long x : c) total += Int(x);
        CHECK(critical_count(solved).count == total);
        IVec weights = iv(c);
        CHECK(critical_count(solved).count == chen_ruan_wps_dimension(weights).total_dim);
    }
}

TEST_CASE("critical count surives the torus reparametrization branch") {
    auto mirror = hv_mirror_toric(column({2, 3}), {"q"});
    auto solved = solve_constraints(mirror.system, mirror.w);
    CHECK(critical_count(solved).count == 5);
    CHECK(chen_ruan_wps_dimension(iv({2, 3})).total_dim == 5);
}

TEST_CASE("hirzebruch critical counts") {
    std::map<long, long> expected{{1, 4}, {2, 4}, {3, 5}};
    for (auto [n, count] : expected) {
        IMat q = rows({{1, 0}, {-n, 1}, {1, 0}, {0, 1}});
        auto solved = solve_constraints(hv_mirror_toric(q, {"q1", "q2"}).system,
                                        hv_mirror_toric(q, {"q1", "q2"}).w);
        CHECK(critical_count(solved).count == count);
    }
}

TEST_CASE("critical count of a noncompact direction vanishes without logs") {
    auto w = make_superpotential({"x"}, {term({1})});
    auto plain = critical_count(w);
    CHECK(plain.count == 0);
    CHECK_FALSE(plain.degenerate);

    auto logged = make_superpotential({"x"}, {term({1})}, {{0, {{"lambda", Rat(1)}}}});
    CHECK(critical_count(logged).count == 1);
}

TEST_CASE("critical count edge cases and rejections") {
    auto idle = make_superpotential({"x", "y"}, {term({1, 0}), term({-1, 0})});
    auto r = critical_count(idle);
    CHECK(r.count == 0);
    CHECK(r.degenerate);

    auto empty = make_superpotential({}, {});
    CHECK(critical_count(empty).count == 1);

    auto big = make_superpotential({"a", "b", "c", "d", "e"}, {term({1, 1, 1, 1, 1})});
    CHECK_THROWS_WITH_AS(critical_count(big), doctest::Contains("TooManyVariables"), Error);

    auto w = make_superpotential({"x"}, {term({1}, {{"q", Rat(1)}})});
    CHECK_THROWS_WITH_AS(critical_count(w, {{"q", Rat(0)}}),
                         doctest::Contains("NonGenericParameters"), Error);
    CHECK(critical_count(w, {{"q", Rat(7)}}).count == 0);
}

TEST_CASE("pre-mirror of the fermat quintic") {
    auto a = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
    auto w = pre_hv_mirror_hypersurface(a, iv({1, 1, 1, 1, 1}), Int(5), "t");
    CHECK(w.vars == std::vector<std::string>{"u1", "u2", "u3", "u4", "u5"});
    REQUIRE(w.terms.size() == 6);
    for (size_t i = 0; i < 5; ++i) {
        std::vector<long> e(5, 0);
        e[i] = 5;
        CHECK(has_term(w, term(e)));
    }
    CHECK(has_term(w, term({1, 1, 1, 1, 1}, {{"t", Rat(-1, 5)}})));
}

TEST_CASE("pre-mirror transpose terms for a nonsymmetric chain") {
    auto a = parse_polynomial("x^4*y + y^6");
    auto w = pre_hv_mirror_hypersurface(a, iv({5, 4}), Int(24), "t");
    REQUIRE(w.terms.size() == 3);
    CHECK(has_term(w, term({4, 0})));
    CHECK(has_term(w, term({1, 6})));
    CHECK(has_term(w, term({1, 1}, {{"t", Rat(-1, 24)}})));

    auto at = transpose(a);
    for (size_t i = 0; i < at.exponents.rows(); ++i) {
        LaurentTerm t;
        t.exponents = at.exponents.row(i);
        CHECK(has_term(w, t));
    }
}

TEST_CASE("pre-mirror rejections in the weighted case") {
    auto a = parse_polynomial("x^4*y + y^6");
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(a, iv({5, 4}), Int(23), "t"),
                         doctest::Contains("NotQuasihomogeneous"), Error);
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(a, iv({5}), Int(24), "t"),
                         doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(a, iv({5, -4}), Int(24), "t"),
                         doctest::Contains("InvalidWeights"), Error);
    auto sq = parse_polynomial("x*y + x^2*y^2");
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(sq, iv({1, 1}), Int(2), "t"),
                         doctest::Contains("NotInvertible"), Error);
}

TEST_CASE("pre-mirror of a cubic orbifold with a two-torus ambient") {
    // Cubic in a Z_3 quotient of the projective plane: four coordinates,
    // two torus factors, defining polynomial in the first three.
    auto a = parse_polynomial("x1^3 + x2^3 + x3^3");
    IMat q = rows({{1, -2}, {1, -1}, {1, 0}, {0, 3}});
    auto w = pre_hv_mirror_hypersurface(a, q, iv({3, 0}), {"t1", "t2"});
    CHECK(w.vars == std::vector<std::string>{"u1", "u2", "u3"});
    REQUIRE(w.terms.size() == 5);
    CHECK(has_term(w, term({3, 0, 0})));
    CHECK(has_term(w, term({0, 3, 0})));
    CHECK(has_term(w, term({0, 0, 3})));
    CHECK(has_term(w, term({1, 1, 1}, {{"t1", Rat(-1, 3)}})));
    CHECK(has_term(w, term({2, 1, 0}, {{"t2", Rat(1, 3)}})));
}

TEST_CASE("pre-mirror general-case rejections") {
    auto a = parse_polynomial("x1^3 + x2^3 + x3^3");
    CHECK_THROWS_WITH_AS(
        pre_hv_mirror_hypersurface(a, rows({{1}, {1}, {1}, {1}}), iv({3}), {"t"}),
        doctest::Contains("NotInvertible"), Error);
    IMat q = rows({{1, -2}, {1, -1}, {1, 0}, {0, 3}});
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(a, q, iv({3, 1}), {"t1", "t2"}),
                         doctest::Contains("NotQuasihomogeneous"), Error);
    auto square = parse_polynomial("x^2");
    IMat degenerate = rows({{1, 0}, {0, 0}});
    CHECK_THROWS_WITH_AS(pre_hv_mirror_hypersurface(square, degenerate, iv({2, 0}), {"t1", "t2"}),
                         doctest::Contains("NotInvertible"), Error);
}

TEST_CASE("complete intersection pre-mirror of two cubics") {
    IMat a1 = rows({{3, 0, 0, 0, 0, 0}, {0, 3, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}});
    IMat a2 = rows({{0, 0, 0, 3, 0, 0}, {0, 0, 0, 0, 3, 0}, {0, 0, 0, 0, 0, 3}});
    IMat q = rows({{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}});
    IMat d = rows({{3, 0}, {0, 3}});
    auto w = pre_hv_mirror_complete_intersection({a1, a2}, q, d, {"t1", "t2"});
    REQUIRE(w.terms.size() == 8);
    for (size_t i = 0; i < 6; ++i) {
        std::vector<long> e(6, 0);
        e[i] = 3;
        CHECK(has_term(w, term(e)));
    }
    CHECK(has_term(w, term({1, 1, 1, 0, 0, 0}, {{"t1", Rat(-1, 3)}})));
    CHECK(has_term(w, term({0, 0, 0, 1, 1, 1}, {{"t2", Rat(-1, 3)}})));
}

TEST_CASE("complete intersection pre-mirror with a nonsymmetric degree matrix") {
    // Biprojective family: one block of pure powers, one of mixed monomials.
    IMat a1 = rows({{2, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0}});
    IMat a2 = rows({{1, 0, 0, 3, 0, 0}, {0, 1, 0, 0, 3, 0}, {0, 0, 1, 0, 0, 3}});
    IMat q = rows({{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}});
    IMat d = rows({{2, 0}, {1, 3}});
    auto w = pre_hv_mirror_complete_intersection({a1, a2}, q, d, {"t1", "t2"});
    REQUIRE(w.terms.size() == 8);
    CHECK(has_term(w, term({2, 0, 0, 1, 0, 0})));
    CHECK(has_term(w, term({0, 2, 0, 0, 1, 0})));
    CHECK(has_term(w, term({0, 0, 2, 0, 0, 1})));
    CHECK(has_term(w, term({0, 0, 0, 3, 0, 0})));
    CHECK(has_term(w, term({0, 0, 0, 0, 3, 0})));
    CHECK(has_term(w, term({0, 0, 0, 0, 0, 3})));
    CHECK(has_term(w, term({1, 1, 1, 0, 0, 0}, {{"t1", Rat(-1, 2)}, {"t2", Rat(1, 6)}})));
    CHECK(has_term(w, term({0, 0, 0, 1, 1, 1}, {{"t2", Rat(-1, 3)}})));
}

TEST_CASE("single-block complete intersection agrees with the hypersurface recipe") {
    auto a = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
    IMat block = rows({{5, 0, 0, 0, 0},
                       {0, 5, 0, 0, 0},
                       {0, 0, 5, 0, 0},
                       {0, 0, 0, 5, 0},
                       {0, 0, 0, 0, 5}});
    IMat q = column({1, 1, 1, 1, 1});
    auto ci = pre_hv_mirror_complete_intersection({block}, q, rows({{5}}), {"t"});
    auto hyp = pre_hv_mirror_hypersurface(a, iv({1, 1, 1, 1, 1}), Int(5), "t");
    CHECK(sorted_exponents(ci) == sorted_exponents(hyp));
    for (const LaurentTerm& t : ci.terms) CHECK(has_term(hyp, t));
}

TEST_CASE("complete intersection rejections") {
    IMat q = rows({{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}});
    IMat d = rows({{3, 0}, {0, 3}});
    CHECK_THROWS_WITH_AS(pre_hv_mirror_complete_intersection({}, q, d, {}),
                         doctest::Contains("NotInvertibleCI"), Error);

    IMat a1 = rows({{3, 0, 0, 0, 0, 0}, {0, 3, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}});
    IMat short_block = rows({{0, 0, 0, 3, 0, 0}, {0, 0, 0, 0, 3, 0}});
    CHECK_THROWS_WITH_AS(
        pre_hv_mirror_complete_intersection({a1, short_block}, q, d, {"t1", "t2"}),
        doctest::Contains("NotInvertibleCI"), Error);

    IMat repeated = rows({{0, 0, 0, 3, 0, 0}, {0, 0, 0, 3, 0, 0}, {0, 0, 0, 0, 0, 3}});
    CHECK_THROWS_WITH_AS(
        pre_hv_mirror_complete_intersection({a1, repeated}, q, d, {"t1", "t2"}),
        doctest::Contains("NotInvertibleCI"), Error);

    IMat a2 = rows({{0, 0, 0, 3, 0, 0}, {0, 0, 0, 0, 3, 0}, {0, 0, 0, 0, 0, 3}});
    IMat wrong = rows({{3, 0}, {0, 2}});
    CHECK_THROWS_WITH_AS(pre_hv_mirror_complete_intersection({a1, a2}, q, wrong, {"t1", "t2"}),
                         doctest::Contains("NotQuasihomogeneous"), Error);

    IMat singular_q = rows({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
    IMat dd = rows({{3, 3}, {3, 3}});
    CHECK_THROWS_WITH_AS(
        pre_hv_mirror_complete_intersection({a1, a2}, singular_q, dd, {"t1", "t2"}),
        doctest::Contains("DegenerateDegreeMatrix"), Error);
}

TEST_CASE("symmetry group of the mirror quintic superpotential") {
    auto a = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
    auto w = pre_hv_mirror_hypersurface(a, iv({1, 1, 1, 1, 1}), Int(5), "t");
    auto sym = superpotential_symmetry_group(w);
    CHECK(sym.full.elements.size() == 625);
    CHECK(sym.sl.elements.size() == 625);
    CHECK(sym.full.elements == sym.sl.elements);
}

TEST_CASE("symmetry group of the fermat superpotential without the extra term") {
    auto w = make_superpotential({"x", "y", "z"},
                                 {term({3, 0, 0}), term({0, 3, 0}), term({0, 0, 3})});
    auto sym = superpotential_symmetry_group(w);
    CHECK(sym.full.elements.size() == 27);
    CHECK(sym.sl.elements.size() == 9);
    for (const DiagonalElement& g : sym.sl.elements) {
        CHECK(std::find(sym.full.elements.begin(), sym.full.elements.end(), g) !=
              sym.full.elements.end());
    }
}

TEST_CASE("symmetry group of the cubic orbifold pre-mirror is cyclic of order three") {
    auto a = parse_polynomial("x1^3 + x2^3 + x3^3");
    IMat q = rows({{1, -2}, {1, -1}, {1, 0}, {0, 3}});
    auto w = pre_hv_mirror_hypersurface(a, q, iv({3, 0}), {"t1", "t2"});
    auto sym = superpotential_symmetry_group(w);
    REQUIRE(sym.full.elements.size() == 3);
    DiagonalElement third{QVec(3, Rat(1, 3))};
    CHECK(std::find(sym.full.elements.begin(), sym.full.elements.end(), third) !=
          sym.full.elements.end());
}

TEST_CASE("symmetry group edge cases") {
    auto single = make_superpotential({"x"}, {term({1})});
    CHECK(superpotential_symmetry_group(single).full.elements.size() == 1);

    auto empty = make_superpotential({}, {});
    CHECK(superpotential_symmetry_group(empty).full.elements.size() == 1);

    auto logged = make_superpotential({"x"}, {term({1})}, {{0, {{"l", Rat(1)}}}});
    CHECK_THROWS_WITH_AS(superpotential_symmetry_group(logged),
                         doctest::Contains("LogTermsPresent"), Error);

    auto wide = make_superpotential({"x", "y"}, {term({1, 1})});
    CHECK_THROWS_WITH_AS(superpotential_symmetry_group(wide),
                         doctest::Contains("InfiniteSymmetryGroup"), Error);

    auto cube = make_superpotential({"x", "y", "z"},
                                    {term({3, 0, 0}), term({0, 3, 0}), term({0, 0, 3})});
    CHECK_THROWS_WITH_AS(superpotential_symmetry_group(cube, 10),
                         doctest::Contains("EnumerationLimit"), Error);
}

TEST_CASE("fermat symmetry orders follow the degree power law") {
    for (auto [d, n] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}, {4, 3}, {5, 4}}) {
        std::vector<std::string> vars;
        std::vector<LaurentTerm> terms;
        for (long i = 0; i < n; ++i) {
            vars.push_back("x" + std::to_string(i + 1));
            std::vector<long> e(n, 0);
            e[i] = d;
            terms.push_back(term(e));
        }
        auto sym = superpotential_symmetry_group(make_superpotential(vars, terms));
        Int full = 1, sl = 1;
        for (long i = 0; i < n; ++i) full *= Int(d);
        for (long i = 0; i + 1 < n; ++i) sl *= Int(d);
        CHECK(Int(sym.full.elements.size()) == full);
        CHECK(Int(sym.sl.elements.size()) == sl);
    }
}

TEST_CASE("calabi-yau consistency of the two mirror constructions") {
    for (long n : {2L, 3L, 4L, 5L}) {
        auto check = batyrev_consistency_cy(n, Int(n), "t");
        CHECK(check.coincide);
        CHECK(check.hv_monomials.size() == check.batyrev_monomials.size());
        CHECK(check.hv_monomials == check.batyrev_monomials);
    }
    auto quintic = batyrev_consistency_cy(5, Int(5), "t");
    CHECK(quintic.hv_monomials.size() == 6);
    auto cubic = batyrev_consistency_cy(3, Int(3), "t");
    CHECK(cubic.hv_monomials.size() == 4);
    auto conic = batyrev_consistency_cy(2, Int(2), "t");
    std::vector<IVec> expected{iv({0, 2}), iv({1, 1}), iv({2, 0})};
    CHECK(conic.hv_monomials == expected);
    REQUIRE(quintic.w.terms.size() == 6);
    CHECK(has_term(quintic.w, term({1, 1, 1, 1, 1}, {{"t", Rat(1, 5)}})));

    CHECK_THROWS_WITH_AS(batyrev_consistency_cy(3, Int(4), "t"),
                         doctest::Contains("NotCalabiYau"), Error);
    CHECK_THROWS_WITH_AS(batyrev_consistency_cy(1, Int(1), "t"),
                         doctest::Contains("DimensionMismatch"), Error);
}
