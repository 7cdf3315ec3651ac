#include <string>
#include <vector>

#include "doctest.h"
#include "toric/error.hpp"
#include "toric/lg.hpp"

using namespace toric;

namespace {

IVec iv(std::vector<long> v) {
    IVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

InvertiblePolynomial P(const std::string& text) { return parse_polynomial(text); }

Rat q(long n, long d) { return Rat(n, d); }

}  // namespace

TEST_CASE("parser reads exponent matrices and coefficients") {
    auto w = P("x^3*y + x*y^5");
    CHECK(w.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(w.exponents.rows() == 2);
    CHECK(w.exponents.row(0) == iv({3, 1}));
    CHECK(w.exponents.row(1) == iv({1, 5}));
    CHECK(w.coeffs == std::vector<Rat>{Rat(1), Rat(1)});

    auto a = P("2x^2 - y^3");
    CHECK(a.coeffs == std::vector<Rat>{Rat(2), Rat(-1)});
    CHECK(a.exponents.row(0) == iv({2, 0}));
    CHECK(a.exponents.row(1) == iv({0, 3}));

    auto f = P("1/2*x^2");
    CHECK(f.coeffs == std::vector<Rat>{q(1, 2)});
    CHECK(f.vars == std::vector<std::string>{"x"});

    auto imp = P("3x y^2 + x^3");
    CHECK(imp.coeffs == std::vector<Rat>{Rat(3), Rat(1)});
    CHECK(imp.exponents.row(0) == iv({1, 2}));

    CHECK(polynomial_to_string(w) == "x^3*y + x*y^5");
    CHECK(polynomial_to_string(parse_polynomial(polynomial_to_string(a))) ==
          polynomial_to_string(a));

    CHECK(P("x^2 + x*y").vars.size() == 2);
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_WITH_AS(P("x^3 + y^3 + x*y^2"), doctest::Contains("NotSquare"), Error);
    CHECK_THROWS_WITH_AS(P("x^2*y + x^2*y"), doctest::Contains("RepeatedMonomial"), Error);
    CHECK_THROWS_WITH_AS(P(""), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(P("x^"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(P("x^-2 + y^2"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(P("x ? y"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(P("0*x^2 + y^2"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(P("x^2 + x^3*y^0"), doctest::Contains("UnusedVariable"), Error);
}

TEST_CASE("charges of the worked examples") {
    auto cd = charges(P("x^3*y + x*y^5"));
    CHECK(cd.q == QVec{q(2, 7), q(1, 7)});
    CHECK(cd.weights == iv({2, 1}));
    CHECK(cd.degree == 7);

    CHECK(charges(P("x^4")).q == QVec{q(1, 4)});
    CHECK(charges(P("1/6*x^6")).q == QVec{q(1, 6)});

    auto d5 = charges(P("x^4 + x*y^2"));
    CHECK(d5.q == QVec{q(1, 4), q(3, 8)});
    CHECK(d5.degree == 8);

    CHECK_THROWS_WITH_AS(charges(P("x^3*y + y")), doctest::Contains("ChargeOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(charges(P("x^2*y^2 + x*y")),
                         doctest::Contains("SingularExponentMatrix"), Error);
}

TEST_CASE("kreuzer-skarke decomposition") {
    auto loop = ks_decompose(P("x^3*y + x*y^5"));
    REQUIRE(loop.pieces.size() == 1);
    CHECK(loop.pieces[0].type == AtomicPiece::Type::Loop);
    CHECK(loop.pieces[0].variable_indices == std::vector<size_t>{0, 1});
    CHECK(loop.pieces[0].exponents == std::vector<Int>{Int(3), Int(5)});

    auto e7 = ks_decompose(P("x^3 + x*y^3"));
    REQUIRE(e7.pieces.size() == 1);
    CHECK(e7.pieces[0].type == AtomicPiece::Type::Chain);
    CHECK(e7.pieces[0].variable_indices == std::vector<size_t>{1, 0});
    CHECK(e7.pieces[0].exponents == std::vector<Int>{Int(3), Int(3)});

    auto p8 = ks_decompose(P("x^3 + y^3 + z^3"));
    REQUIRE(p8.pieces.size() == 3);
    for (const auto& piece : p8.pieces) {
        CHECK(piece.type == AtomicPiece::Type::Fermat);
        CHECK(piece.exponents == std::vector<Int>{Int(3)});
    }

    auto d5 = ks_decompose(P("x^4 + x*y^2"));
    REQUIRE(d5.pieces.size() == 1);
    CHECK(d5.pieces[0].type == AtomicPiece::Type::Chain);
    CHECK(d5.pieces[0].variable_indices == std::vector<size_t>{1, 0});
    CHECK(d5.pieces[0].exponents == std::vector<Int>{Int(2), Int(4)});

    CHECK_THROWS_WITH_AS(ks_decompose(P("x^2*y^2 + y^3")), doctest::Contains("NotDecomposable"),
                         Error);
}

TEST_CASE("nondegeneracy reports") {
    CHECK(nondegeneracy_check(P("x^3*y + x*y^5")).ok);
    CHECK(nondegeneracy_check(P("x^2")).ok);
    CHECK(nondegeneracy_check(P("x^2 + y^4 + z^4")).ok);
    CHECK(nondegeneracy_check(P("x^2 + y^3 + z^6")).ok);
    CHECK(nondegeneracy_check(P("x^2*y + y^2*x")).ok);

    auto cross = nondegeneracy_check(P("x^2 + x*y"));
    CHECK_FALSE(cross.ok);
    REQUIRE(!cross.reasons.empty());
    CHECK(cross.reasons[0].find("cross-term") != std::string::npos);

    CHECK_FALSE(nondegeneracy_check(P("x^3*y + y")).ok);
    CHECK_FALSE(nondegeneracy_check(P("x^2*y^2 + y^5")).ok);
}

TEST_CASE("central charge and the calabi-yau condition") {
    std::vector<std::string> ade = {"x^2",       "x^3",       "x^4",       "x^5",
                                    "x^6",       "x^7",       "x^8",       "x^9",
                                    "x^3 + x*y^2", "x^4 + x*y^2", "x^5 + x*y^2", "x^6 + x*y^2",
                                    "x^3 + y^3", "x^3 + x*y^3", "x^3 + y^5"};
    for (const auto& text : ade) {
        CAPTURE(text);
        CHECK(central_charge(P(text)) < 1);
        CHECK_FALSE(is_calabi_yau(P(text)));
    }
    for (const auto& text :
         {"x^3 + y^3 + z^3", "x^2 + y^4 + z^4", "x^2 + y^3 + z^6"}) {
        CAPTURE(text);
        CHECK(central_charge(P(text)) == 1);
        CHECK(is_calabi_yau(P(text)));
    }
    CHECK(central_charge(P("x^3*y + x*y^5")) == q(8, 7));
    CHECK_FALSE(is_calabi_yau(P("x^3*y + x*y^5")));
    CHECK(is_calabi_yau(P("x^5 + y^5 + z^5 + v^5 + w^5")));
}

TEST_CASE("milnor numbers match the formula and the graded basis") {
    struct Case {
        std::string text;
        long mu;
    };
    std::vector<Case> cases = {
        {"x^2", 1},          {"x^3", 2},           {"x^4", 3},          {"x^5", 4},
        {"x^9", 8},          {"x^3 + x*y^2", 4},   {"x^4 + x*y^2", 5},  {"x^5 + x*y^2", 6},
        {"x^6 + x*y^2", 7},  {"x^3 + y^3", 4},     {"x^3 + x*y^3", 7},  {"x^3 + y^5", 8},
        {"x^3 + y^3 + z^3", 8}, {"x^2 + y^4 + z^4", 9}, {"x^2 + y^3 + z^6", 10},
        {"x^3*y + x*y^5", 15}};
    for (const auto& c : cases) {
        CAPTURE(c.text);
        auto w = P(c.text);
        CHECK(milnor_number(w) == c.mu);
        CHECK(jacobian_basis(w).monomials.size() == static_cast<size_t>(c.mu));
        CHECK(nondegeneracy_check(w).ok);
    }
    CHECK_THROWS_WITH_AS(milnor_number(P("x^2*y^2 + y^5")),
                         doctest::Contains("NonIntegralMilnor"), Error);
}

TEST_CASE("jacobian basis: known bases") {
    auto a4 = jacobian_basis(P("x^5"));
    REQUIRE(a4.monomials.size() == 4);
    CHECK(a4.monomials == std::vector<IVec>{iv({0}), iv({1}), iv({2}), iv({3})});
    CHECK(a4.degrees == QVec{q(0, 1), q(1, 5), q(2, 5), q(3, 5)});

    auto e6 = jacobian_basis(P("x^3 + y^3"));
    CHECK(e6.monomials ==
          std::vector<IVec>{iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
    CHECK(e6.degrees.back() == q(2, 3));
}

TEST_CASE("jacobian basis: the degree-7 loop example") {
    auto w = P("x^3*y + x*y^5");
    auto basis = jacobian_basis(w);
    std::vector<IVec> expected = {
        iv({0, 0}),
        iv({0, 1}),
        iv({1, 0}), iv({0, 2}),
        iv({1, 1}), iv({0, 3}),
        iv({2, 0}), iv({1, 2}), iv({0, 4}),
        iv({2, 1}), iv({1, 3}),
        iv({3, 0}), iv({2, 2}),
        iv({2, 3}),
        iv({2, 4})};
    CHECK(basis.monomials == expected);
    CHECK(basis.degrees.back() == q(8, 7));
    for (size_t i = 0; i + 1 < basis.degrees.size(); ++i) {
        CHECK(basis.degrees[i] < q(8, 7));
    }
    for (const IVec& m : basis.monomials) {
        CHECK(m != iv({0, 5}));
    }
}

TEST_CASE("jacobian basis: degenerate and empty inputs") {
    CHECK_THROWS_WITH_AS(graded_jacobian_basis(IMat(0, 1), {}, iv({1}), Int(3)),
                         doctest::Contains("InfiniteDimensional"), Error);
    auto empty = graded_jacobian_basis(IMat(0, 0), {}, IVec{}, Int(5));
    REQUIRE(empty.monomials.size() == 1);
    CHECK(empty.monomials[0] == IVec{});
    CHECK(empty.degrees[0] == Rat(0));
}

TEST_CASE("fermat quintic jacobian ring") {
    auto w = P("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
    CHECK(milnor_number(w) == 1024);
    auto basis = jacobian_basis(w);
    CHECK(basis.monomials.size() == 1024);
    for (const IVec& m : basis.monomials) {
        for (const Int& e : m) CHECK(e <= 3);
    }
    CHECK(basis.degrees.back() == Rat(3));
}

TEST_CASE("transpose") {
    auto loop = P("x^3*y + x*y^5");
    CHECK(transpose(loop) == loop);

    auto chain = P("x^3*y + y^4");
    auto t = transpose(chain);
    CHECK(t.exponents.row(0) == iv({3, 0}));
    CHECK(t.exponents.row(1) == iv({1, 4}));
    CHECK(transpose(t) == make_polynomial(chain.vars, {Rat(1), Rat(1)}, chain.exponents));

    for (const auto& text : {"x^4 + x*y^2", "x^3 + x*y^3", "x^3 + y^5", "x^2 + y^4 + z^4"}) {
        CAPTURE(text);
        auto w = P(text);
        auto wt = transpose(w);
        CHECK(transpose(wt) == make_polynomial(w.vars, std::vector<Rat>(w.vars.size(), Rat(1)),
                                               w.exponents));
        CHECK(abs(determinant(w.exponents)) == abs(determinant(wt.exponents)));
        CHECK(!charges(wt).q.empty());
    }

    CHECK(milnor_number(transpose(P("x^3 + x*y^3"))) == 7);
    CHECK(milnor_number(transpose(P("x^3 + y^5"))) == 8);
    CHECK(milnor_number(P("x^3 + x*y^2")) == 4);
    CHECK(milnor_number(transpose(P("x^3 + x*y^2"))) == 5);
}

TEST_CASE("restriction to fixed loci") {
    auto loop = P("x^3*y + x*y^5");
    auto none = restrict_to_fixed(loop, {});
    CHECK(none.vars.empty());
    CHECK(none.coeffs.empty());
    auto x_only = restrict_to_fixed(loop, {0});
    CHECK(x_only.vars == std::vector<std::string>{"x"});
    CHECK(x_only.coeffs.empty());

    auto p8 = restrict_to_fixed(P("x^3 + y^3 + z^3"), {0, 2});
    CHECK(p8.vars == std::vector<std::string>{"x", "z"});
    REQUIRE(p8.coeffs.size() == 2);
    CHECK(p8.exponents.row(0) == iv({3, 0}));
    CHECK(p8.exponents.row(1) == iv({0, 3}));

    auto tail = restrict_to_fixed(P("x^3*y + y^4"), {1});
    REQUIRE(tail.coeffs.size() == 1);
    CHECK(tail.exponents.row(0) == iv({4}));

    auto restricted = restrict_to_fixed(P("x^3 + y^3 + z^3"), {0});
    auto basis = graded_jacobian_basis(restricted.exponents, restricted.coeffs, iv({1}), Int(3));
    CHECK(basis.monomials == std::vector<IVec>{iv({0}), iv({1})});
}
