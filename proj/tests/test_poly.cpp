#include <doctest.h>

#include <compare>
#include <numeric>

#include "helpers.hpp"
#include "singulant/error.hpp"

using namespace singulant;
using singulant::testing::TestRing;

TEST_CASE("field construction validates primes")
{
    CHECK_THROWS_AS(Field::prime(4), StructuralError);
    CHECK_THROWS_AS(Field::prime(1), StructuralError);
    CHECK(Field::prime(7).characteristic() == 7);
    auto F = Field::prime(5);
    CHECK(F.from_int(-1) == 4);
    CHECK(F.inv(Scalar(2)) == 3);
    CHECK(F.normalize(Scalar(1, 2)) == 3);
    auto Q = Field::rationals();
    Scalar h = Q.div(Scalar(2), Scalar(4));
    CHECK(h.get_num() == 1);
    CHECK(h.get_den() == 2);
}

TEST_CASE("ring arithmetic")
{
    TestRing R({"x", "y"});
    CHECK(R("(x+y)*(x-y)") == R("x^2 - y^2"));
    CHECK(R("x + y") + Polynomial(R.ring) == R("x+y"));
    CHECK(R("x - x").is_zero());

    TestRing F2({"x", "y"}, Field::prime(2));
    CHECK(F2("(x+y)^2") == F2("x^2 + y^2"));
}

TEST_CASE("ambient mismatch is a structural error")
{
    TestRing A({"x", "y"});
    TestRing B({"x", "y", "z"});
    CHECK_THROWS_AS(A("x") + B("x"), StructuralError);
    CHECK_THROWS_AS(A("x") * B("x"), StructuralError);
    CHECK_THROWS_AS(A("x").partial_derivative(2), StructuralError);
}

TEST_CASE("partial derivatives")
{
    TestRing R({"x", "y", "z"});
    CHECK(R("x^2").partial_derivative(0) == R("2*x"));
    CHECK(R("y*z").partial_derivative(0).is_zero());
    TestRing F2({"x"}, Field::prime(2));
    CHECK(F2("x^2").partial_derivative(0).is_zero());
}

TEST_CASE("monomial orders")
{
    auto grevlex = MonomialOrder::grevlex();
    Monomial x2y({2, 1, 0}), xyz({1, 1, 1});
    CHECK(grevlex.compare(x2y, xyz) > 0);
    auto lex = MonomialOrder::lex();
    CHECK(lex.compare(Monomial({1, 0}), Monomial({0, 9})) > 0);
    CHECK(grevlex.compare(x2y, x2y) == 0);
    auto block = MonomialOrder::block({1, 2});
    // First block dominates regardless of degree.
    CHECK(block.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
}

TEST_CASE("terms iterate in strictly decreasing order without zeros")
{
    std::mt19937_64 rng(11);
    TestRing R({"x", "y", "z"});
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = singulant::testing::random_polynomial(rng, R.ring, 6, 3) *
                       singulant::testing::random_polynomial(rng, R.ring, 4, 3);
        auto ts = p.terms();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            CHECK(sgn(ts[i].coeff) != 0);
            CHECK(ts[i].mono.degree() == std::accumulate(ts[i].mono.exponents().begin(),
                                                         ts[i].mono.exponents().end(), 0));
            if (i + 1 < ts.size())
                CHECK(R.ring->order().compare(ts[i].mono, ts[i + 1].mono) > 0);
        }
    }
}

TEST_CASE("property: distributivity and Leibniz rule")
{
    std::mt19937_64 rng(2024);
    for (auto field : {Field::rationals(), Field::prime(7)}) {
        TestRing R({"x", "y", "z"}, field);
        for (int trial = 0; trial < 100; ++trial) {
            auto p = singulant::testing::random_polynomial(rng, R.ring, 4, 3);
            auto q = singulant::testing::random_polynomial(rng, R.ring, 4, 3);
            auto r = singulant::testing::random_polynomial(rng, R.ring, 3, 3);
            CHECK((p + q) * r == p * r + q * r);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK((p * q).partial_derivative(i) == p * q.partial_derivative(i) + q * p.partial_derivative(i));
        }
    }
}

TEST_CASE("property: monomial orders are multiplicative with 1 minimal")
{
    std::mt19937_64 rng(5);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block({2, 2})}) {
        for (int trial = 0; trial < 300; ++trial) {
            auto a = singulant::testing::random_monomial(rng, 4, 3);
            auto b = singulant::testing::random_monomial(rng, 4, 3);
            auto c = singulant::testing::random_monomial(rng, 4, 3);
            auto ab = ord.compare(a, b);
            CHECK(ord.compare(a * c, b * c) == ab);
            CHECK(ord.compare(b, a) == (0 <=> ab));
            CHECK(ord.compare(Monomial(4), a) <= 0);
        }
    }
}

TEST_CASE("exact division")
{
    TestRing R({"x", "y"});
    CHECK(divide_exact(R("x^2 - y^2"), R("x + y")) == R("x - y"));
    CHECK_THROWS_AS(divide_exact(R("x^2 + 1"), R("x")), StructuralError);
}

TEST_CASE("printing round-trips through the parser")
{
    std::mt19937_64 rng(99);
    TestRing R({"x", "y", "w"});
    for (int trial = 0; trial < 100; ++trial) {
        auto p = singulant::testing::random_polynomial(rng, R.ring, 5, 4).scaled(Scalar(trial % 5 + 1, 3));
        CHECK(R(R.str(p)) == p);
    }
    CHECK(R.str(R("-x^2*y + 3*w - 1")) == "-x^2*y + 3*w - 1");
}

TEST_CASE("parse errors carry positions")
{
    TestRing R({"x", "y"});
    try {
        R("x + q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(R("x +"), ParseError);
    CHECK_THROWS_AS(R("x / y"), ParseError);
}
