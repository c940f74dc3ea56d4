#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace fibtc;
using testing_support::P;
using testing_support::sig;

namespace {

const SignaturePtr& st2()
{
    static SignaturePtr s = sig(CoefficientRing::F2, {{"S", 1}, {"T", 1}});
    return s;
}

const SignaturePtr& stz()
{
    static SignaturePtr s = sig(CoefficientRing::Integers, {{"S", 2}, {"T", 2}});
    return s;
}

}  // namespace

TEST_SUITE("polynomial")
{
    TEST_CASE("addition cancels in characteristic two")
    {
        CHECK((P("T+S", st2()) + P("T+S", st2())).is_zero());
        CHECK(P("T^2+S^2", st2()) + P("(T+S)^2", st2()) == Polynomial(st2()));
    }

    TEST_CASE("integer addition keeps both terms")
    {
        Polynomial p = P("T", stz()) + P("S", stz());
        CHECK(p.size() == 2);
        CHECK(p == P("S+T", stz()));
    }

    TEST_CASE("difference of squares over the integers")
    {
        CHECK(P("T-S", stz()) * P("T+S", stz()) == P("T^2-S^2", stz()));
    }

    TEST_CASE("telescoping product checks the pair ring symmetry")
    {
        for (int i = 1; i <= 6; ++i) {
            Polynomial sum(stz());
            for (int j = 0; j <= i; ++j)
                sum += pow(P("S", stz()), j) * pow(P("T", stz()), i - j);
            CHECK(P("T-S", stz()) * sum ==
                  pow(P("T", stz()), i + 1) - pow(P("S", stz()), i + 1));
        }
    }

    TEST_CASE("one is the multiplicative identity")
    {
        Polynomial p = P("S^3 + S*T + T^2", st2());
        CHECK(Polynomial::one(st2()) * p == p);
        CHECK(pow(p, 0) == Polynomial::one(st2()));
    }

    TEST_CASE("Frobenius and small powers")
    {
        CHECK(P("T+S", st2()) * P("T+S", st2()) == P("T^2+S^2", st2()));
        CHECK(pow(P("T+S", st2()), 2) == P("T^2+S^2", st2()));
        CHECK(pow(P("T+S", st2()), 6) == P("T^6+T^4*S^2+T^2*S^4+S^6", st2()));
    }

    TEST_CASE("power agrees with the naive oracle")
    {
        Polynomial a = P("T+S", st2());
        oracle::Poly naive{{{0, 0}, 1}};
        for (int k = 0; k <= 10; ++k) {
            CHECK(oracle::from(pow(a, k)) == naive);
            naive = oracle::mul(naive, oracle::from(a), true);
        }
    }

    TEST_CASE("binomial coefficients are exact over the integers")
    {
        Polynomial p = pow(P("S+T", stz()), 40);
        Monomial m({20, 20}, *stz());
        CHECK(p.coefficient(m) == Integer("137846528820"));
        Polynomial big = pow(P("2*S", stz()), 100);
        CHECK(big.leading_coefficient() == Integer(1) << 100);
    }

    TEST_CASE("products of homogeneous polynomials are homogeneous")
    {
        Polynomial a = P("S^2 + S*T", st2());
        Polynomial b = P("T^3 + S^3 + S*T^2", st2());
        Polynomial c = a * b;
        CHECK(c.is_homogeneous());
        CHECK(c.degree() == 5);
        CHECK_FALSE(P("S + T^2", st2()).is_homogeneous());
    }

    TEST_CASE("graded lex order: degree first, later generators dominate")
    {
        auto s = sig(CoefficientRing::F2, {{"x", 1}, {"y", 1}});
        MonomialOrder less;
        CHECK(less(Monomial({2, 0}, *s), Monomial({1, 1}, *s)));
        CHECK(less(Monomial({1, 1}, *s), Monomial({0, 2}, *s)));
        CHECK(less(Monomial({0, 2}, *s), Monomial({3, 0}, *s)));
        CHECK(P("x^2 + x*y + y^2", s).leading_monomial() == Monomial({0, 2}, *s));
        auto w = sig(CoefficientRing::F2, {{"x", 1}, {"y", 2}});
        CHECK(P("x^2 + y", w).leading_monomial() == Monomial({0, 1}, *w));
    }

    TEST_CASE("mismatched signatures are rejected")
    {
        CHECK_THROWS_AS(P("S", st2()) + P("S", stz()), RingMismatch);
        CHECK_THROWS_AS(P("S", st2()) * P("S", stz()), RingMismatch);
        auto other = sig(CoefficientRing::F2, {{"S", 1}, {"U", 1}});
        CHECK_THROWS_AS(P("S", st2()) + P("S", other), RingMismatch);
    }

    TEST_CASE("odd generators over the integers are rejected")
    {
        CHECK_THROWS_AS(sig(CoefficientRing::Integers, {{"x", 1}}), AlgebraError);
        CHECK_THROWS_AS(sig(CoefficientRing::F2, {{"x", 0}}), AlgebraError);
        CHECK_THROWS_AS(sig(CoefficientRing::F2, {{"x", 1}, {"x", 2}}), AlgebraError);
    }

    TEST_CASE("lift, swap and substitution")
    {
        auto wide = sig(CoefficientRing::F2, {{"a", 1}, {"S", 1}, {"T", 1}});
        CHECK(lift(P("S*T + T^2", st2()), wide) == P("S*T + T^2", wide));
        CHECK(lift(P("3*S + 2*T", stz()), mod2_signature(stz())) == P("S", mod2_signature(stz())));
        CHECK_THROWS_AS(lift(P("a", wide), st2()), RingMismatch);
        CHECK(swap_generators(P("S^2*T + S", st2()), "S", "T") == P("T^2*S + T", st2()));
        CHECK(substitute_zero(P("S^2*T + S + T^3", st2()), "S") == P("T^3", st2()));
    }

    TEST_CASE("render lists terms in decreasing order")
    {
        CHECK(render(P("S + T", st2())) == "T + S");
        CHECK(render(P("S^2*T^3", st2())) == "S^2*T^3");
        CHECK(render(Polynomial(st2())) == "0");
        CHECK(render(P("-2*S + 3*T", stz())) == "3*T - 2*S");
        CHECK(render(Polynomial::one(st2())) == "1");
    }
}
