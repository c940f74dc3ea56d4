#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace fibtc;
using testing_support::E;
using testing_support::P;
using testing_support::sig;

namespace {

PresentationPtr milnor(int n)
{
    return q_tilde_ring(testing_support::point_bundle(Field::R, n + 1, CoefficientRing::F2),
                        CoefficientRing::F2)
        .ring;
}

}  // namespace

TEST_SUITE("presentation")
{
    TEST_CASE("Grassmann presentation of G2(R^3) completes to rank 3")
    {
        auto s = sig(CoefficientRing::F2, {{"Y", 1}, {"Z", 2}});
        RingPresentation raw(s, {P("Y^2+Z", s), P("Z*Y", s)}, NormalFormStrategy::GroebnerF2, 20);
        CHECK_FALSE(raw.is_complete());
        RingPresentation done = complete(raw);
        REQUIRE(done.is_complete());
        const auto& basis = done.reducers();
        CHECK(std::find(basis.begin(), basis.end(), P("Z+Y^2", s)) != basis.end());
        CHECK(done.reduce(P("Z*Y", s)).is_zero());
        CHECK(done.reduce(P("Z", s)) == P("Y^2", s));
        std::size_t total = 0;
        for (int deg = 0; deg <= 20; ++deg)
            total += quotient_dimension(done, deg);
        CHECK(total == 3);
        CHECK(quotient_dimension(done, 0) == 1);
        CHECK(quotient_dimension(done, 1) == 1);
        CHECK(quotient_dimension(done, 2) == 1);
        CHECK(quotient_dimension(done, 3) == 0);
        CHECK(top_degree(done) == 20);
    }

    TEST_CASE("tower presentations are already complete")
    {
        auto s = sig(CoefficientRing::F2, {{"T", 1}});
        RingPresentation r(s, {P("T^3", s)}, NormalFormStrategy::MonicTower);
        CHECK(r.is_complete());
        RingPresentation c = complete(r);
        CHECK(c.relations() == r.relations());
        CHECK(c.reducers() == r.reducers());
        CHECK(top_degree(c) == 2);
    }

    TEST_CASE("projective relation reduces the top power")
    {
        for (int n = 1; n <= 4; ++n) {
            std::vector<Generator> gens;
            for (int i = 1; i <= n + 1; ++i)
                gens.push_back({"w" + std::to_string(i), i});
            gens.push_back({"T", 1});
            auto s = sig(CoefficientRing::F2, gens);
            std::string tail;
            for (int i = 1; i <= n + 1; ++i)
                tail += " + w" + std::to_string(i) + (i <= n ? "*T^" + std::to_string(n + 1 - i) : "");
            RingPresentation r(s, {P("T^" + std::to_string(n + 1) + tail, s)},
                               NormalFormStrategy::MonicTower);
            CHECK(r.reduce(P("T^" + std::to_string(n + 1), s)) == P(tail.substr(3), s));
        }
    }

    TEST_CASE("Milnor ring n=2: reduction of T^4 matches the oracle")
    {
        auto ring = milnor(2);
        Polynomial nf = ring->reduce(P("T^4", ring->signature()));
        oracle::IdealPiece ideal({oracle::from(P("S^3", ring->signature())),
                                  oracle::from(P("T^2+S*T+S^2", ring->signature()))},
                                 {1, 1}, 4);
        CHECK(ideal.contains(oracle::add(oracle::from(P("T^4", ring->signature())),
                                         oracle::from(nf), true)));
        CHECK(nf.is_zero() == ideal.contains(oracle::from(P("T^4", ring->signature()))));
    }

    TEST_CASE("oracle quotient dimensions match standard monomials")
    {
        auto ring = milnor(4);
        std::vector<oracle::Poly> rels;
        for (const auto& r : ring->relations())
            rels.push_back(oracle::from(r));
        for (int deg = 0; deg <= 9; ++deg) {
            oracle::IdealPiece ideal(rels, {1, 1}, deg);
            CHECK(ideal.ambient() - ideal.rank() == quotient_dimension(*ring, deg));
        }
        oracle::IdealPiece two(rels, {1, 1}, 2);
        CHECK_FALSE(two.contains(oracle::from(P("T^2", ring->signature()))));
    }

    TEST_CASE("zero tests in the Milnor rings")
    {
        CHECK(is_zero(E("S^3", milnor(2))));
        CHECK_FALSE(is_zero(RingElement::one(milnor(2))));
        CHECK(is_zero(RingElement(milnor(2), Polynomial(milnor(2)->signature()))));
        CHECK_FALSE(is_zero(E("(T+S)^6", milnor(4))));
        CHECK(is_zero(E("(T+S)^7", milnor(4))));
    }

    TEST_CASE("normal forms are idempotent and multiplicative")
    {
        auto ring = milnor(4);
        auto s = ring->signature();
        Polynomial a = P("T^3 + S*T^2 + S^4", s);
        Polynomial b = P("T^2*S + S^3", s);
        Polynomial na = ring->reduce(a);
        CHECK(ring->reduce(na) == na);
        CHECK(ring->reduce(a * b) == ring->reduce(na * ring->reduce(b)));
        CHECK(ring->reduce(a + b) == ring->reduce(a) + ring->reduce(b));
    }

    TEST_CASE("module coordinates of one")
    {
        auto ring = milnor(2);
        auto c = module_coordinates(RingElement::one(ring), "T", 1);
        REQUIRE(c.size() == 2);
        CHECK(c[0] == Polynomial::one(ring->signature()));
        CHECK(c[1].is_zero());
        auto d = module_coordinates(E("T*S + S^2", ring), "T", 1);
        CHECK(d[0] == P("S^2", ring->signature()));
        CHECK(d[1] == P("S", ring->signature()));
        CHECK_THROWS_AS(module_coordinates(RingElement::one(ring), "Q", 1), PresentationError);
    }

    TEST_CASE("degreewise freeness check")
    {
        auto ring = milnor(2);
        CHECK(verify_free_basis(*ring, "T", 1, 4));
        CHECK_FALSE(verify_free_basis(*ring, "T", 2, 4));
        CHECK_FALSE(verify_free_basis(*ring, "T", 0, 4));
    }

    TEST_CASE("top degree and caps")
    {
        CHECK(top_degree(*milnor(2)) == 3);
        CHECK(top_degree(*milnor(4)) == 7);
        auto free = sig(CoefficientRing::F2, {{"x", 1}});
        CHECK_FALSE(top_degree(RingPresentation(free, {}, NormalFormStrategy::MonicTower)));
        auto s = sig(CoefficientRing::F2, {{"a", 1}, {"T", 1}});
        RingPresentation capped(s, {P("T^2 + a*T", s)}, NormalFormStrategy::MonicTower,
                                std::nullopt, {{1, 3}});
        CHECK(capped.vanishes(Monomial({4, 0}, *s)));
        CHECK_FALSE(capped.vanishes(Monomial({3, 1}, *s)));
        CHECK(top_degree(capped) == 4);
        CHECK(capped.reduce(P("a^3*T^2", s)).is_zero());
        CHECK(capped.reduce(P("a^2*T^2", s)) == P("a^3*T", s));
    }

    TEST_CASE("invalid presentations are rejected")
    {
        auto s = sig(CoefficientRing::F2, {{"S", 1}, {"T", 1}});
        CHECK_THROWS_AS(RingPresentation(s, {P("S^2 + T", s)}, NormalFormStrategy::MonicTower),
                        PresentationError);
        CHECK_THROWS_AS(RingPresentation(s, {P("S*T", s)}, NormalFormStrategy::MonicTower),
                        PresentationError);
        CHECK_THROWS_AS(RingPresentation(s, {P("S^2", s), P("T^2", s), P("T^3 + S^3", s)},
                                         NormalFormStrategy::MonicTower),
                        PresentationError);
        CHECK_THROWS_AS(RingPresentation(s, {P("T^2 + T*S", s), P("S^2 + T*S", s)},
                                         NormalFormStrategy::MonicTower),
                        PresentationError);
        CHECK_THROWS_AS(RingPresentation(s, {P("1", s)}, NormalFormStrategy::MonicTower),
                        PresentationError);
        auto z = sig(CoefficientRing::Integers, {{"S", 2}});
        CHECK_THROWS_AS(RingPresentation(z, {P("2*S^2", z)}, NormalFormStrategy::MonicTower),
                        PresentationError);
        CHECK_THROWS_AS(RingPresentation(z, {P("S^2", z)}, NormalFormStrategy::GroebnerF2, 4),
                        PresentationError);
        CHECK_THROWS_AS(completed(RingPresentation(s, {P("S^2+S*T", s)},
                                                   NormalFormStrategy::GroebnerF2)),
                        PresentationError);
        RingPresentation open(s, {P("S^2+S*T", s)}, NormalFormStrategy::GroebnerF2, 4);
        CHECK_THROWS_AS(open.reduce(P("S", s)), PresentationError);
    }

    TEST_CASE("integral tower keeps signs")
    {
        auto z = sig(CoefficientRing::Integers, {{"S", 2}});
        RingPresentation r(z, {P("-S^2", z)}, NormalFormStrategy::MonicTower);
        CHECK(r.reduce(P("3*S^2 + S", z)) == P("S", z));
        auto w = sig(CoefficientRing::Integers, {{"a", 2}, {"S", 2}});
        RingPresentation t(w, {P("a^2", w), P("S^2 - a*S", w)}, NormalFormStrategy::MonicTower);
        CHECK(t.reduce(P("S^3", w)).is_zero());
        CHECK(t.reduce(P("S^2", w)) == P("a*S", w));
    }

    TEST_CASE("elements compose within one ring only")
    {
        auto a = milnor(2);
        auto b = milnor(4);
        CHECK_THROWS_AS(RingElement::one(a) + RingElement::one(b), RingMismatch);
        CHECK(E("T+S", a).pow(3) == E("(T+S)^3", a));
        CHECK(RingElement::generator(a, "S") * RingElement::generator(a, "T") == E("S*T", a));
    }

    TEST_CASE("F2 span pivots on leading monomials")
    {
        auto s = sig(CoefficientRing::F2, {{"S", 1}, {"T", 1}});
        F2Span span;
        CHECK(span.insert(P("T^2 + S*T", s)));
        CHECK(span.insert(P("S*T + S^2", s)));
        CHECK_FALSE(span.insert(P("T^2 + S^2", s)));
        CHECK(span.contains(P("T^2 + S^2", s)));
        CHECK_FALSE(span.contains(P("T^2", s)));
        CHECK(span.rank() == 2);
    }

    TEST_CASE("reduction mod 2 of an integral tower")
    {
        auto w = sig(CoefficientRing::Integers, {{"a", 2}, {"S", 2}});
        RingPresentation t(w, {P("a^2", w), P("S^2 - 3*a*S", w)}, NormalFormStrategy::MonicTower);
        RingPresentation m = reduce_mod2(t);
        CHECK(m.coefficients() == CoefficientRing::F2);
        CHECK(m.reduce(P("S^2", m.signature())) == P("a*S", m.signature()));
    }

    TEST_CASE("Groebner completion matches the oracle on a non-monic base")
    {
        auto s = sig(CoefficientRing::F2, {{"x", 1}, {"y", 1}});
        auto ring = completed(RingPresentation(s, {P("x^2 + x*y", s), P("y^3", s)},
                                               NormalFormStrategy::GroebnerF2, 6));
        auto cmp = oracle::compare_with_library(*ring, 7);
        CHECK(cmp.monomials > 20);
        CHECK(cmp.mismatches == 0);
    }
}
