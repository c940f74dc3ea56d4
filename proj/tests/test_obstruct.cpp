#include <doctest.h>

#include "fibtc/obstruct.hpp"
#include "support.hpp"

using namespace fibtc;
using testing_support::E;
using testing_support::P;
using testing_support::point_bundle;

namespace {

BundleSpec over_rp3(const std::string& w1, const std::string& w2)
{
    auto base = testing_support::truncated_poly(3);
    auto s = base->signature();
    return make_bundle(Field::R, 2, base, {P(w1, s), P(w2, s)});
}

std::string monomial(int t_exp, int s_exp)
{
    return "T^" + std::to_string(t_exp) + "*S^" + std::to_string(s_exp);
}

}  // namespace

TEST_SUITE("obstruct")
{
    TEST_CASE("minimal vanishing powers")
    {
        ProjectiveRing p = projective_ring(point_bundle(Field::R, 4, CoefficientRing::F2),
                                           CoefficientRing::F2);
        CHECK(min_k_vanishing(p.e_zeta, 10) == MinK{2});
        CHECK(min_k_vanishing(RingElement(p.ring, Polynomial(p.ring->signature())), 10) == MinK{1});
        CHECK(min_k_vanishing(RingElement::one(p.ring), 10) == MinK{NotFoundUpTo{10}});
        CHECK(min_k_vanishing(p.e_eta, 10) == MinK{4});
        CHECK(min_k_vanishing(p.e_eta, 3) == MinK{NotFoundUpTo{3}});

        QTildeRing q = q_tilde_ring(point_bundle(Field::R, 5, CoefficientRing::F2),
                                    CoefficientRing::F2);
        VanishingSearch s = search_vanishing(q.e_alpha_tilde, 20);
        CHECK(s.min_k == MinK{7});
        CHECK(s.witness_k == 6);
        REQUIRE(s.witness);
        CHECK(RingElement(q.ring, *s.witness) == q.e_alpha_tilde.pow(6));
        CHECK_FALSE(s.witness->is_zero());
    }

    TEST_CASE("default search bound")
    {
        CHECK(default_k_max(point_bundle(Field::R, 5, CoefficientRing::F2)) == 12);
        CHECK(default_k_max(point_bundle(Field::H, 3, CoefficientRing::Integers)) == 26);
    }

    TEST_CASE("Milnor witnesses")
    {
        for (int r = 1; r <= 3; ++r) {
            const int n = 1 << r;
            QTildeRing q = q_tilde_ring(point_bundle(Field::R, n + 1, CoefficientRing::F2),
                                        CoefficientRing::F2);
            const int top = 2 * n - 1;
            CHECK(proj_pair_test(point_bundle(Field::R, n + 1, CoefficientRing::F2), top,
                                 CoefficientRing::F2));
            CHECK_FALSE(proj_pair_test(point_bundle(Field::R, n + 1, CoefficientRing::F2), top - 1,
                                       CoefficientRing::F2));
            RingElement expected =
                E(monomial(n, n - 2) + " + " + monomial(n - 2, n), q.ring);
            CHECK(q.e_alpha_tilde.pow(top - 1) == expected);
        }
    }

    TEST_CASE("complex pair: binomial witness")
    {
        for (int n = 1; n <= 5; ++n) {
            QTildeRing q = q_tilde_ring(point_bundle(Field::C, n + 1, CoefficientRing::Integers),
                                        CoefficientRing::Integers);
            Integer c = 1;
            for (int i = 0; i < n; ++i)
                c = c * (2 * n - 1 - i) / (i + 1);
            std::string sign = n % 2 ? "-" : "";
            RingElement rhs = E(sign + c.str() + "*(" + monomial(n - 1, n) + " - " +
                                    monomial(n, n - 1) + ")",
                                q.ring);
            CHECK(q.e_alpha_tilde.pow(2 * n - 1) == rhs);
            CHECK_FALSE(rhs.is_zero());
            CHECK(q.e_alpha_tilde.pow(2 * n).is_zero());
        }
        QTildeRing q2 = q_tilde_ring(point_bundle(Field::C, 3, CoefficientRing::Integers),
                                     CoefficientRing::Integers);
        const Polynomial& w = q2.e_alpha_tilde.pow(3).polynomial();
        REQUIRE(w.size() == 1);
        CHECK(abs(w.leading_coefficient()) % 3 == 0);
    }

    TEST_CASE("quaternionic pair vanishes exactly from k = 2n")
    {
        for (int n = 1; n <= 2; ++n) {
            BundleSpec b = point_bundle(Field::H, n + 1, CoefficientRing::Integers);
            CHECK_FALSE(proj_pair_test(b, 2 * n - 1, CoefficientRing::Integers));
            CHECK(proj_pair_test(b, 2 * n, CoefficientRing::Integers));
            CHECK(proj_pair_test(b, 4 * n - 1, CoefficientRing::Integers));
        }
    }

    TEST_CASE("sphere divisibility")
    {
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= 4; ++k)
                CHECK(sphere_divisibility_test(point_bundle(Field::R, n + 1, CoefficientRing::F2), k));
        CHECK(sphere_divisibility_test(over_rp3("x", "x^2"), 2));
        CHECK_FALSE(sphere_divisibility_test(over_rp3("x", "x^2"), 1));
        for (int k = 1; k <= 5; ++k)
            CHECK(sphere_divisibility_test(over_rp3("x", "0"), k) == (k >= 4));
        CHECK(sphere_divisibility_test(over_rp3("0", "x^2"), 1));
        CHECK(sphere_divisibility_test(over_rp3("x", "x^2"), 0) == false);
    }

    TEST_CASE("Gysin equivalence")
    {
        for (int n = 1; n <= 4; ++n)
            CHECK(gysin_equivalence_check(point_bundle(Field::R, n + 1, CoefficientRing::F2), 1));
        CHECK(gysin_equivalence_check(over_rp3("x", "x^2"), 2));
        CHECK_FALSE(gysin_equivalence_check(over_rp3("x", "0"), 3));
        CHECK(gysin_equivalence_check(over_rp3("x", "0"), 4));
        CHECK_FALSE(gysin_equivalence_check(point_bundle(Field::R, 3, CoefficientRing::F2), 0));
    }

    TEST_CASE("symmetrized sphere over a point")
    {
        for (int n = 1; n <= 8; ++n) {
            BundleSpec b = point_bundle(Field::R, n + 1, CoefficientRing::F2);
            CHECK_FALSE(symm_sphere_test(b, 1));
            CHECK(symm_sphere_test(b, 2));
        }
    }

    TEST_CASE("symmetrized sphere with vanishing top class")
    {
        auto base = testing_support::truncated_poly(5);
        auto s = base->signature();
        for (const char* w2 : {"x^2", "0"}) {
            BundleSpec b = make_bundle(Field::R, 3, base, {P("x", s), P(w2, s), P("0", s)});
            for (int k = 1; k <= 7; ++k) {
                bool wn_power_zero = base->reduce(pow(P(w2, s), static_cast<std::uint64_t>(k - 1)))
                                         .is_zero();
                CHECK(symm_sphere_test(b, k) == wn_power_zero);
            }
        }
    }

    TEST_CASE("closed forms in the x basis")
    {
        for (int n = 2; n <= 6; ++n)
            CHECK(closed_form_check(n));
        CHECK_THROWS_AS(closed_form_check(1), AlgebraError);
        for (int n = 1; n <= 5; ++n) {
            ProjectiveRing p = projective_ring(point_bundle(Field::R, n + 1, CoefficientRing::F2),
                                               CoefficientRing::F2);
            CHECK(p.e_zeta.pow(2).is_zero());
        }
    }

    TEST_CASE("x basis coordinates of e(zeta)")
    {
        auto base = testing_support::truncated_poly(6);
        auto s = base->signature();
        BundleSpec b = make_bundle(Field::R, 3, base, {P("x", s), P("x^2", s), P("x^3", s)});
        ProjectiveRing p = projective_ring(b, CoefficientRing::F2);
        auto c = x_basis_coordinates(p, b, p.e_zeta);
        REQUIRE(c.size() == 3);
        CHECK(c[0].is_zero());
        CHECK(c[1].is_zero());
        CHECK(c[2] == Polynomial::one(p.ring->signature()));
        auto one = x_basis_coordinates(p, b, RingElement::one(p.ring));
        CHECK(one[0] == Polynomial::one(p.ring->signature()));
    }

    TEST_CASE("Peterson: symmetrized projective criterion")
    {
        for (int r = 1; r <= 2; ++r) {
            const int n = 1 << r;
            BundleSpec b = point_bundle(Field::R, n + 1, CoefficientRing::F2);
            CHECK_FALSE(symm_proj_test(b, 2 * n - 1));
            CHECK(symm_proj_test(b, 2 * n));
            CHECK_FALSE(symm_proj_test(b, 1));
        }
        CHECK_THROWS_AS(symm_proj_test(point_bundle(Field::R, 3, CoefficientRing::F2), 0),
                        AlgebraError);
    }

    TEST_CASE("e(alpha)^k in the basis 1, X, .., X^d")
    {
        for (Field f : {Field::R, Field::C}) {
            const int d = real_dimension(f);
            BundleSpec b = point_bundle(f, 4, f == Field::R ? CoefficientRing::F2
                                                             : CoefficientRing::Integers);
            FederRing fr = feder_ring(b);
            auto sig = fr.ring->signature();
            for (int k = 1; k <= 5; ++k) {
                auto c = module_coordinates(fr.e_alpha.pow(static_cast<std::uint64_t>(k)), "X", d);
                REQUIRE(c.size() == static_cast<std::size_t>(d + 1));
                CHECK(c[0] == fr.ring->reduce(pow(P("Y", sig), static_cast<std::uint64_t>(k))));
                for (int j = 1; j < d; ++j)
                    CHECK(c[static_cast<std::size_t>(j)].is_zero());
                CHECK(c[static_cast<std::size_t>(d)] ==
                      fr.ring->reduce(pow(P("Y", sig), static_cast<std::uint64_t>(k - 1))));
            }
        }
    }

    TEST_CASE("point sphere table")
    {
        for (int n = 1; n <= 8; ++n) {
            PointSphereRow row = point_sphere_table(n);
            CHECK(row.n == n);
            if (n % 2) {
                CHECK(row.min_k == 1);
                CHECK(row.euler == 0);
            } else {
                CHECK(row.min_k == 2);
                CHECK(row.witness == 2);
                CHECK(row.euler == 2);
            }
        }
        CHECK_THROWS_AS(point_sphere_table(0), AlgebraError);
    }
}
