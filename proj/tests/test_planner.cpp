#include <doctest.h>

#include <random>

#include "fibtc/planner.hpp"

using namespace fibtc;

namespace {

SpherePoint random_point(std::size_t dim, std::mt19937_64& rng)
{
    return SpherePoint(to_real(random_unit_vector(Field::R, dim, rng)));
}

}  // namespace

TEST_SUITE("planner")
{
    TEST_CASE("complex structure rotates by a quarter turn")
    {
        SpherePoint u({0.6, 0.0, 0.8, 0.0});
        SpherePoint j = complex_structure(u);
        CHECK(distance(j.coords(), {-0.8, 0.0, 0.6, 0.0}) < 1e-12);
        CHECK(std::abs(dot(j, u)) < 1e-12);
        CHECK(distance(complex_structure(j), -u) < 1e-12);
        CHECK_THROWS_AS(complex_structure(SpherePoint({1.0, 0.0, 0.0})), GeometryError);
    }

    TEST_CASE("sphere planner for S^3 passes every check")
    {
        Planner p = build_sphere_planner(3);
        CHECK(p.rules.size() == 2);
        PlannerReport r = verify_planner(p, 2000, 42);
        CHECK(r.endpoint_error < 1e-9);
        CHECK(r.diagonal_error < 1e-9);
        CHECK(r.unit_norm_error < 1e-9);
        CHECK(r.cover_failures == 0);
        CHECK(r.continuity_violations == 0);
        CHECK(r.continuity_ratio <= 1.0);
        CHECK(r.equivariance_error < 1e-9);
        CHECK(r.passed());
    }

    TEST_CASE("each rule meets the endpoint contract inside its domain")
    {
        for (int n : {1, 3, 5}) {
            Planner p = build_sphere_planner(n);
            std::mt19937_64 rng(static_cast<std::uint64_t>(n));
            for (int i = 0; i < 200; ++i) {
                SpherePoint u = random_point(static_cast<std::size_t>(n + 1), rng);
                SpherePoint v = i % 4 == 0 ? -u : random_point(static_cast<std::size_t>(n + 1), rng);
                bool covered = false;
                for (const auto& rule : p.rules) {
                    if (!rule.domain(u, v))
                        continue;
                    covered = true;
                    CHECK(distance(rule.path(1, u, v), u) < 1e-9);
                    CHECK(distance(rule.path(-1, u, v), v) < 1e-9);
                    for (double t : {-0.75, -0.5, 0.0, 0.5})
                        CHECK(std::abs(norm(rule.path(t, u, v).coords()) - 1) < 1e-9);
                }
                CHECK(covered);
                for (const auto& rule : p.rules)
                    if (rule.domain(u, u))
                        for (double t : {-1.0, -0.3, 0.0, 0.7})
                            CHECK(distance(rule.path(t, u, u), u) < 1e-9);
            }
        }
    }

    TEST_CASE("the section rule reaches antipodal pairs")
    {
        Planner p = build_sphere_planner(3);
        SpherePoint u({1.0, 0.0, 0.0, 0.0});
        const PlannerRule& section = p.rules[1];
        REQUIRE(section.domain(u, -u));
        CHECK_FALSE(p.rules[0].domain(u, -u));
        CHECK(distance(section.path(0, u, -u), complex_structure(u)) < 1e-9);
    }

    TEST_CASE("geodesics alone leave antipodal pairs uncovered")
    {
        PlannerReport r = verify_planner(geodesic_only_planner(1), 100, 1);
        CHECK(r.cover_failures > 0);
        CHECK_FALSE(r.passed());
        CHECK(r.endpoint_error < 1e-9);
    }

    TEST_CASE("even spheres have no planner here")
    {
        CHECK_THROWS_AS(build_sphere_planner(2), GeometryError);
        CHECK_THROWS_AS(build_sphere_planner(0), GeometryError);
        CHECK_THROWS_AS(build_sphere_planner(3, 2), GeometryError);
        try {
            build_sphere_planner(4);
        } catch (const GeometryError& e) {
            CHECK(std::string(e.what()).find("section") != std::string::npos);
        }
    }

    TEST_CASE("reports are deterministic")
    {
        Planner p = build_sphere_planner(1);
        std::string a = verify_planner(p, 300, 9).serialize();
        std::string b = verify_planner(p, 300, 9).serialize();
        CHECK(a == b);
        CHECK(a.find("cover_failures=0") != std::string::npos);
        CHECK(a.find("passed=true") != std::string::npos);
        CHECK(a != verify_planner(p, 300, 10).serialize());
    }
}
