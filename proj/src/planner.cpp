#include "fibtc/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fibtc {

namespace {

constexpr double kDomainMargin = 1e-6;

PlannerRule geodesic_rule()
{
    PlannerRule r;
    r.name = "geodesic";
    r.domain = [](const SpherePoint& u, const SpherePoint& v) {
        return dot(u, v) > -1 + kDomainMargin;
    };
    r.path = [](double t, const SpherePoint& u, const SpherePoint& v) { return rho_sphere(t, u, v); };
    r.speed_bound = std::numbers::pi / 2;
    r.symmetry = Symmetry::Orthogonal;
    return r;
}

SpherePoint section_path(double t, const SpherePoint& u, const SpherePoint& v)
{
    PiPreimage pre = pi_inverse(u, v);
    if (t <= -0.5)
        return pi_map(pre.u, pre.v, scale(pre.w, -2 * t - 1)).second;
    if (t <= 0.5)
        return sigma_sphere(complex_structure(pre.u), 2 * t, pre.u);
    return pi_map(pre.u, pre.v, scale(pre.w, 2 * t - 1)).first;
}

PlannerRule section_rule()
{
    PlannerRule r;
    r.name = "section";
    r.domain = [](const SpherePoint& u, const SpherePoint& v) {
        return distance(u, v) > kDomainMargin;
    };
    r.path = section_path;
    // Outer thirds move at most 2 * 2 = 4, the middle half circle at pi.
    r.speed_bound = 4;
    r.symmetry = Symmetry::Unitary;
    return r;
}

void require_dimension(int n)
{
    if (n < 1)
        throw GeometryError("sphere dimension must be at least 1");
}

}  // namespace

SpherePoint complex_structure(const SpherePoint& u)
{
    const std::size_t dim = u.dim();
    if (dim % 2 != 0)
        throw GeometryError("complex structure needs an even-dimensional vector space");
    const std::size_t m = dim / 2;
    RealVector out(dim);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = -u[m + i];
        out[m + i] = u[i];
    }
    return SpherePoint(out);
}

Planner build_sphere_planner(int n, int k)
{
    require_dimension(n);
    if (k != 1)
        throw GeometryError("only the one-section planner (k = 1) is available");
    if (n % 2 == 0)
        throw GeometryError("no nowhere-zero section known on S^" + std::to_string(n) +
                            ": the complex-structure section needs odd n");
    return {n, {geodesic_rule(), section_rule()}};
}

Planner geodesic_only_planner(int n)
{
    require_dimension(n);
    return {n, {geodesic_rule()}};
}

bool PlannerReport::passed() const
{
    return endpoint_error <= kGeometryTolerance && diagonal_error <= kGeometryTolerance &&
           unit_norm_error <= kGeometryTolerance && cover_failures == 0 &&
           continuity_violations == 0 && equivariance_error <= kGeometryTolerance;
}

std::string PlannerReport::serialize() const
{
    auto line = [](const char* key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s=%.3e\n", key, value);
        return std::string(buf);
    };
    std::string out;
    out += "n=" + std::to_string(n) + "\n";
    out += "rules=" + std::to_string(rules) + "\n";
    out += "samples=" + std::to_string(samples) + "\n";
    out += "seed=" + std::to_string(seed) + "\n";
    out += "resolution=" + std::to_string(resolution) + "\n";
    out += line("endpoint_error", endpoint_error);
    out += line("diagonal_error", diagonal_error);
    out += line("unit_norm_error", unit_norm_error);
    out += "cover_failures=" + std::to_string(cover_failures) + "\n";
    out += line("continuity_ratio", continuity_ratio);
    out += "continuity_violations=" + std::to_string(continuity_violations) + "\n";
    out += line("equivariance_error", equivariance_error);
    out += std::string("passed=") + (passed() ? "true" : "false") + "\n";
    return out;
}

namespace {

SpherePoint random_point(std::size_t dim, std::mt19937_64& rng)
{
    return SpherePoint::normalize(to_real(random_unit_vector(Field::R, dim, rng)));
}

// A random isometry of R^dim as a function; for Unitary it is C-linear for
// the complex structure J.
std::function<SpherePoint(const SpherePoint&)> random_isometry(Symmetry s, std::size_t dim,
                                                              std::mt19937_64& rng)
{
    if (s == Symmetry::Orthogonal) {
        auto g = random_unitary(Field::R, dim, rng);
        return [g](const SpherePoint& x) {
            return SpherePoint::normalize(to_real(act(g, from_real(Field::R, x.coords()))));
        };
    }
    const std::size_t m = dim / 2;
    auto g = random_unitary(Field::C, m, rng);
    return [g, m](const SpherePoint& x) {
        KVector z;
        for (std::size_t i = 0; i < m; ++i)
            z.emplace_back(Field::C, x[i], x[m + i]);
        KVector gz = act(g, z);
        RealVector out(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            out[i] = gz[i][0];
            out[m + i] = gz[i][1];
        }
        return SpherePoint::normalize(out);
    };
}

}  // namespace

PlannerReport verify_planner(const Planner& p, int samples, std::uint64_t seed)
{
    PlannerReport rep;
    rep.n = p.n;
    rep.rules = p.rules.size();
    rep.samples = samples;
    rep.seed = seed;

    const std::size_t dim = static_cast<std::size_t>(p.n) + 1;
    const double dt = 1.0 / rep.resolution;
    const int steps = 2 * rep.resolution;
    const double probe[] = {-1, -0.75, -0.5, -0.25, 0, 0.25, 0.5, 0.75, 1};
    std::mt19937_64 rng(seed);

    for (int i = 0; i < samples; ++i) {
        SpherePoint u = random_point(dim, rng);
        SpherePoint v = i % 8 == 0 ? u : i % 8 == 1 ? -u : random_point(dim, rng);
        const bool diagonal = i % 8 == 0;

        bool covered = false;
        for (const auto& rule : p.rules) {
            if (!rule.domain(u, v))
                continue;
            covered = true;

            rep.endpoint_error = std::max({rep.endpoint_error, distance(rule.path(1, u, v), u),
                                           distance(rule.path(-1, u, v), v)});
            if (diagonal)
                for (double t : probe)
                    rep.diagonal_error = std::max(rep.diagonal_error, distance(rule.path(t, u, v), u));

            SpherePoint prev = rule.path(-1, u, v);
            for (int j = 1; j <= steps; ++j) {
                SpherePoint cur = rule.path(-1 + j * dt, u, v);
                rep.unit_norm_error = std::max(rep.unit_norm_error, std::abs(norm(cur.coords()) - 1));
                double ratio = distance(prev, cur) / (rule.speed_bound * dt + 1e-6);
                rep.continuity_ratio = std::max(rep.continuity_ratio, ratio);
                if (ratio > 1)
                    ++rep.continuity_violations;
                prev = cur;
            }

            auto g = random_isometry(rule.symmetry, dim, rng);
            SpherePoint gu = g(u);
            SpherePoint gv = g(v);
            if (!rule.domain(gu, gv))
                continue;
            for (double t : probe)
                rep.equivariance_error = std::max(
                    rep.equivariance_error, distance(rule.path(t, gu, gv), g(rule.path(t, u, v))));
        }
        if (!covered)
            ++rep.cover_failures;
    }
    return rep;
}

}  // namespace fibtc
