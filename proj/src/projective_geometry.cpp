#include "fibtc/projective_geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fibtc/sphere_geometry.hpp"

namespace fibtc {

ProjPoint::ProjPoint(KVector representative) : u_(std::move(representative))
{
    if (u_.empty())
        throw GeometryError("line needs a nonempty representative");
    field_ = u_[0].field();
    for (const auto& x : u_)
        if (x.field() != field_)
            throw GeometryError("representative mixes scalar fields");
    if (std::abs(norm(u_) - 1.0) > kScalarTolerance)
        throw GeometryError("line representative is not a unit vector");
}

ProjPoint ProjPoint::through(const KVector& v)
{
    KVector u = normalized(v);
    return ProjPoint(normalized(u));
}

KVector ProjPoint::canonical() const
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < u_.size(); ++i)
        if (u_[i].norm() > u_[best].norm())
            best = i;
    KScalar z = u_[best] * (1.0 / u_[best].norm());
    return left_mul(z.conj(), u_);
}

namespace {

// Phase z = p/|p| for p = <u, v>, so that <u, z v> = |p| is real and positive.
KScalar aligning_phase(const KScalar& p)
{
    return p * (1.0 / p.norm());
}

void require_same_space(const ProjPoint& a, const ProjPoint& b)
{
    if (a.dim() != b.dim() || a.field() != b.field())
        throw GeometryError("lines live in different spaces");
}

void require_range(double t, const char* what)
{
    if (!(t >= -1 - kScalarTolerance && t <= 1 + kScalarTolerance))
        throw GeometryError(std::string(what) + ": parameter " + std::to_string(t) +
                            " out of range");
}

void require_orthogonal(const ProjPoint& L, const ProjPoint& M, const char* what)
{
    require_same_space(L, M);
    if (hermitian(L.representative(), M.representative()).norm() > kGeometryTolerance)
        throw GeometryError(std::string(what) + ": lines are not orthogonal");
}

void require_in_line(const KVector& a_u, const ProjPoint& M, const char* what)
{
    if (a_u.size() != M.dim())
        throw GeometryError(std::string(what) + ": hom image has the wrong dimension");
    const KVector& m = M.representative();
    KVector off = sub(a_u, left_mul(hermitian(a_u, m), m));
    if (norm(off) > kGeometryTolerance)
        throw GeometryError(std::string(what) + ": hom image does not lie in M");
}

}  // namespace

double line_distance(const ProjPoint& a, const ProjPoint& b)
{
    require_same_space(a, b);
    const KVector& u = a.representative();
    const KVector& v = b.representative();
    KScalar p = hermitian(u, v);
    if (p.norm() == 0)
        return std::sqrt(2.0);
    return norm(sub(u, left_mul(aligning_phase(p), v)));
}

bool same_line(const ProjPoint& a, const ProjPoint& b, double tol)
{
    require_same_space(a, b);
    return 1 - hermitian(a.representative(), b.representative()).norm() < tol;
}

ProjPoint proj_rho(double t, const ProjPoint& L, const ProjPoint& M)
{
    require_range(t, "proj_rho");
    require_same_space(L, M);
    const KVector& u = L.representative();
    KScalar p = hermitian(u, M.representative());
    if (p.norm() <= kGeometryTolerance)
        throw GeometryError("proj_rho: lines are orthogonal");
    KVector v = left_mul(aligning_phase(p), M.representative());
    SpherePoint su = SpherePoint::normalize(to_real(u));
    SpherePoint sv = SpherePoint::normalize(to_real(v));
    return ProjPoint::through(from_real(L.field(), rho_sphere(t, su, sv).coords()));
}

ProjPoint proj_sigma(const KVector& a_u, double t, const ProjPoint& L, const ProjPoint& M)
{
    require_range(t, "proj_sigma");
    require_orthogonal(L, M, "proj_sigma");
    require_in_line(a_u, M, "proj_sigma");
    if (std::abs(norm(a_u) - 1.0) > kGeometryTolerance)
        throw GeometryError("proj_sigma: a is not an isometry");
    const double angle = std::numbers::pi * (t + 1) / 4;
    return ProjPoint::through(
        add(scale(L.representative(), std::sin(angle)), scale(a_u, std::cos(angle))));
}

std::pair<ProjPoint, ProjPoint> proj_pi_map(const ProjPoint& L, const ProjPoint& M,
                                            const KVector& a_u)
{
    require_orthogonal(L, M, "proj_pi_map");
    require_in_line(a_u, M, "proj_pi_map");
    const double r = norm(a_u);
    if (r > 1 + kScalarTolerance)
        throw GeometryError("proj_pi_map: |a| > 1");
    if (r == 0)
        return {L, M};
    const KVector& u = L.representative();
    KVector v = scale(a_u, 1.0 / r);
    return {ProjPoint::through(add(u, a_u)), ProjPoint::through(add(v, scale(u, r)))};
}

ProjPreimage proj_pi_inverse(const ProjPoint& X, const ProjPoint& Y)
{
    require_same_space(X, Y);
    const KVector& x = X.representative();
    KScalar p = hermitian(x, Y.representative());
    const double c = p.norm();
    if (1 - c <= kGeometryTolerance)
        throw GeometryError("proj_pi_inverse: equal lines");
    if (c == 0)
        return {X, Y, scale(x, 0.0)};

    KVector y = left_mul(aligning_phase(p), Y.representative());
    // 2t/(1 + t^2) = c with t in [0, 1), in the cancellation-free form.
    const double t = c / (1 + std::sqrt(1 - c * c));
    const double f = std::sqrt(1 + t * t) / (1 - t * t);
    KVector u = scale(sub(x, scale(y, t)), f);
    KVector v = scale(sub(y, scale(x, t)), f);
    ProjPoint L = ProjPoint::through(u);
    ProjPoint M = ProjPoint::through(v);
    return {L, M, scale(M.representative(), t)};
}

}  // namespace fibtc
